//! Brute-force ground truth: semistandard tableaux, the charge statistic,
//! lattice words with maj/des, ascents of lattice paths, and LR tableaux.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{CapCounter, Error, Result};
use crate::partitions::Partition;
use crate::qpoly::QPolynomial;

/// A filling given row by row (top row first); rows weakly increase,
/// columns strictly increase.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tableau {
    pub rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(Vec::len).collect())
    }

    /// `content[i]` counts entries equal to `i + 1`.
    pub fn content(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut c = vec![0; max];
        for &x in self.rows.iter().flatten() {
            c[x - 1] += 1;
        }
        c
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self.rows.windows(2).all(|pair| {
            pair[1].len() <= pair[0].len()
                && pair[1].iter().zip(&pair[0]).all(|(lo, hi)| lo > hi)
        });
        rows_ok && cols_ok && self.rows.iter().all(|r| r.iter().all(|&x| x >= 1))
    }

    /// Rows from bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }
}

/// Ways to extend `cur` (row lengths) by a horizontal strip of `size` cells
/// inside `outer`.
fn horizontal_strips(cur: &[usize], outer: &[usize], size: usize) -> Vec<Vec<usize>> {
    fn go(
        r: usize,
        left: usize,
        cur: &[usize],
        outer: &[usize],
        acc: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if r == outer.len() {
            if left == 0 {
                out.push(acc.clone());
            }
            return;
        }
        let limit = if r == 0 { outer[0] } else { outer[r].min(cur[r - 1]) };
        let base = cur[r];
        let most = limit.saturating_sub(base).min(left);
        for add in (0..=most).rev() {
            acc.push(base + add);
            go(r + 1, left - add, cur, outer, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(0, size, cur, outer, &mut Vec::with_capacity(outer.len()), &mut out);
    out
}

/// All semistandard tableaux of `shape` with the given content (a composition).
pub fn enumerate_ssyt(shape: &Partition, content: &[usize]) -> Result<Vec<Tableau>> {
    let total: usize = content.iter().sum();
    if total != shape.size() {
        return Err(Error::SizeMismatch {
            left: shape.size(),
            right: total,
        });
    }
    let outer = shape.parts().to_vec();
    let mut counter = CapCounter::new();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); outer.len()];
    fill(
        0,
        &vec![0; outer.len()],
        &outer,
        content,
        &mut rows,
        &mut counter,
        &mut out,
    )?;
    Ok(out)
}

fn fill(
    letter: usize,
    cur: &[usize],
    outer: &[usize],
    content: &[usize],
    rows: &mut Vec<Vec<usize>>,
    counter: &mut CapCounter,
    out: &mut Vec<Tableau>,
) -> Result<()> {
    if letter == content.len() {
        counter.tick()?;
        out.push(Tableau { rows: rows.clone() });
        return Ok(());
    }
    for next in horizontal_strips(cur, outer, content[letter]) {
        for (r, (&a, &b)) in cur.iter().zip(&next).enumerate() {
            rows[r].extend(std::iter::repeat_n(letter + 1, b - a));
        }
        fill(letter + 1, &next, outer, content, rows, counter, out)?;
        for (r, &a) in cur.iter().enumerate() {
            rows[r].truncate(a);
        }
    }
    Ok(())
}

/// Charge of a word whose content is a partition.
pub fn word_charge(word: &[usize]) -> Result<u64> {
    let max = word.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0usize; max];
    for &x in word {
        counts[x - 1] += 1;
    }
    if counts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::ContentNotPartition);
    }
    let mut used = vec![false; word.len()];
    let mut remaining = word.len();
    let mut total = 0u64;
    while remaining > 0 {
        // Standard subword: from the right, cyclically leftward, pick 1, 2, ...
        let mut pos = word.len();
        let mut index = 0u64;
        let mut letter = 1;
        loop {
            let found = (1..=word.len())
                .map(|step| (pos + word.len() - step) % word.len())
                .find(|&i| !used[i] && word[i] == letter);
            let Some(i) = found else { break };
            if letter > 1 && i > pos {
                index += 1;
            }
            total += index;
            used[i] = true;
            remaining -= 1;
            pos = i;
            letter += 1;
        }
    }
    Ok(total)
}

/// Lascoux–Schützenberger charge of the reading word.
pub fn charge_statistic(t: &Tableau) -> Result<u64> {
    word_charge(&t.reading_word())
}

/// `Σ_T q^{charge(T)}` over tableaux of shape `lambda` and content `mu`.
pub fn charge_generating_function(lambda: &Partition, mu: &Partition) -> Result<QPolynomial> {
    let mut p = QPolynomial::zero();
    for t in enumerate_ssyt(lambda, mu.parts())? {
        p += QPolynomial::q_pow(charge_statistic(&t)? as usize);
    }
    Ok(p)
}

/// A lattice word with its major index and descent count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeWord {
    pub letters: Vec<usize>,
    pub maj: usize,
    pub des: usize,
}

/// Every word with `weight[i]` copies of `i + 1` in which each prefix has
/// at least as many `j` as `j + 1`.
pub fn lattice_words(weight: &Partition) -> Result<Vec<LatticeWord>> {
    let w = weight.parts().to_vec();
    let n: usize = w.iter().sum();
    let mut counter = CapCounter::new();
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    let mut used = vec![0usize; w.len()];
    lattice_rec(&w, &mut used, &mut word, n, &mut counter, &mut out)?;
    Ok(out)
}

fn lattice_rec(
    w: &[usize],
    used: &mut Vec<usize>,
    word: &mut Vec<usize>,
    n: usize,
    counter: &mut CapCounter,
    out: &mut Vec<LatticeWord>,
) -> Result<()> {
    if word.len() == n {
        counter.tick()?;
        let mut maj = 0;
        let mut des = 0;
        for i in 1..n {
            if word[i - 1] > word[i] {
                maj += i;
                des += 1;
            }
        }
        out.push(LatticeWord {
            letters: word.clone(),
            maj,
            des,
        });
        return Ok(());
    }
    for l in 0..w.len() {
        if used[l] < w[l] && (l == 0 || used[l - 1] > used[l]) {
            used[l] += 1;
            word.push(l + 1);
            lattice_rec(w, used, word, n, counter, out)?;
            word.pop();
            used[l] -= 1;
        }
    }
    Ok(())
}

/// Counts of `d`-dimensional lattice paths from the origin to `(n, ..., n)`
/// inside `x_1 ≤ ... ≤ x_d`, by number of ascents `X_k X_l` with `k < l`.
pub fn lattice_paths_asc(d: usize, n: usize) -> Result<BTreeMap<usize, BigUint>> {
    let mut counter = CapCounter::new();
    let mut counts = vec![0usize; d];
    let mut out = BTreeMap::new();
    paths_rec(d, n, &mut counts, None, 0, &mut counter, &mut out)?;
    Ok(out)
}

fn paths_rec(
    d: usize,
    n: usize,
    counts: &mut Vec<usize>,
    last: Option<usize>,
    asc: usize,
    counter: &mut CapCounter,
    out: &mut BTreeMap<usize, BigUint>,
) -> Result<()> {
    if counts.iter().all(|&c| c == n) {
        counter.tick()?;
        *out.entry(asc).or_insert_with(BigUint::zero) += 1u32;
        return Ok(());
    }
    for k in 0..d {
        // stepping X_k keeps x_k ≤ x_{k+1}
        let ok = counts[k] < n && (k + 1 == d || counts[k] < counts[k + 1]);
        if ok {
            counts[k] += 1;
            let bump = usize::from(last.is_some_and(|l| l < k));
            paths_rec(d, n, counts, Some(k), asc + bump, counter, out)?;
            counts[k] -= 1;
        }
    }
    Ok(())
}

/// LR tableaux of shape `outer/inner` and the given content: semistandard
/// skew fillings whose reverse reading word (right to left, top to bottom)
/// is a lattice word.
pub fn count_lr_tableaux(
    outer: &Partition,
    inner: &Partition,
    content: &Partition,
) -> Result<BigUint> {
    if !outer.contains(inner) {
        return Err(Error::ShapeNotContained);
    }
    if outer.size() != inner.size() + content.size() {
        return Ok(BigUint::zero());
    }
    let outer_rows = outer.parts().to_vec();
    let start = inner.padded(outer_rows.len());
    let mut counter = CapCounter::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); outer_rows.len()];
    let mut total = BigUint::zero();
    lr_fill(
        0,
        &start,
        &start,
        &outer_rows,
        content.parts(),
        &mut rows,
        &mut counter,
        &mut total,
    )?;
    Ok(total)
}

#[allow(clippy::too_many_arguments)]
fn lr_fill(
    letter: usize,
    start: &[usize],
    cur: &[usize],
    outer: &[usize],
    content: &[usize],
    rows: &mut Vec<Vec<usize>>,
    counter: &mut CapCounter,
    total: &mut BigUint,
) -> Result<()> {
    if letter == content.len() {
        counter.tick()?;
        let word: Vec<usize> = rows.iter().flat_map(|r| r.iter().rev().copied()).collect();
        let mut seen = vec![0usize; content.len() + 1];
        let lattice = word.iter().all(|&x| {
            seen[x] += 1;
            x == 1 || seen[x] <= seen[x - 1]
        });
        if lattice {
            *total += BigUint::one();
        }
        return Ok(());
    }
    for next in horizontal_strips(cur, outer, content[letter]) {
        for (r, (&a, &b)) in cur.iter().zip(&next).enumerate() {
            rows[r].extend(std::iter::repeat_n(letter + 1, b - a));
        }
        lr_fill(letter + 1, start, &next, outer, content, rows, counter, total)?;
        for (r, &a) in cur.iter().enumerate() {
            rows[r].truncate(a - start[r]);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn ssyt_counts() {
        assert_eq!(enumerate_ssyt(&p("2,1"), &[1, 1, 1]).unwrap().len(), 2);
        for lam in partitions_of(6) {
            let ts = enumerate_ssyt(&lam, lam.parts()).unwrap();
            assert_eq!(ts.len(), 1);
            assert_eq!(charge_statistic(&ts[0]).unwrap(), 0);
        }
        let rect = enumerate_ssyt(&p("6,6"), &[1; 12]).unwrap();
        assert_eq!(rect.len(), 132);
        assert!(rect.iter().all(Tableau::is_semistandard));
        assert!(enumerate_ssyt(&p("2,1"), &[1, 1]).is_err());
    }

    #[test]
    fn charge_anchors() {
        let t = Tableau {
            rows: vec![vec![1, 2, 3, 6, 8, 9], vec![4, 5, 7, 10, 11, 12]],
        };
        assert_eq!(charge_statistic(&t).unwrap(), 48);
        let mut charges: Vec<u64> = enumerate_ssyt(&p("2,1"), &[1, 1, 1])
            .unwrap()
            .iter()
            .map(|t| charge_statistic(t).unwrap())
            .collect();
        charges.sort();
        assert_eq!(charges, vec![1, 2]);
        let bad = Tableau {
            rows: vec![vec![1, 2, 2]],
        };
        assert_eq!(charge_statistic(&bad), Err(Error::ContentNotPartition));
    }

    #[test]
    fn hook_kostka_foulkes() {
        let k = charge_generating_function(&p("3,1"), &p("1,1,1,1")).unwrap();
        assert_eq!(k, QPolynomial::from_i64s(3, &[1, 1, 1]));
        let k = charge_generating_function(&p("2,1,1"), &p("1,1,1,1")).unwrap();
        assert_eq!(k, QPolynomial::from_i64s(1, &[1, 1, 1]));
    }

    #[test]
    fn lattice_word_examples() {
        let ws = lattice_words(&p("2,2")).unwrap();
        let got: Vec<(Vec<usize>, usize, usize)> =
            ws.into_iter().map(|w| (w.letters, w.maj, w.des)).collect();
        assert_eq!(
            got,
            vec![(vec![1, 1, 2, 2], 0, 0), (vec![1, 2, 1, 2], 2, 1)]
        );
        let ws = lattice_words(&p("5")).unwrap();
        assert_eq!(ws.len(), 1);
        assert_eq!(ws[0].maj, 0);
        let mut by_des = vec![0u32; 7];
        for w in lattice_words(&p("4,4,4")).unwrap() {
            by_des[w.des] += 1;
        }
        assert_eq!(by_des, vec![1, 22, 113, 190, 113, 22, 1]);
    }

    #[test]
    fn path_examples() {
        let m = lattice_paths_asc(3, 1).unwrap();
        assert_eq!(m.into_iter().collect::<Vec<_>>(), vec![(0, BigUint::one())]);
        let m = lattice_paths_asc(2, 3).unwrap();
        let v: Vec<u32> = m.values().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(v, vec![1, 3, 1]);
        let m = lattice_paths_asc(3, 4).unwrap();
        let v: Vec<u32> = m.values().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(v, vec![1, 22, 113, 190, 113, 22, 1]);
    }

    #[test]
    fn lr_examples() {
        assert_eq!(count_lr_tableaux(&p("2"), &p("1"), &p("1")).unwrap(), BigUint::one());
        assert_eq!(
            count_lr_tableaux(&p("3,2,1"), &p("2,1"), &p("2,1")).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(
            count_lr_tableaux(&p("2,2"), &Partition::empty(), &p("2,2")).unwrap(),
            BigUint::one()
        );
        assert_eq!(
            count_lr_tableaux(&p("2"), &p("1,1"), &p("1")),
            Err(Error::ShapeNotContained)
        );
    }
}
