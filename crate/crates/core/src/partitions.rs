//! Partitions, rectangle sequences and their column statistics.
//!
//! A [`Partition`] is stored with trailing zeros stripped; every accessor
//! treats parts beyond the length as zero. A [`RectangleSequence`] is the
//! ordered list of rectangles `(width^height)` indexing a parabolic Kostka
//! polynomial.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, rejecting sequences that increase anywhere.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(format!("{parts:?}")));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Sorts an arbitrary sequence of parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The partition with column lengths `cols` (which must be weakly decreasing).
    pub fn from_columns(cols: &[usize]) -> Self {
        let rows = cols.first().copied().unwrap_or(0);
        let parts = (1..=rows)
            .map(|i| cols.iter().take_while(|&&c| c >= i).count())
            .collect();
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` counted from zero; zero past the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        Partition(self.columns())
    }

    /// Column lengths, i.e. the parts of the conjugate.
    pub fn columns(&self) -> Vec<usize> {
        let width = self.first();
        let mut cols = vec![0; width];
        for &p in &self.0 {
            for c in cols.iter_mut().take(p) {
                *c += 1;
            }
        }
        cols
    }

    /// Number of cells in the first `j` columns.
    pub fn column_sum(&self, j: usize) -> usize {
        self.0.iter().map(|&p| p.min(j)).sum()
    }

    /// Number of parts equal to `j`.
    pub fn multiplicity(&self, j: usize) -> usize {
        self.0.iter().filter(|&&p| p == j).count()
    }

    /// `n(λ) = Σ_a binom(λ'_a, 2)`.
    pub fn n_stat(&self) -> usize {
        self.columns().iter().map(|&c| c * c.saturating_sub(1) / 2).sum()
    }

    /// Number of standard Young tableaux, by the hook-length formula.
    pub fn syt_count(&self) -> BigUint {
        let cols = self.columns();
        let mut num = BigUint::one();
        for k in 2..=self.size() {
            num *= k;
        }
        let mut den = BigUint::one();
        for (i, &row) in self.0.iter().enumerate() {
            for (j, &col) in cols.iter().enumerate().take(row) {
                den *= (row - j) + (col - i) - 1;
            }
        }
        num / den
    }

    /// Dominance order `self ⊵ other` (partial sums), for any sizes.
    pub fn dominates(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// The sequence `(λ_1, μ_1, λ_2, μ_2, ...)`, which must be weakly decreasing.
    pub fn interleave(&self, other: &Partition) -> Result<Partition> {
        let len = self.len().max(other.len());
        let mut parts = Vec::with_capacity(2 * len);
        for i in 0..len {
            parts.push(self.part(i));
            parts.push(other.part(i));
        }
        Partition::new(parts)
    }

    /// `Nλ`, each part multiplied by `n`.
    pub fn scale(&self, n: usize) -> Partition {
        Partition::from_sorted(self.0.iter().map(|p| p * n).collect())
    }

    /// Cells `(row, col)` counted from zero.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    pub fn hook(&self, row: usize, col: usize) -> usize {
        let arm = self.part(row) - col - 1;
        let leg = self.0.iter().skip(row + 1).take_while(|&&p| p > col).count();
        arm + leg + 1
    }

    /// Whether `inner ⊆ self` as diagrams.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && (0..inner.len()).all(|i| inner.part(i) <= self.part(i))
    }

    pub fn padded(&self, len: usize) -> Vec<usize> {
        (0..len.max(self.len())).map(|i| self.part(i)).collect()
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, e.g. `4,4,3,3,2`. The empty string and `()` give the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of partitions of `n`.
pub fn partition_count(n: usize) -> BigUint {
    let mut p = vec![BigUint::from(0u32); n + 1];
    p[0] = BigUint::one();
    for part in 1..=n {
        for m in part..=n {
            let add = p[m - part].clone();
            p[m] += add;
        }
    }
    p[n].clone()
}

/// One rectangle `width^height`: `height` rows of length `width`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Rect {
    pub width: usize,
    pub height: usize,
}

impl Rect {
    pub fn new(width: usize, height: usize) -> Self {
        Rect { width, height }
    }

    pub fn area(&self) -> usize {
        self.width * self.height
    }

    pub fn transpose(&self) -> Rect {
        Rect::new(self.height, self.width)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RectangleSequence(Vec<Rect>);

impl RectangleSequence {
    pub fn new(rects: Vec<Rect>) -> Result<Self> {
        if let Some(r) = rects.iter().find(|r| r.width == 0 || r.height == 0) {
            return Err(Error::Parse(format!(
                "rectangle {}^{} has a zero side",
                r.width, r.height
            )));
        }
        Ok(RectangleSequence(rects))
    }

    /// One single-row rectangle per part of `mu`, the Kostka–Foulkes case.
    pub fn rows(mu: &Partition) -> Self {
        RectangleSequence(mu.parts().iter().map(|&w| Rect::new(w, 1)).collect())
    }

    /// `count` copies of `width^height`.
    pub fn repeated(width: usize, height: usize, count: usize) -> Self {
        RectangleSequence(vec![Rect::new(width, height); count])
    }

    pub fn rects(&self) -> &[Rect] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Rect::area).sum()
    }

    pub fn max_height(&self) -> usize {
        self.0.iter().map(|r| r.height).max().unwrap_or(0)
    }

    pub fn max_width(&self) -> usize {
        self.0.iter().map(|r| r.width).max().unwrap_or(0)
    }

    /// `n(R) = Σ_{a<b} min(μ_a, μ_b)·min(η_a, η_b)`.
    pub fn n_stat(&self) -> usize {
        let r = &self.0;
        let mut total = 0;
        for a in 0..r.len() {
            for b in a + 1..r.len() {
                total += r[a].width.min(r[b].width) * r[a].height.min(r[b].height);
            }
        }
        total
    }

    /// Stable sort: widths weakly decreasing, ties by heights weakly decreasing.
    pub fn dominant_rearrangement(&self) -> RectangleSequence {
        let mut rects = self.0.clone();
        rects.sort_by(|a, b| match b.width.cmp(&a.width) {
            Ordering::Equal => b.height.cmp(&a.height),
            o => o,
        });
        RectangleSequence(rects)
    }

    pub fn is_dominant(&self) -> bool {
        *self == self.dominant_rearrangement()
    }

    /// Every rectangle transposed, then dominantly rearranged.
    pub fn transpose(&self) -> RectangleSequence {
        RectangleSequence(self.0.iter().map(Rect::transpose).collect()).dominant_rearrangement()
    }

    /// `NR`: every width multiplied by `n`.
    pub fn scale(&self, n: usize) -> RectangleSequence {
        RectangleSequence(
            self.0
                .iter()
                .map(|r| Rect::new(r.width * n, r.height))
                .collect(),
        )
    }

    /// Whether every rectangle is a single row.
    pub fn all_rows(&self) -> bool {
        self.0.iter().all(|r| r.height == 1)
    }
}

impl fmt::Debug for RectangleSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RectangleSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self
            .0
            .iter()
            .map(|r| {
                if r.height == 1 {
                    r.width.to_string()
                } else {
                    format!("{}^{}", r.width, r.height)
                }
            })
            .collect();
        write!(f, "{}", toks.join(","))
    }
}

impl FromStr for RectangleSequence {
    type Err = Error;

    /// Comma-separated `width^height` tokens, `^1` omissible: `2^3,2^2,2^2,1,1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(RectangleSequence::default());
        }
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad rectangle token {t:?}")))
        };
        let rects = s
            .split(',')
            .map(|tok| match tok.split_once('^') {
                Some((w, h)) => Ok(Rect::new(num(w)?, num(h)?)),
                None => Ok(Rect::new(num(tok)?, 1)),
            })
            .collect::<Result<Vec<_>>>()?;
        RectangleSequence::new(rects)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(p("5").conjugate(), p("1,1,1,1,1"));
        assert_eq!(p("4,4,3,3,2").conjugate().conjugate(), p("4,4,3,3,2"));
        assert_eq!(Partition::from_columns(&[2, 1, 1]), p("3,1"));
    }

    #[test]
    fn conjugate_is_involution_up_to_30() {
        for n in 0..=30 {
            for lam in partitions_of(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn column_sums() {
        assert_eq!(p("3,2,1").column_sum(2), 5);
        assert_eq!(Partition::empty().column_sum(1), 0);
        assert_eq!(p("3,1").column_sum(3), 4);
        for lam in partitions_of(9) {
            let mut prev = 0;
            for j in 1..=lam.first() + 2 {
                let q = lam.column_sum(j);
                assert!(q >= prev);
                prev = q;
                if j >= lam.first() {
                    assert_eq!(q, lam.size());
                }
            }
        }
    }

    #[test]
    fn n_stat_both_formulas() {
        assert_eq!(p("1,1,1,1").n_stat(), 6);
        assert_eq!(p("2,1").n_stat(), 1);
        assert_eq!(p("7").n_stat(), 0);
        for n in 0..=20 {
            for lam in partitions_of(n) {
                let alt: usize = lam.parts().iter().enumerate().map(|(i, &l)| i * l).sum();
                assert_eq!(lam.n_stat(), alt, "{lam}");
            }
        }
    }

    #[test]
    fn syt_counts() {
        assert_eq!(p("2,2").syt_count(), BigUint::from(2u32));
        assert_eq!(p("6").syt_count(), BigUint::from(1u32));
        assert_eq!(p("6,6").syt_count(), BigUint::from(132u32));
        assert_eq!(p("4,4,4").syt_count(), BigUint::from(462u32));
    }

    #[test]
    fn dominance_is_antisymmetric() {
        for n in 1..=9 {
            let ps = partitions_of(n);
            for a in &ps {
                for b in &ps {
                    if a != b {
                        assert!(!(a.dominates(b) && b.dominates(a)));
                    }
                }
            }
        }
        assert!(p("3,1").dominates(&p("2,2")));
        assert!(!p("2,2").dominates(&p("3,1")));
    }

    #[test]
    fn interleave_examples() {
        assert_eq!(p("3,1").interleave(&p("2,1")).unwrap(), p("3,2,1,1"));
        assert_eq!(p("3,1").interleave(&p("3,1")).unwrap(), p("3,3,1,1"));
        assert!(matches!(
            p("1,1").interleave(&p("2")),
            Err(Error::NotAPartition(_))
        ));
    }

    #[test]
    fn rectangles() {
        let r: RectangleSequence = "2^3,2^2,2^2,1,1".parse().unwrap();
        assert_eq!(r.n_stat(), 19);
        assert_eq!(r.size(), 16);
        assert!(r.is_dominant());
        assert_eq!(r.to_string(), "2^3,2^2,2^2,1,1");
        let single: RectangleSequence = "3^2".parse().unwrap();
        assert_eq!(single.n_stat(), 0);
        let units: RectangleSequence = "1,1".parse().unwrap();
        assert_eq!(units.n_stat(), 1);

        let r: RectangleSequence = "1,2^2,2^3".parse().unwrap();
        assert_eq!(r.dominant_rearrangement().to_string(), "2^3,2^2,1");
        let r: RectangleSequence = "1^5,3".parse().unwrap();
        assert_eq!(r.dominant_rearrangement().to_string(), "3,1^5");
        assert!("2^0".parse::<RectangleSequence>().is_err());
    }

    #[test]
    fn partition_counting() {
        assert_eq!(partitions_of(6).len(), 11);
        assert_eq!(partition_count(6), BigUint::from(11u32));
        assert_eq!(partition_count(30), BigUint::from(5604u32));
        assert!("1,2".parse::<Partition>().is_err());
    }
}
