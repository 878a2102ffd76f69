//! Gelfand–Tsetlin patterns: integer points of GT(λ, μ) counted row by row.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{CapCounter, Error, Result};
use crate::partitions::Partition;

/// A triangular array; `rows[j]` has `j + 1` entries and the last row is λ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GtPattern {
    pub rows: Vec<Vec<usize>>,
}

impl GtPattern {
    pub fn is_interlacing(&self) -> bool {
        self.rows.windows(2).all(|w| {
            let (short, long) = (&w[0], &w[1]);
            long.len() == short.len() + 1
                && short
                    .iter()
                    .enumerate()
                    .all(|(i, &y)| long[i] >= y && y >= long[i + 1])
        })
    }

    /// Row sums differenced: the content this pattern encodes.
    pub fn content(&self) -> Vec<usize> {
        let sums: Vec<usize> = self.rows.iter().map(|r| r.iter().sum()).collect();
        let mut prev = 0;
        sums.into_iter()
            .map(|s| {
                let d = s - prev;
                prev = s;
                d
            })
            .collect()
    }
}

/// All rows `y` of length `x.len() - 1` interlacing `x` with the given sum.
fn interlacing_rows(x: &[usize], sum: usize, out: &mut Vec<Vec<usize>>) {
    let len = x.len() - 1;
    let max_rest: Vec<usize> = {
        let mut v = vec![0; len + 1];
        for i in (0..len).rev() {
            v[i] = v[i + 1] + x[i];
        }
        v
    };
    let min_rest: Vec<usize> = {
        let mut v = vec![0; len + 1];
        for i in (0..len).rev() {
            v[i] = v[i + 1] + x[i + 1];
        }
        v
    };
    let mut cur = Vec::with_capacity(len);
    fn go(
        x: &[usize],
        i: usize,
        left: usize,
        max_rest: &[usize],
        min_rest: &[usize],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == cur.capacity() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if left < min_rest[i] || left > max_rest[i] {
            return;
        }
        for y in x[i + 1]..=x[i].min(left) {
            cur.push(y);
            go(x, i + 1, left - y, max_rest, min_rest, cur, out);
            cur.pop();
        }
    }
    go(x, 0, sum, &max_rest, &min_rest, &mut cur, out);
}

fn padded_top(lambda: &Partition, mu: &[usize]) -> Result<Vec<usize>> {
    let total: usize = mu.iter().sum();
    if lambda.size() != total {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: total,
        });
    }
    Ok(lambda.padded(mu.len().max(lambda.len())))
}

/// The number of integer GT patterns with top row λ and row sums the partial
/// sums of `mu`; this is the Kostka number `K_{λμ}`.
pub fn count_gt_points(lambda: &Partition, mu: &[usize]) -> Result<BigUint> {
    let top = padded_top(lambda, mu)?;
    if top.len() > mu.len() {
        return Ok(BigUint::zero());
    }
    let partial: Vec<usize> = mu
        .iter()
        .scan(0, |s, &m| {
            *s += m;
            Some(*s)
        })
        .collect();
    let mut counter = CapCounter::new();
    let mut layer: HashMap<Vec<usize>, BigUint> = HashMap::new();
    layer.insert(top, BigUint::one());
    for j in (1..mu.len()).rev() {
        let mut next: HashMap<Vec<usize>, BigUint> = HashMap::new();
        let mut rows = Vec::new();
        for (x, c) in &layer {
            rows.clear();
            interlacing_rows(x, partial[j - 1], &mut rows);
            for y in rows.drain(..) {
                counter.tick()?;
                *next.entry(y).or_insert_with(BigUint::zero) += c;
            }
        }
        layer = next;
    }
    Ok(layer.into_values().sum())
}

/// Every GT pattern, top row last. Intended for small inputs.
pub fn enumerate_gt_patterns(lambda: &Partition, mu: &[usize]) -> Result<Vec<GtPattern>> {
    let top = padded_top(lambda, mu)?;
    if top.len() > mu.len() {
        return Ok(Vec::new());
    }
    let partial: Vec<usize> = mu
        .iter()
        .scan(0, |s, &m| {
            *s += m;
            Some(*s)
        })
        .collect();
    let mut counter = CapCounter::new();
    let mut partials: Vec<Vec<Vec<usize>>> = vec![vec![top]];
    for j in (1..mu.len()).rev() {
        let mut next = Vec::new();
        let mut rows = Vec::new();
        for chain in &partials {
            rows.clear();
            interlacing_rows(chain.last().unwrap(), partial[j - 1], &mut rows);
            for y in rows.drain(..) {
                counter.tick()?;
                let mut c = chain.clone();
                c.push(y);
                next.push(c);
            }
        }
        partials = next;
    }
    Ok(partials
        .into_iter()
        .map(|mut c| {
            c.reverse();
            GtPattern { rows: c }
        })
        .collect())
}

/// `K_{Nλ,Nμ}` for `N = 0..=n_max`.
pub fn stretched_gt_series(lambda: &Partition, mu: &[usize], n_max: usize) -> Result<Vec<BigUint>> {
    padded_top(lambda, mu)?;
    (0..=n_max)
        .map(|n| {
            let scaled: Vec<usize> = mu.iter().map(|m| m * n).collect();
            count_gt_points(&lambda.scale(n), &scaled)
        })
        .collect()
}

/// True when the finite differences of `values` of order above `degree` vanish.
pub fn is_polynomial_of_degree(values: &[BigUint], degree: usize) -> bool {
    use num_bigint::BigInt;
    let mut diff: Vec<BigInt> = values.iter().map(|v| BigInt::from(v.clone())).collect();
    for _ in 0..=degree {
        if diff.len() <= 1 {
            return true;
        }
        diff = diff.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    diff.iter().all(Zero::is_zero)
}
