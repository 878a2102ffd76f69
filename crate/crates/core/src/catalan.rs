//! Rectangular Catalan and Narayana polynomials: product formula, lattice
//! words, bosonic and fermionic sums, MacMahon counts and Schröder polynomials.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::config::ConfigType;
use crate::error::{Error, Result};
use crate::kostka::{fermionic, kostka_foulkes, Contribution};
use crate::partitions::{Partition, RectangleSequence};
use crate::qpoly::{binomial, gauss_binomial, q_factorial, q_integer, QPolynomial};
use crate::tableaux::lattice_words;

/// `N(n,m;k|q)` for every `k` in `0..=(n-1)(m-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NarayanaTable {
    pub n: usize,
    pub m: usize,
    pub by_k: BTreeMap<usize, QPolynomial>,
}

impl NarayanaTable {
    pub fn max_k(&self) -> usize {
        max_descents(self.n, self.m)
    }

    pub fn at_one(&self) -> Vec<BigInt> {
        self.by_k.values().map(QPolynomial::eval_one).collect()
    }

    pub fn total(&self) -> QPolynomial {
        self.by_k.values().cloned().sum()
    }
}

fn max_descents(n: usize, m: usize) -> usize {
    n.saturating_sub(1) * m.saturating_sub(1)
}

fn rectangle(n: usize, m: usize) -> Partition {
    Partition::from_unsorted(vec![n; m])
}

/// `C(n,m|q) = (q;q)_{nm} / Π_{i≤n, j≤m} (1 - q^{i+j-1})`.
pub fn catalan_poly(n: usize, m: usize) -> QPolynomial {
    let mut den = QPolynomial::one();
    for i in 1..=n {
        for j in 1..=m {
            den = &den * &q_integer(i + j - 1);
        }
    }
    q_factorial(n * m)
        .div_exact(&den)
        .expect("hook product divides the factorial")
}

/// Checks `q^{m·C(n,2)} C(n,m|q) = K_{(n^m),(1^{nm})}(q)`.
pub fn catalan_kostka_identity(n: usize, m: usize) -> Result<bool> {
    let left = catalan_poly(n, m).shift(m * n * n.saturating_sub(1) / 2);
    let right = kostka_foulkes(&rectangle(n, m), &Partition::from_unsorted(vec![1; n * m]))?;
    Ok(left == right.polynomial)
}

/// The table grouped by descents of lattice words of weight `(m^n)`.
pub fn narayana_maj(n: usize, m: usize) -> Result<NarayanaTable> {
    let weight = Partition::from_unsorted(vec![m; n]);
    let mut by_k: BTreeMap<usize, QPolynomial> =
        (0..=max_descents(n, m)).map(|k| (k, QPolynomial::zero())).collect();
    for w in lattice_words(&weight)? {
        *by_k.entry(w.des).or_default() += QPolynomial::q_pow(w.maj);
    }
    Ok(NarayanaTable { n, m, by_k })
}

/// `Π_{b<n} [b]! [m+a+b]! / ([m+b]! [a+b]!)`, the q-count of plane partitions
/// in an `n × m` box with entries at most `a`.
pub fn plane_partition_q_count(n: usize, m: usize, a: usize) -> QPolynomial {
    let mut num = QPolynomial::one();
    let mut den = QPolynomial::one();
    for b in 0..n {
        num = &(&num * &q_factorial(b)) * &q_factorial(m + a + b);
        den = &(&den * &q_factorial(m + b)) * &q_factorial(a + b);
    }
    num.div_exact(&den).expect("plane partition count is a polynomial")
}

/// The alternating sum for `N(n,m;k|q)`.
pub fn narayana_bosonic(n: usize, m: usize, k: usize) -> Result<QPolynomial> {
    if k > max_descents(n, m) {
        return Err(Error::RangeError(format!(
            "k = {k} exceeds (n-1)(m-1) = {}",
            max_descents(n, m)
        )));
    }
    let mut total = QPolynomial::zero();
    for a in 0..=k {
        let d = k - a;
        let term = (&gauss_binomial(n * m + 1, d as i64) * &plane_partition_q_count(n, m, a))
            .shift(d * d.saturating_sub(1) / 2);
        if d.is_multiple_of(2) {
            total += term;
        } else {
            total = total - term;
        }
    }
    Ok(total)
}

/// Closed form for two rows: `q^{k(k+1)} (1-q)/(1-q^n) [n k][n k+1]`.
pub fn narayana_two_rows(n: usize, k: usize) -> QPolynomial {
    let prod = &gauss_binomial(n, k as i64) * &gauss_binomial(n, k as i64 + 1);
    if prod.is_zero() {
        return prod;
    }
    prod.div_exact(&q_integer(n))
        .expect("[n] divides the product")
        .shift(k * (k + 1))
}

/// Admissible configurations of type `((n^m), 1^{nm})` sharing a value of
/// `ℓ = (m-1)n - ℓ(ν^(1))`.
#[derive(Clone, Debug)]
pub struct FermionicGroup {
    pub contributions: Vec<Contribution>,
    pub total: QPolynomial,
}

impl FermionicGroup {
    /// Each configuration's contribution at `q = 1`, in enumeration order.
    pub fn values_at_one(&self) -> Vec<BigUint> {
        self.contributions.iter().map(Contribution::at_one).collect()
    }
}

fn catalan_type(n: usize, m: usize) -> Result<Arc<ConfigType>> {
    Ok(Arc::new(ConfigType::new(
        rectangle(n, m),
        RectangleSequence::repeated(1, 1, n * m),
    )?))
}

fn group_by<F>(n: usize, m: usize, key: F) -> Result<BTreeMap<usize, FermionicGroup>>
where
    F: Fn(&Partition) -> usize,
{
    let res = fermionic(&catalan_type(n, m)?)?;
    let mut groups: BTreeMap<usize, FermionicGroup> = BTreeMap::new();
    for c in res.contributions {
        let first = c.configuration.level(1);
        let g = groups.entry(key(&first)).or_insert_with(|| FermionicGroup {
            contributions: Vec::new(),
            total: QPolynomial::zero(),
        });
        g.total += c.polynomial();
        g.contributions.push(c);
    }
    Ok(groups)
}

/// Fermionic sums for `q^{m·C(n,2)} N(n,m;ℓ|q)`, keyed by `ℓ`.
pub fn narayana_fermionic(n: usize, m: usize) -> Result<BTreeMap<usize, FermionicGroup>> {
    let top = (m.saturating_sub(1)) * n;
    group_by(n, m, |first| top - first.len())
}

/// Configurations of type `((n,n), 1^{2n})` grouped by the number of parts
/// of the single level; group `k` sums to the Narayana number `N(2,n;n-k)`.
pub fn catalan_by_length(n: usize) -> Result<BTreeMap<usize, FermionicGroup>> {
    group_by(n, 2, Partition::len)
}

/// `Π_{i≤n, j≤m} (k+i+j-1)/(i+j-1)`.
pub fn macmahon_ehrhart(n: usize, m: usize, k: usize) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..=n {
        for j in 1..=m {
            num *= BigUint::from(k + i + j - 1);
            den *= BigUint::from(i + j - 1);
        }
    }
    num / den
}

/// Numerator of `Σ_k i(M_nm;k) z^k · (1-z)^{nm+1}` from the first `window` terms.
pub fn macmahon_hvector(n: usize, m: usize, window: usize) -> Result<Vec<BigInt>> {
    let values: Vec<BigInt> = (0..window)
        .map(|k| BigInt::from(macmahon_ehrhart(n, m, k)))
        .collect();
    let gf = crate::qpoly::fit_rational_gf(&values, n * m + 1, Some(max_descents(n, m)))?;
    Ok(gf.integer_numerator().expect("constant coefficients"))
}

/// Whether the h-vector of the MacMahon polytope is the Narayana vector,
/// coefficient-wise on a window of the Ehrhart series.
pub fn hvector_identity(n: usize, m: usize, window: usize) -> Result<bool> {
    let h = match macmahon_hvector(n, m, window) {
        Ok(h) => h,
        Err(Error::FitFailure(_)) => return Ok(false),
        Err(e) => return Err(e),
    };
    let mut nar = narayana_maj(n, m)?.at_one();
    while nar.len() > 1 && nar.last().is_some_and(Zero::is_zero) {
        nar.pop();
    }
    Ok(h == nar)
}

/// `S(n,m|t) = C(n,m|1+t)` as a polynomial in `t`.
pub fn schroeder_poly(n: usize, m: usize) -> QPolynomial {
    catalan_poly(n, m).substitute_one_plus()
}

/// The alternating sum for the number of `d`-dimensional paths with `k` ascents.
pub fn sulanke_mn(d: usize, n: usize, k: usize) -> Result<BigInt> {
    if k > max_descents(d, n) {
        return Err(Error::RangeError(format!(
            "k = {k} exceeds (d-1)(n-1) = {}",
            max_descents(d, n)
        )));
    }
    let mut total = BigInt::zero();
    for j in 0..=k {
        let term = binomial(d * n + 1, k - j) * BigInt::from(macmahon_ehrhart(n, d, j));
        if (k - j).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}
