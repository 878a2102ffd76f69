//! Exact polynomials in one variable with big-integer coefficients, q-analogs
//! and rational generating-function fitting.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A Laurent-free polynomial `Σ c_e q^e` stored densely from its lowest
/// nonzero exponent. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    low: usize,
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `q^e`.
    pub fn q_pow(e: usize) -> Self {
        Self::monomial(BigInt::one(), e)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c.into(), 0)
    }

    pub fn monomial(c: BigInt, e: usize) -> Self {
        Self::from_coeffs(e, vec![c])
    }

    /// Coefficients `c_low, c_{low+1}, ...`; zeros at either end are trimmed.
    pub fn from_coeffs(low: usize, coeffs: Vec<BigInt>) -> Self {
        let mut p = QPolynomial { low, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(low: usize, coeffs: &[i64]) -> Self {
        Self::from_coeffs(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_degree(&self) -> Option<usize> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn degree(&self) -> Option<usize> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() - 1)
    }

    pub fn coeff(&self, e: usize) -> BigInt {
        if e < self.low {
            return BigInt::zero();
        }
        self.coeffs.get(e - self.low).cloned().unwrap_or_default()
    }

    /// The dense coefficient run from `min_degree` to `degree`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficients from `q^0` up to the degree.
    pub fn coeffs_from_zero(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.low];
        v.extend(self.coeffs.iter().cloned());
        if self.is_zero() {
            v.clear();
        }
        v
    }

    /// `(exponent, coefficient)` pairs with nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i, c))
    }

    /// Multiply by `q^e`.
    pub fn shift(&self, e: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        QPolynomial {
            low: self.low + e,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Divide by `q^e`; the polynomial must be divisible.
    pub fn unshift(&self, e: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        assert!(e <= self.low, "q^{e} does not divide the polynomial");
        QPolynomial {
            low: self.low - e,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc * num_traits::pow(x.clone(), self.low)
    }

    /// `q^n · p(q^{-1})`; needs `n ≥ degree`.
    pub fn reflect(&self, n: usize) -> Self {
        let Some(deg) = self.degree() else {
            return Self::zero();
        };
        assert!(deg <= n, "reflection point {n} below degree {deg}");
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        QPolynomial {
            low: n - deg,
            coeffs,
        }
    }

    /// Substitute `q = 1 + t`, giving a polynomial in `t`.
    pub fn substitute_one_plus(&self) -> Self {
        let deg = match self.degree() {
            Some(d) => d,
            None => return Self::zero(),
        };
        let mut out = vec![BigInt::zero(); deg + 1];
        let mut binom_row: Vec<BigInt> = vec![BigInt::one()];
        for e in 0..=deg {
            let c = self.coeff(e);
            if !c.is_zero() {
                for (i, b) in binom_row.iter().enumerate() {
                    out[i] += &c * b;
                }
            }
            let mut next = vec![BigInt::one(); e + 2];
            for i in 1..=e {
                next[i] = &binom_row[i - 1] + &binom_row[i];
            }
            binom_row = next;
        }
        Self::from_coeffs(0, out)
    }

    /// Exact division by `1 - q^h`, `h ≥ 1`.
    pub fn div_one_minus_q_pow(&self, h: usize) -> Result<Self> {
        assert!(h >= 1);
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let a = self.coeffs_from_zero();
        let mut b = vec![BigInt::zero(); a.len()];
        for i in 0..a.len() {
            b[i] = if i >= h { &a[i] + &b[i - h] } else { a[i].clone() };
        }
        let n = b.len();
        if n < h || b[n - h..].iter().any(|c| !c.is_zero()) {
            return Err(Error::NonIntegral(format!(
                "polynomial not divisible by 1 - q^{h}"
            )));
        }
        b.truncate(n - h);
        Ok(Self::from_coeffs(0, b))
    }

    /// Exact long division; errors if `divisor` does not divide `self` over the integers.
    pub fn div_exact(&self, divisor: &QPolynomial) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let num = self.coeffs_from_zero();
        let den = divisor.coeffs_from_zero();
        let dd = den.len() - 1;
        let lead = &den[dd];
        if num.len() < den.len() {
            return Err(Error::NonIntegral("divisor degree too large".into()));
        }
        let mut rem = num;
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd];
            if c.is_zero() {
                continue;
            }
            let (q, r) = c.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NonIntegral("non-integral quotient coefficient".into()));
            }
            for (k, d) in den.iter().enumerate() {
                rem[i + k] -= &q * d;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonIntegral("nonzero remainder".into()));
        }
        Ok(Self::from_coeffs(0, quot))
    }

    /// Whether `self = c · q^e · other` for a single power `q^e` (in either direction) and `c = 1`.
    pub fn equals_up_to_q_power(&self, other: &QPolynomial) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.coeffs == other.coeffs
    }

    /// Every coefficient nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Coefficient-wise `self ≥ other`.
    pub fn dominates(&self, other: &QPolynomial) -> bool {
        (self - other).is_nonnegative()
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QPolynomial {
    /// Sparse ascending form, e.g. `q^3 + q^4 + 2q^5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let var = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}{var}")?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a QPolynomial> for &'a QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPolynomial {
    type Output = QPolynomial;

    fn add(mut self, rhs: QPolynomial) -> QPolynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&QPolynomial> for QPolynomial {
    fn add_assign(&mut self, rhs: &QPolynomial) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        if rhs.low < self.low {
            let pad = self.low - rhs.low;
            let mut coeffs = vec![BigInt::zero(); pad];
            coeffs.append(&mut self.coeffs);
            self.coeffs = coeffs;
            self.low = rhs.low;
        }
        let off = rhs.low - self.low;
        let need = off + rhs.coeffs.len();
        if self.coeffs.len() < need {
            self.coeffs.resize(need, BigInt::zero());
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            self.coeffs[off + i] += c;
        }
        self.trim();
    }
}

impl AddAssign for QPolynomial {
    fn add_assign(&mut self, rhs: QPolynomial) {
        *self += &rhs;
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;

    fn neg(self) -> QPolynomial {
        QPolynomial {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for QPolynomial {
    type Output = QPolynomial;

    fn neg(self) -> QPolynomial {
        -&self
    }
}

impl<'a> Sub<&'a QPolynomial> for &'a QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        self + &(-rhs)
    }
}

impl Sub for QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: QPolynomial) -> QPolynomial {
        &self - &rhs
    }
}

impl<'a> Mul<&'a QPolynomial> for &'a QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(self.low + rhs.low, out)
    }
}

impl Mul for QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: QPolynomial) -> QPolynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for QPolynomial {
    fn sum<I: Iterator<Item = QPolynomial>>(iter: I) -> Self {
        iter.fold(QPolynomial::zero(), |acc, p| acc + p)
    }
}

impl Serialize for QPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            min_deg: usize,
            coeffs: Vec<String>,
        }
        Repr {
            min_deg: self.low,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            min_deg: usize,
            coeffs: Vec<String>,
        }
        let r = Repr::deserialize(d)?;
        let coeffs = r
            .coeffs
            .iter()
            .map(|c| c.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(QPolynomial::from_coeffs(r.min_deg, coeffs))
    }
}

/// `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn q_integer(n: usize) -> QPolynomial {
    QPolynomial::from_coeffs(0, vec![BigInt::one(); n])
}

/// `[n]_q!`.
pub fn q_factorial(n: usize) -> QPolynomial {
    (1..=n).fold(QPolynomial::one(), |acc, k| &acc * &q_integer(k))
}

/// The Gaussian binomial `[n choose k]_q`; zero outside `0 ≤ k ≤ n`.
pub fn gauss_binomial(n: usize, k: i64) -> QPolynomial {
    if k < 0 || k as usize > n {
        return QPolynomial::zero();
    }
    let k = (k as usize).min(n - k as usize);
    // Pascal recurrence [n,k] = [n-1,k-1] + q^k [n-1,k], one row at a time.
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for m in 1..=n {
        let top = k.min(m);
        let mut next: Vec<Vec<BigInt>> = Vec::with_capacity(top + 1);
        for j in 0..=top {
            let deg = j * (m - j);
            let mut c = vec![BigInt::zero(); deg + 1];
            if j >= 1 {
                for (i, x) in row[j - 1].iter().enumerate() {
                    c[i] += x;
                }
            }
            if j < m && j < row.len() {
                for (i, x) in row[j].iter().enumerate() {
                    c[i + j] += x;
                }
            }
            next.push(c);
        }
        row = next;
    }
    QPolynomial::from_coeffs(0, row.swap_remove(k))
}

/// The ordinary binomial coefficient as a big integer; zero outside range.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `binom(x, k)` for a possibly negative or large integer `x`.
pub fn binomial_big(x: &BigInt, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= x - i;
    }
    let mut fact = BigInt::one();
    for i in 2..=k {
        fact *= i;
    }
    acc / fact
}

/// `s_λ(1, q, ..., q^{N-1})` by the hook-content formula.
pub fn generalized_gaussian(n: usize, lambda: &Partition) -> QPolynomial {
    if lambda.len() > n {
        return QPolynomial::zero();
    }
    let mut num = QPolynomial::q_pow(lambda.n_stat());
    let mut hooks = Vec::new();
    for (r, c) in lambda.cells() {
        let content = n + c - r;
        num = &num * &(&QPolynomial::one() - &QPolynomial::q_pow(content));
        hooks.push(lambda.hook(r, c));
    }
    for h in hooks {
        num = num
            .div_one_minus_q_pow(h)
            .expect("hook-content quotient is a polynomial");
    }
    num
}

/// Symmetry and unimodality of a nonzero coefficient sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeReport {
    pub symmetric: bool,
    pub unimodal: bool,
    /// Twice the center of symmetry `(min_deg + deg)`, kept integral.
    pub center_times_two: usize,
}

impl ShapeReport {
    pub fn center(&self) -> f64 {
        self.center_times_two as f64 / 2.0
    }
}

pub fn is_symmetric_unimodal(p: &QPolynomial) -> Result<ShapeReport> {
    let (lo, hi) = match (p.min_degree(), p.degree()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Err(Error::ZeroPolynomial),
    };
    let c = p.coeffs();
    let symmetric = c.iter().eq(c.iter().rev());
    Ok(ShapeReport {
        symmetric,
        unimodal: is_unimodal(c),
        center_times_two: lo + hi,
    })
}

/// Weakly rising then weakly falling.
pub fn is_unimodal<T: PartialOrd>(seq: &[T]) -> bool {
    let mut i = 1;
    while i < seq.len() && seq[i - 1] <= seq[i] {
        i += 1;
    }
    while i < seq.len() && seq[i - 1] >= seq[i] {
        i += 1;
    }
    i >= seq.len()
}

/// A rational function `numerator(t) / Π_{s ∈ S} (1 - q^s t)`, the numerator
/// having q-polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalGF {
    pub numerator: Vec<QPolynomial>,
    pub denominator_exponents: Vec<usize>,
}

impl RationalGF {
    /// Numerator coefficients when they are all constants.
    pub fn integer_numerator(&self) -> Option<Vec<BigInt>> {
        self.numerator
            .iter()
            .map(|c| match c.degree() {
                None => Some(BigInt::zero()),
                Some(0) => Some(c.coeff(0)),
                Some(_) => None,
            })
            .collect()
    }

    /// The first `len` coefficients of the t-expansion.
    pub fn series(&self, len: usize) -> Vec<QPolynomial> {
        let mut s: Vec<QPolynomial> = (0..len)
            .map(|i| self.numerator.get(i).cloned().unwrap_or_default())
            .collect();
        for &e in &self.denominator_exponents {
            // divide by (1 - q^e t): b_N = a_N + q^e b_{N-1}
            for i in 1..len {
                let prev = s[i - 1].shift(e);
                s[i] += &prev;
            }
        }
        s
    }
}

fn multiply_by_denominator(values: &[QPolynomial], exponents: &[usize]) -> Vec<QPolynomial> {
    let mut s = values.to_vec();
    for &e in exponents {
        for i in (1..s.len()).rev() {
            let prev = s[i - 1].shift(e);
            s[i] = &s[i] - &prev;
        }
    }
    s
}

/// Trailing vanishing coefficients demanded when no numerator degree is claimed.
const MIN_VANISHING: usize = 3;

fn truncate_numerator(
    product: Vec<QPolynomial>,
    expected_degree: Option<usize>,
) -> Result<Vec<QPolynomial>> {
    let last_nonzero = product.iter().rposition(|c| !c.is_zero());
    let deg = match (expected_degree, last_nonzero) {
        (Some(d), Some(l)) if l > d => {
            return Err(Error::FitFailure(format!(
                "coefficient of t^{l} is nonzero, beyond claimed degree {d}"
            )))
        }
        (Some(d), _) => {
            if product.len() <= d {
                return Err(Error::FitFailure(format!(
                    "window of {} values cannot certify degree {d}",
                    product.len()
                )));
            }
            d
        }
        (None, Some(l)) => {
            if product.len() < l + 1 + MIN_VANISHING {
                return Err(Error::FitFailure(format!(
                    "numerator does not terminate within a window of {} values",
                    product.len()
                )));
            }
            l
        }
        (None, None) => 0,
    };
    let mut num = product;
    num.truncate(deg + 1);
    while num.len() > 1 && num.last().is_some_and(QPolynomial::is_zero) {
        num.pop();
    }
    Ok(num)
}

/// Fit `Σ values[N] t^N = P(t)/(1-t)^power` by exact differencing.
pub fn fit_rational_gf(
    values: &[BigInt],
    denominator_power: usize,
    expected_degree: Option<usize>,
) -> Result<RationalGF> {
    let vals: Vec<QPolynomial> = values
        .iter()
        .map(|v| QPolynomial::constant(v.clone()))
        .collect();
    let exps = vec![0; denominator_power];
    let numerator = truncate_numerator(multiply_by_denominator(&vals, &exps), expected_degree)?;
    Ok(RationalGF {
        numerator,
        denominator_exponents: exps,
    })
}

/// Fit `Σ values[N] t^N = P(q,t)/Π_{s∈S}(1 - q^s t)`.
pub fn fit_rational_gf_q(
    values: &[QPolynomial],
    denominator_exponents: &[usize],
    expected_degree: Option<usize>,
) -> Result<RationalGF> {
    let numerator = truncate_numerator(
        multiply_by_denominator(values, denominator_exponents),
        expected_degree,
    )?;
    let mut exps = denominator_exponents.to_vec();
    exps.sort_unstable();
    Ok(RationalGF {
        numerator,
        denominator_exponents: exps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(low: usize, c: &[i64]) -> QPolynomial {
        QPolynomial::from_i64s(low, c)
    }

    #[test]
    fn gauss_examples() {
        assert_eq!(gauss_binomial(2, 1), poly(0, &[1, 1]));
        assert_eq!(gauss_binomial(7, 0), QPolynomial::one());
        assert_eq!(gauss_binomial(4, 2), poly(0, &[1, 1, 2, 1, 1]));
        assert!(gauss_binomial(3, 4).is_zero());
        assert!(gauss_binomial(3, -1).is_zero());
        assert_eq!(gauss_binomial(0, 0), QPolynomial::one());
    }

    #[test]
    fn gauss_factorial_identity() {
        for n in 0..=12 {
            for k in 0..=n {
                let lhs = &(&gauss_binomial(n, k as i64) * &q_factorial(k)) * &q_factorial(n - k);
                assert_eq!(lhs, q_factorial(n), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn gauss_symmetric_unimodal() {
        for n in 0..=14 {
            for k in 0..=n {
                let r = is_symmetric_unimodal(&gauss_binomial(n, k as i64)).unwrap();
                assert!(r.symmetric && r.unimodal, "n={n} k={k}");
                assert_eq!(r.center_times_two, k * (n - k));
            }
        }
    }

    #[test]
    fn generalized_gaussian_examples() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(generalized_gaussian(2, &p("1")), poly(0, &[1, 1]));
        assert_eq!(generalized_gaussian(3, &p("2,1")), poly(1, &[1, 2, 2, 2, 1]));
        assert!(generalized_gaussian(1, &p("1,1")).is_zero());
        for n in 1..=8 {
            for k in 0..=8 {
                let row = Partition::new(vec![k]).unwrap();
                assert_eq!(
                    generalized_gaussian(n, &row),
                    gauss_binomial(n + k - 1, k as i64)
                );
            }
        }
    }

    #[test]
    fn shape_examples() {
        let r = is_symmetric_unimodal(&poly(0, &[1, 2, 1])).unwrap();
        assert_eq!((r.symmetric, r.unimodal, r.center()), (true, true, 1.0));
        let r = is_symmetric_unimodal(&poly(0, &[1, 0, 1])).unwrap();
        assert_eq!((r.symmetric, r.unimodal, r.center()), (true, false, 1.0));
        let r = is_symmetric_unimodal(&gauss_binomial(4, 2)).unwrap();
        assert_eq!(r.center(), 2.0);
        assert_eq!(
            is_symmetric_unimodal(&QPolynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn display_and_json() {
        assert_eq!(poly(1, &[1, 1]).to_string(), "q + q^2");
        assert_eq!(poly(0, &[2, 0, -3]).to_string(), "2 - 3q^2");
        assert_eq!(QPolynomial::zero().to_string(), "0");
        let p = poly(3, &[1, 1, 1]);
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"{"min_deg":3,"coeffs":["1","1","1"]}"#);
        assert_eq!(serde_json::from_str::<QPolynomial>(&js).unwrap(), p);
    }

    #[test]
    fn division_and_substitution() {
        let p = &gauss_binomial(5, 2) * &poly(0, &[1, 0, -1]);
        assert_eq!(p.div_one_minus_q_pow(2).unwrap(), gauss_binomial(5, 2));
        assert!(poly(0, &[1, 1]).div_one_minus_q_pow(2).is_err());
        let d = poly(0, &[1, 2, 1]);
        assert_eq!((&d * &d).div_exact(&d).unwrap(), d);
        assert!(poly(0, &[1, 0, 1]).div_exact(&poly(0, &[1, 1])).is_err());
        // 1 + q^2 at q = 1 + t
        assert_eq!(poly(0, &[1, 0, 1]).substitute_one_plus(), poly(0, &[2, 2, 1]));
        assert_eq!(poly(1, &[1, 1]).reflect(3), poly(1, &[1, 1]));
        assert_eq!(poly(0, &[1, 2]).reflect(4), poly(3, &[2, 1]));
    }

    #[test]
    fn fit_examples() {
        let vals: Vec<BigInt> = (0..12).map(|n| binomial(n + 2, 2)).collect();
        let gf = fit_rational_gf(&vals, 3, None).unwrap();
        assert_eq!(gf.integer_numerator().unwrap(), vec![BigInt::one()]);
        let ones = vec![BigInt::one(); 10];
        assert!(matches!(
            fit_rational_gf(&ones, 0, None),
            Err(Error::FitFailure(_))
        ));
        assert!(matches!(
            fit_rational_gf(&vals, 2, Some(3)),
            Err(Error::FitFailure(_))
        ));
        // Σ q^N [N+1]_q t^N = 1/((1-qt)(1-q^2 t))
        let qvals: Vec<QPolynomial> = (0..10).map(|n| q_integer(n + 1).shift(n)).collect();
        let gf = fit_rational_gf_q(&qvals, &[1, 2], None).unwrap();
        assert_eq!(gf.numerator, vec![QPolynomial::one()]);
        assert_eq!(gf.series(10), qvals);
    }

    proptest! {
        #[test]
        fn mul_commutes_and_distributes(
            a in proptest::collection::vec(-5i64..5, 0..6),
            b in proptest::collection::vec(-5i64..5, 0..6),
            c in proptest::collection::vec(-5i64..5, 0..6),
            sa in 0usize..3, sb in 0usize..3,
        ) {
            let (a, b, c) = (poly(sa, &a), poly(sb, &b), poly(0, &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!((&a * &b).eval_one(), a.eval_one() * b.eval_one());
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn fit_reexpands(coeffs in proptest::collection::vec(-4i64..6, 1..5), power in 1usize..5) {
            let gf = RationalGF {
                numerator: coeffs.iter().map(|&c| QPolynomial::constant(c)).collect(),
                denominator_exponents: vec![0; power],
            };
            let vals: Vec<BigInt> = gf.series(coeffs.len() + power + 6).iter().map(|p| p.coeff(0)).collect();
            let fit = fit_rational_gf(&vals, power, Some(coeffs.len() - 1)).unwrap();
            let back: Vec<BigInt> = fit.series(vals.len()).iter().map(|p| p.coeff(0)).collect();
            prop_assert_eq!(back, vals);
        }
    }
}
