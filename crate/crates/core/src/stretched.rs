//! Stretched Kostka numbers `N ↦ K_{Nλ,NR}`, rational generating functions,
//! and the log-concavity counterexamples built from them.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::catalan::narayana_maj;
use crate::config::ConfigType;
use crate::error::{Error, Result};
use crate::kostka::{kostka_at_one_type, kostka_foulkes, parabolic_kostka};
use crate::partitions::{Partition, RectangleSequence};
use crate::qpoly::{fit_rational_gf, fit_rational_gf_q, generalized_gaussian, QPolynomial, RationalGF};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AtQ {
    One,
    Generic,
}

#[derive(Clone, Debug, Serialize)]
pub struct StretchSeries {
    pub lambda: Partition,
    pub rects: RectangleSequence,
    /// Values at `q = 1`, always filled.
    #[serde(serialize_with = "crate::display_serde::many")]
    pub values: Vec<BigInt>,
    /// Full polynomials, filled in generic mode.
    pub polynomials: Option<Vec<QPolynomial>>,
    pub fitted: Option<RationalGF>,
}

/// `K_{Nλ,NR}` for `N = 0..=n_max`.
pub fn stretched_values(
    lambda: &Partition,
    rects: &RectangleSequence,
    n_max: usize,
    at_q: AtQ,
) -> Result<StretchSeries> {
    if lambda.size() != rects.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: rects.size(),
        });
    }
    let mut values = Vec::with_capacity(n_max + 1);
    let mut polys = Vec::new();
    for n in 0..=n_max {
        let (l, r) = (lambda.scale(n), rects.scale(n));
        match at_q {
            AtQ::One => {
                let v = match ConfigType::new(l, r) {
                    Ok(ty) => kostka_at_one_type(&ty)?,
                    Err(Error::NegativeLevel { .. }) => BigUint::zero(),
                    Err(e) => return Err(e),
                };
                values.push(BigInt::from(v));
            }
            AtQ::Generic => {
                let p = parabolic_kostka(&l, &r)?.polynomial;
                values.push(p.eval_one());
                polys.push(p);
            }
        }
    }
    Ok(StretchSeries {
        lambda: lambda.clone(),
        rects: rects.clone(),
        values,
        polynomials: (at_q == AtQ::Generic).then_some(polys),
        fitted: None,
    })
}

/// `λ = (n^k, 1^{kd})` and `R = n + d` columns of height `k`.
pub fn family(k: usize, d: usize, n: usize) -> (Partition, RectangleSequence) {
    let mut parts = vec![n; k];
    parts.extend(std::iter::repeat_n(1, k * d));
    let rects = RectangleSequence::repeated(1, k, n + d);
    (Partition::from_unsorted(parts), rects)
}

/// Recognizes `(λ, R)` as a member of [`family`].
pub fn detect_family(lambda: &Partition, rects: &RectangleSequence) -> Option<(usize, usize, usize)> {
    let r = rects.rects();
    let k = r.first()?.height;
    if k == 0 || r.iter().any(|x| x.width != 1 || x.height != k) {
        return None;
    }
    let n = lambda.first();
    if n < 2 {
        return None;
    }
    let ones = lambda.len().checked_sub(k)?;
    if ones % k != 0 || ones == 0 {
        return None;
    }
    let d = ones / k;
    (family(k, d, n) == (lambda.clone(), rects.clone())).then_some((k, d, n))
}

fn kron(a: usize, b: usize) -> usize {
    usize::from(a == b)
}

/// Exponent of `(1 - t)` in the denominator for the family `(k, d, n)`.
pub fn family_denominator_power(k: usize, d: usize, n: usize) -> usize {
    k * k * (d * (n - 1) - 1) + 2 + (k - 1) * kron(n, 2) * kron(d, 1)
}

/// Numerator degree for `d = 1`: `(k-1)(k(n-2) + 2(δ_{n,2} - 1))`.
pub fn family_numerator_degree(k: usize, n: usize) -> i64 {
    let (k, n) = (k as i64, n as i64);
    (k - 1) * (k * (n - 2) + 2 * (i64::from(n == 2) - 1))
}

/// Fits `Σ values[N] t^N = P(t)/(1-t)^power`, taking the family's power when
/// none is given.
pub fn fit_stretched(series: &StretchSeries, power: Option<usize>) -> Result<RationalGF> {
    let power = match power {
        Some(p) => p,
        None => {
            let (k, d, n) = detect_family(&series.lambda, &series.rects).ok_or_else(|| {
                Error::FitFailure("no denominator power given and type is not a known family".into())
            })?;
            family_denominator_power(k, d, n)
        }
    };
    fit_rational_gf(&series.values, power, None)
}

/// Stretched values for the family and their fit, needing
/// `numerator degree + 4` values.
pub fn family_numerator(k: usize, d: usize, n: usize, n_max: usize) -> Result<Vec<BigInt>> {
    let (l, r) = family(k, d, n);
    let s = stretched_values(&l, &r, n_max, AtQ::One)?;
    let gf = fit_stretched(&s, None)?;
    Ok(gf.integer_numerator().expect("integer series"))
}

/// `K_{N(n,1), N(1^{n+1})}(1)` and its doubled counterpart in closed form.
#[derive(Clone, Copy, Debug)]
pub struct OkounkovForms {
    pub n: usize,
}

impl OkounkovForms {
    pub fn new(n: usize) -> Result<Self> {
        if (3..=5).contains(&n) {
            Ok(Self { n })
        } else {
            Err(Error::Unsupported(format!("closed forms exist for n = 3, 4, 5, not {n}")))
        }
    }

    pub fn single(&self, big_n: u64) -> BigInt {
        binom_shift(big_n, (self.n - 1) as u64, (self.n - 1) as u64)
    }

    /// `K_{N(n,n,1,1), N(1,1)^{n+1}}(1)`.
    pub fn doubled(&self, big_n: u64) -> BigInt {
        let (top, weights): (u64, &[u64]) = match self.n {
            3 => (5, &[1]),
            4 => (9, &[1, 0, 1]),
            _ => (13, &[1, 1, 6, 1, 1]),
        };
        weights
            .iter()
            .enumerate()
            .filter(|(_, w)| **w > 0)
            .map(|(i, &w)| match (big_n + top).checked_sub(i as u64) {
                Some(x) if x >= top => BigInt::from(w) * binom_u64(x, top),
                _ => BigInt::zero(),
            })
            .sum()
    }
}

fn binom_u64(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `C(N + shift, k)`.
fn binom_shift(big_n: u64, shift: u64, k: u64) -> BigInt {
    binom_u64(big_n + shift, k)
}

#[derive(Clone, Debug, Serialize)]
pub struct ThresholdReport {
    pub n: usize,
    pub power: u32,
    pub threshold: u64,
    pub window: u64,
    pub holds_on_window: bool,
    pub fails_below: bool,
}

/// The smallest `N ≥ 1` with `doubled(N) > single(N)^power`, with a check
/// that the inequality persists over a window and fails just below.
pub fn okounkov_threshold(n: usize, power: u32, window: u64) -> Result<ThresholdReport> {
    let f = OkounkovForms::new(n)?;
    let holds = |big_n: u64| f.doubled(big_n) > num_traits::pow(f.single(big_n), power as usize);
    const SEARCH_LIMIT: u64 = 10_000_000;
    let threshold = (1..SEARCH_LIMIT)
        .find(|&m| holds(m))
        .ok_or_else(|| Error::Unsupported(format!("no threshold below {SEARCH_LIMIT}")))?;
    let holds_on_window = (threshold..=threshold + window).all(holds);
    let fails_below = !holds(threshold - 1);
    Ok(ThresholdReport {
        n,
        power,
        threshold,
        window,
        holds_on_window,
        fails_below,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateReport {
    pub n: usize,
    pub checked: Vec<u64>,
    pub mismatches: Vec<u64>,
    pub holds: bool,
    /// `right / (K2 - K^p)` at the first checked point with a nonzero difference.
    pub observed_scale: Option<String>,
}

fn n5_factor(big_n: &BigInt) -> BigInt {
    const COEFFS: [i64; 9] = [
        -78_631_416,
        -172_503_780,
        -174_033_932,
        -101_206_400,
        -35_852_065,
        -7_638_110,
        -899_548,
        -44_990,
        1,
    ];
    COEFFS
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, &c| acc * big_n + BigInt::from(c))
}

/// Checks the factored difference formulas
/// `20 (K2 - K^2) = (N^2 - 18N - 43) C(N+2,3)` for `n = 3` and
/// `51891840 (K2 - K^3) = C(N+4,5) · f(N)` with the degree-8 factor `f` for `n = 5`.
pub fn okounkov_certificate(n: usize, range: std::ops::RangeInclusive<u64>) -> Result<CertificateReport> {
    let f = OkounkovForms::new(n)?;
    let (scale, power): (i64, usize) = match n {
        3 => (20, 2),
        5 => (51_891_840, 3),
        _ => return Err(Error::Unsupported(format!("no factored certificate for n = {n}"))),
    };
    let mut checked = Vec::new();
    let mut mismatches = Vec::new();
    let mut observed_scale = None;
    for m in range {
        let diff = f.doubled(m) - num_traits::pow(f.single(m), power);
        let bn = BigInt::from(m);
        let right = match n {
            3 => (&bn * &bn - 18 * &bn - 43) * binom_u64(m + 2, 3),
            _ => binom_u64(m + 4, 5) * n5_factor(&bn),
        };
        if observed_scale.is_none() && !diff.is_zero() {
            let (q, r) = (&right / &diff, &right % &diff);
            observed_scale = Some(if r.is_zero() {
                q.to_string()
            } else {
                format!("{right}/{diff}")
            });
        }
        if BigInt::from(scale) * diff != right {
            mismatches.push(m);
        }
        checked.push(m);
    }
    Ok(CertificateReport {
        n,
        holds: mismatches.is_empty(),
        checked,
        mismatches,
        observed_scale,
    })
}

/// Compares `Σ_N K_{Nλ,Nμ}(q) t^N` for `λ = (n, 1^d)`, `μ = (1^{n+d})` with
/// `C_{d,n-1}(q^{C(n,2)} t, q) / (q^{C(n,2)} t; q)_{d(n-1)+1}` up to `t^{n_max}`.
pub fn gt_generating_function_check(n: usize, d: usize, n_max: usize, with_q: bool) -> Result<bool> {
    let shift = n * (n - 1) / 2;
    let table = narayana_maj(d, n - 1)?;
    let numerator: Vec<QPolynomial> = table
        .by_k
        .iter()
        .map(|(k, p)| p.shift(shift * k))
        .collect();
    let gf = RationalGF {
        numerator,
        denominator_exponents: (0..d * (n - 1) + 1).map(|i| shift + i).collect(),
    };
    let series = gf.series(n_max + 1);
    let mut parts = vec![n];
    parts.extend(std::iter::repeat_n(1, d));
    let lambda = Partition::from_unsorted(parts);
    let mu = Partition::from_unsorted(vec![1; n + d]);
    for (big_n, expected) in series.iter().enumerate() {
        let k = kostka_foulkes(&lambda.scale(big_n), &mu.scale(big_n))?.polynomial;
        let ok = if with_q {
            &k == expected
        } else {
            k.eval_one() == expected.eval_one()
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Recovers the generating function of a generic-q series for the
/// `(n, 1^d)` type as numerator coefficients in `t`.
pub fn fit_gt_generating_function(n: usize, d: usize, n_max: usize) -> Result<RationalGF> {
    let shift = n * (n - 1) / 2;
    let mut parts = vec![n];
    parts.extend(std::iter::repeat_n(1, d));
    let lambda = Partition::from_unsorted(parts);
    let rects = RectangleSequence::repeated(1, 1, n + d);
    let s = stretched_values(&lambda, &rects, n_max, AtQ::Generic)?;
    let exps: Vec<usize> = (0..d * (n - 1) + 1).map(|i| shift + i).collect();
    fit_rational_gf_q(s.polynomials.as_deref().unwrap_or_default(), &exps, None)
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub hypothesis_holds: bool,
    /// `(N, K(2N), K(N)^3)` for each scanned `N`.
    #[serde(serialize_with = "crate::display_serde::triples")]
    pub rows: Vec<(usize, BigInt, BigInt)>,
    pub first_holding: Option<usize>,
    pub certifying: bool,
}

/// Evaluates `K(2N)` against `K(N)^3` for the family `(k, d, n)` and `N ≤ n_max`.
/// Window evidence only.
pub fn general_counterexample_scan(n: usize, k: usize, d: usize, n_max: usize) -> Result<ScanReport> {
    if k == 1 {
        return Err(Error::Unsupported(
            "k = 1 thresholds lie beyond enumeration; use the closed-form threshold".into(),
        ));
    }
    let (l, r) = family(k, d, n);
    let s = stretched_values(&l, &r, 2 * n_max, AtQ::One)?;
    let rows: Vec<(usize, BigInt, BigInt)> = (0..=n_max)
        .map(|m| (m, s.values[2 * m].clone(), num_traits::pow(s.values[m].clone(), 3)))
        .collect();
    let first_holding = rows.iter().find(|(_, a, b)| a > b).map(|r| r.0);
    // n > 1 + (k^2 + 2)/(k^2 d)  ⇔  (n - 1) k^2 d > k^2 + 2
    let hypothesis_holds = (n as i64 - 1) * (k * k * d) as i64 > (k * k + 2) as i64;
    Ok(ScanReport {
        n,
        k,
        d,
        hypothesis_holds,
        rows,
        first_holding,
        certifying: false,
    })
}

/// Checks `K_{(N|λ|, λ), (|λ|^{N+1})}(q) ≐ [N λ]_q`.
pub fn gaussian_kostka_identity(lambda: &Partition, big_n: usize) -> Result<bool> {
    let size = lambda.size();
    let mut parts = vec![big_n * size];
    parts.extend_from_slice(lambda.parts());
    let big = Partition::new(parts)?;
    let mu = Partition::from_unsorted(vec![size; big_n + 1]);
    let k = kostka_foulkes(&big, &mu)?.polynomial;
    Ok(k.equals_up_to_q_power(&generalized_gaussian(big_n, lambda)))
}

/// `a(Nλ, NR) = N·a(λ,R)` for `N = 1..=n_max`.
pub fn saturation_holds(lambda: &Partition, rects: &RectangleSequence, n_max: usize) -> Result<bool> {
    let (a, _) = crate::kostka::min_degree_and_leading(lambda, rects)?;
    for big_n in 2..=n_max {
        let (an, _) = crate::kostka::min_degree_and_leading(&lambda.scale(big_n), &rects.scale(big_n))?;
        if an != big_n * a {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Observed degree in `N` of the values, from vanishing finite differences.
pub fn observed_degree(values: &[BigInt]) -> Option<usize> {
    let mut diff = values.to_vec();
    for deg in 0..values.len() {
        if diff.iter().all(Zero::is_zero) {
            return deg.checked_sub(1);
        }
        if diff.len() < 2 {
            return None;
        }
        diff = diff.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    None
}

/// Whether `v_i^2 ≥ v_{i-1} v_{i+1}` at each interior index.
pub fn ratio_table(values: &[BigInt]) -> BTreeMap<usize, bool> {
    (1..values.len().saturating_sub(1))
        .map(|i| {
            let lhs = &values[i] * &values[i];
            let rhs = &values[i - 1] * &values[i + 1];
            (i, !(lhs - rhs).is_negative())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gt::stretched_gt_series;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn stretched_examples() {
        let s = stretched_values(&p("3,1"), &RectangleSequence::repeated(1, 1, 4), 5, AtQ::One).unwrap();
        assert_eq!(s.values, ints(&[1, 3, 6, 10, 15, 21]));
        let s = stretched_values(&p("3,3,1,1"), &RectangleSequence::repeated(1, 2, 4), 2, AtQ::One).unwrap();
        assert_eq!(s.values, ints(&[1, 6, 21]));
        let s = stretched_values(&p("2,2"), &"2^2".parse().unwrap(), 3, AtQ::Generic).unwrap();
        assert_eq!(s.values, ints(&[1, 1, 1, 1]));
        assert!(s.polynomials.unwrap().iter().all(QPolynomial::is_one));
    }

    #[test]
    fn agrees_with_gt() {
        for (lam, mu) in [("3,1", "1,1,1,1"), ("2,2", "2,1,1"), ("3,2", "2,2,1")] {
            let lam = p(lam);
            let mu = p(mu);
            let s = stretched_values(&lam, &RectangleSequence::rows(&mu), 5, AtQ::One).unwrap();
            let g = stretched_gt_series(&lam, mu.parts(), 5).unwrap();
            let g: Vec<BigInt> = g.into_iter().map(BigInt::from).collect();
            assert_eq!(s.values, g);
        }
    }

    #[test]
    fn family_helpers() {
        let (l, r) = family(2, 1, 4);
        assert_eq!(l, p("4,4,1,1"));
        assert_eq!(r.to_string(), "1^2,1^2,1^2,1^2,1^2");
        assert_eq!(detect_family(&l, &r), Some((2, 1, 4)));
        assert_eq!(detect_family(&p("3,1"), &RectangleSequence::repeated(1, 1, 4)), Some((1, 1, 3)));
        assert_eq!(detect_family(&p("3,2"), &RectangleSequence::repeated(1, 1, 5)), None);
        for n in 3..=8 {
            assert_eq!(family_denominator_power(2, 1, n), 4 * n - 6);
        }
        assert_eq!(family_numerator_degree(2, 6), 6);
        assert_eq!(family_numerator_degree(3, 5), 14);
        assert_eq!(family_numerator_degree(4, 3), 6);
    }

    #[test]
    fn small_numerators() {
        assert_eq!(family_numerator(2, 1, 3, 6).unwrap(), ints(&[1]));
        assert_eq!(family_numerator(2, 1, 4, 7).unwrap(), ints(&[1, 0, 1]));
        assert_eq!(family_numerator(2, 1, 5, 9).unwrap(), ints(&[1, 1, 6, 1, 1]));
        assert_eq!(family_numerator(3, 1, 3, 7).unwrap(), ints(&[1, -1, 1]));
        let (l, r) = family(1, 1, 4);
        let s = stretched_values(&l, &r, 8, AtQ::One).unwrap();
        assert_eq!(observed_degree(&s.values), Some(3));
    }

    #[test]
    fn closed_forms_match_fermionic() {
        for n in 3..=5 {
            let f = OkounkovForms::new(n).unwrap();
            let (l, r) = family(1, 1, n);
            let single = stretched_values(&l, &r, 4, AtQ::One).unwrap();
            let (l2, r2) = family(2, 1, n);
            let doubled = stretched_values(&l2, &r2, 4, AtQ::One).unwrap();
            for m in 0..=4u64 {
                assert_eq!(single.values[m as usize], f.single(m));
                assert_eq!(doubled.values[m as usize], f.doubled(m));
            }
        }
        assert!(OkounkovForms::new(6).is_err());
        let f = OkounkovForms::new(5).unwrap();
        assert!(f.single(0).is_one() && f.doubled(0).is_one());
    }

    #[test]
    fn thresholds() {
        let r = okounkov_threshold(3, 2, 50).unwrap();
        assert_eq!(r.threshold, 21);
        assert!(r.holds_on_window && r.fails_below);
        assert_eq!(okounkov_threshold(4, 2, 50).unwrap().threshold, 8);
        assert_eq!(okounkov_threshold(5, 2, 50).unwrap().threshold, 6);
        let r = okounkov_threshold(5, 3, 100).unwrap();
        assert_eq!(r.threshold, 45010);
        assert!(r.holds_on_window && r.fails_below);
    }

    #[test]
    fn certificates() {
        let c = okounkov_certificate(3, 1..=40).unwrap();
        assert!(c.holds);
        let c = okounkov_certificate(5, 0..=0).unwrap();
        assert!(c.holds);
        let c = okounkov_certificate(5, 1..=40).unwrap();
        assert!(!c.holds);
        assert_eq!(c.observed_scale.as_deref(), Some("5189184"));
        assert!(okounkov_certificate(4, 1..=3).is_err());
    }

    #[test]
    fn gt_generating_functions() {
        assert!(gt_generating_function_check(2, 1, 5, true).unwrap());
        assert!(gt_generating_function_check(3, 1, 4, true).unwrap());
        assert!(gt_generating_function_check(3, 2, 4, false).unwrap());
        let k = kostka_foulkes(&p("3,1"), &p("1,1,1,1")).unwrap().polynomial;
        assert_eq!(k, QPolynomial::from_i64s(3, &[1, 1, 1]));
    }

    #[test]
    fn gaussian_identity() {
        for size in 1..=3 {
            for lam in crate::partitions::partitions_of(size) {
                for big_n in 1..=3 {
                    assert!(gaussian_kostka_identity(&lam, big_n).unwrap(), "{lam} {big_n}");
                }
            }
        }
    }

    #[test]
    fn saturation() {
        assert!(saturation_holds(&p("4,2"), &RectangleSequence::rows(&p("2,2,1,1")), 3).unwrap());
        assert!(saturation_holds(&p("3,1"), &RectangleSequence::rows(&p("1,1,1,1")), 3).unwrap());
    }

    #[test]
    fn scan() {
        let r = general_counterexample_scan(3, 2, 1, 3).unwrap();
        assert!(r.hypothesis_holds);
        assert!(!r.certifying);
        assert_eq!(r.rows.len(), 4);
        assert!(general_counterexample_scan(5, 1, 1, 3).is_err());
    }
}
