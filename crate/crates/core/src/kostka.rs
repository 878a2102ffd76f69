//! Parabolic Kostka and Kostka–Foulkes polynomials from the fermionic
//! formula, the duality check, and Littlewood–Richardson numbers.

use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{
    enumerate_admissible_type, fold_admissible, maximal_configuration, ColumnStats, ConfigType,
    Configuration,
};
use crate::error::{Error, Result};
use crate::partitions::{Partition, RectangleSequence};
use crate::qpoly::{binomial, gauss_binomial, QPolynomial};

/// A q-binomial factor `[top choose bottom]_q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub top: usize,
    pub bottom: usize,
}

impl Factor {
    pub fn poly(&self) -> QPolynomial {
        gauss_binomial(self.top, self.bottom as i64)
    }

    pub fn at_one(&self) -> BigUint {
        binomial(self.top, self.bottom)
            .to_biguint()
            .expect("binomials are nonnegative")
    }
}

/// One configuration's term `q^charge Π factors`.
#[derive(Clone, Debug)]
pub struct Contribution {
    pub configuration: Configuration,
    pub charge: u64,
    pub factors: Vec<Factor>,
}

impl Contribution {
    pub fn polynomial(&self) -> QPolynomial {
        self.factors
            .iter()
            .fold(QPolynomial::q_pow(self.charge as usize), |acc, f| &acc * &f.poly())
    }

    pub fn at_one(&self) -> BigUint {
        self.factors.iter().map(Factor::at_one).product()
    }
}

#[derive(Clone, Debug)]
pub struct KostkaResult {
    pub polynomial: QPolynomial,
    pub contributions: Vec<Contribution>,
}

/// The standard factors `[P + m choose m]` over essential `(k, j)`.
pub fn standard_factors(stats: &ColumnStats<'_>) -> Vec<Factor> {
    stats
        .essentials()
        .into_iter()
        .filter(|e| e.p > 0)
        .map(|e| Factor {
            top: e.p as usize + e.m,
            bottom: e.m,
        })
        .collect()
}

fn build_type(lambda: &Partition, rects: &RectangleSequence) -> Result<Option<Arc<ConfigType>>> {
    match ConfigType::new(lambda.clone(), rects.clone()) {
        Ok(t) => Ok(Some(Arc::new(t))),
        Err(Error::NegativeLevel { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// The fermionic sum over the admissible configurations of a type.
pub fn fermionic(ty: &Arc<ConfigType>) -> Result<KostkaResult> {
    let configs = enumerate_admissible_type(ty)?;
    let contributions: Vec<Contribution> = configs
        .into_iter()
        .map(|c| {
            let stats = c.stats();
            let charge = stats.charge() as u64;
            let factors = standard_factors(&stats);
            drop(stats);
            Contribution {
                configuration: c,
                charge,
                factors,
            }
        })
        .collect();
    let terms: Vec<QPolynomial> = contributions.par_iter().map(Contribution::polynomial).collect();
    let polynomial = terms.into_iter().sum();
    Ok(KostkaResult {
        polynomial,
        contributions,
    })
}

/// `K_{λ,R}(q)`; the zero polynomial when no admissible configuration exists.
pub fn parabolic_kostka(lambda: &Partition, rects: &RectangleSequence) -> Result<KostkaResult> {
    match build_type(lambda, rects)? {
        Some(ty) => fermionic(&ty),
        None => Ok(KostkaResult {
            polynomial: QPolynomial::zero(),
            contributions: Vec::new(),
        }),
    }
}

/// `K_{λ,μ}(q)`, the single-row rectangles case.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Result<KostkaResult> {
    parabolic_kostka(lambda, &RectangleSequence::rows(mu))
}

fn product_at_one(stats: &ColumnStats<'_>) -> BigUint {
    let mut small: u128 = 1;
    let mut big: Option<BigUint> = None;
    for f in standard_factors(stats) {
        let b = binomial(f.top, f.bottom).to_biguint().unwrap();
        match (&mut big, u128::try_from(&b).ok().and_then(|v| small.checked_mul(v))) {
            (None, Some(v)) => small = v,
            (None, None) => big = Some(BigUint::from(small) * b),
            (Some(acc), _) => *acc *= b,
        }
    }
    big.unwrap_or_else(|| BigUint::from(small))
}

/// `K_{λ,R}(1)`, evaluating every factor as an integer binomial.
pub fn kostka_at_one_type(ty: &ConfigType) -> Result<BigUint> {
    fold_admissible(
        ty,
        BigUint::zero,
        |acc, cols| {
            let stats = ColumnStats::new(ty, cols);
            *acc += product_at_one(&stats);
        },
        |a, b| a + b,
    )
}

pub fn parabolic_kostka_at_one(lambda: &Partition, rects: &RectangleSequence) -> Result<BigUint> {
    match build_type(lambda, rects)? {
        Some(ty) => kostka_at_one_type(&ty),
        None => Ok(BigUint::zero()),
    }
}

/// Both sides of `K_{λ,R}(q) = q^{n(R)} K_{λ',R'}(q^{-1})`.
#[derive(Clone, Debug)]
pub struct DualityCheck {
    pub left: QPolynomial,
    pub right: QPolynomial,
    pub holds: bool,
}

pub fn duality_sides(lambda: &Partition, rects: &RectangleSequence) -> Result<DualityCheck> {
    let left = parabolic_kostka(lambda, rects)?.polynomial;
    let dual = parabolic_kostka(&lambda.conjugate(), &rects.transpose())?.polynomial;
    let n = rects.n_stat();
    let right = match dual.degree() {
        Some(d) if d > n => QPolynomial::zero(),
        _ => dual.reflect(n),
    };
    let holds = left == right && dual.degree().is_none_or(|d| d <= n);
    Ok(DualityCheck { left, right, holds })
}

pub fn verify_duality(lambda: &Partition, rects: &RectangleSequence) -> Result<bool> {
    Ok(duality_sides(lambda, rects)?.holds)
}

/// Minimal degree `a(λ,R)` and its coefficient `b(λ,R)`.
pub fn min_degree_and_leading(
    lambda: &Partition,
    rects: &RectangleSequence,
) -> Result<(usize, BigInt)> {
    let k = parabolic_kostka(lambda, rects)?.polynomial;
    match k.min_degree() {
        Some(a) => Ok((a, k.coeff(a))),
        None => Err(Error::ZeroKostka),
    }
}

/// Minimal degree and coefficient computed without expanding polynomials:
/// the lowest charge and the number of configurations attaining it.
pub fn min_degree_and_leading_fast(ty: &ConfigType) -> Result<(usize, BigUint)> {
    let best = fold_admissible(
        ty,
        || None::<(u64, BigUint)>,
        |acc, cols| {
            let c = ColumnStats::new(ty, cols).charge() as u64;
            match acc {
                Some((m, n)) if *m == c => *n += 1u32,
                Some((m, _)) if *m < c => {}
                _ => *acc = Some((c, BigUint::one())),
            }
        },
        |a, b| match (a, b) {
            (None, x) | (x, None) => x,
            (Some((ma, na)), Some((mb, nb))) => Some(match ma.cmp(&mb) {
                std::cmp::Ordering::Less => (ma, na),
                std::cmp::Ordering::Greater => (mb, nb),
                std::cmp::Ordering::Equal => (ma, na + nb),
            }),
        },
    )?;
    best.map(|(a, b)| (a as usize, b)).ok_or(Error::ZeroKostka)
}

/// `q^{c(Δ)} Π_{j=1}^{λ_2} [Q_j(μ) − Q_j(λ) + λ'_j − λ'_{j+1} choose λ'_j − λ'_{j+1}]_q`
/// with `c(Δ) = n(λ) + n(μ) − Σ_j μ'_j (λ'_j − 1)`.
pub fn max_config_contribution(lambda: &Partition, mu: &Partition) -> Result<QPolynomial> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    let lc = lambda.columns();
    let mc = mu.columns();
    let col = |v: &[usize], j: usize| v.get(j - 1).copied().unwrap_or(0) as i64;
    let width = lc.len().max(mc.len());
    let cross: i64 = (1..=width)
        .map(|j| col(&mc, j) * (col(&lc, j) - 1))
        .sum();
    let charge = lambda.n_stat() as i64 + mu.n_stat() as i64 - cross;
    let mut poly = QPolynomial::one();
    for j in 1..=lambda.part(1) {
        let m = col(&lc, j) - col(&lc, j + 1);
        let top = mu.column_sum(j) as i64 - lambda.column_sum(j) as i64 + m;
        if top < 0 {
            return Ok(QPolynomial::zero());
        }
        poly = &poly * &gauss_binomial(top as usize, m);
    }
    if poly.is_zero() {
        return Ok(poly);
    }
    if charge < 0 {
        return Ok(QPolynomial::zero());
    }
    Ok(poly.shift(charge as usize))
}

/// The configuration `Δ(λ, μ)` and its charge, re-exported for convenience.
pub fn maximal_configuration_charge(lambda: &Partition, mu: &Partition) -> Result<u64> {
    Ok(maximal_configuration(lambda, mu)?.charge())
}

/// `c^ν_{λμ}`, counted as LR tableaux of shape `ν/λ` and content `μ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigUint> {
    if lambda.size() + mu.size() != nu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size() + mu.size(),
            right: nu.size(),
        });
    }
    if !nu.contains(lambda) {
        return Ok(BigUint::zero());
    }
    crate::tableaux::count_lr_tableaux(nu, lambda, mu)
}

/// Outer and inner shapes whose skew difference is the disjoint union of the
/// rectangles of `rects`, stacked from north-east to south-west.
pub fn disjoint_rectangles_shape(rects: &RectangleSequence) -> (Partition, Partition) {
    let r = rects.rects();
    let mut outer = Vec::new();
    let mut inner = Vec::new();
    for i in 0..r.len() {
        let from_here: usize = r[i..].iter().map(|x| x.width).sum();
        let after: usize = r[i + 1..].iter().map(|x| x.width).sum();
        for _ in 0..r[i].height {
            outer.push(from_here);
            inner.push(after);
        }
    }
    (
        Partition::from_unsorted(outer),
        Partition::from_unsorted(inner),
    )
}

/// The type `(Λ, M)` whose minimal-degree coefficient realizes `c^ν_{λμ}`:
/// `Λ = (N + λ_1, ..., N + λ_N, μ)`, `M` the rectangle `N^N` with the rows of `ν`.
pub fn lr_embedding(
    n: usize,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<(Partition, RectangleSequence)> {
    if n < lambda.len() || n < mu.first() {
        return Err(Error::RangeError(format!(
            "need N ≥ max(ℓ(λ), μ_1), got {n}"
        )));
    }
    let mut parts: Vec<usize> = (0..n).map(|i| n + lambda.part(i)).collect();
    parts.extend(mu.parts());
    let big = Partition::new(parts)?;
    let mut rects = vec![crate::partitions::Rect::new(n, n)];
    rects.extend(nu.parts().iter().map(|&w| crate::partitions::Rect::new(w, 1)));
    Ok((big, RectangleSequence::new(rects)?.dominant_rearrangement()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;
    use crate::qpoly::q_integer;
    use crate::tableaux::charge_generating_function;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn r(s: &str) -> RectangleSequence {
        s.parse().unwrap()
    }

    fn b(n: usize, k: usize) -> QPolynomial {
        gauss_binomial(n, k as i64)
    }

    #[test]
    fn example_polynomial() {
        let res = parabolic_kostka(&p("4,4,3,3,2"), &r("2^3,2^2,2^2,1,1")).unwrap();
        let two = b(2, 1);
        let expected = b(3, 1).shift(10)
            + (&(&two * &two) * &(&two * &two)).shift(8)
            + b(3, 2).shift(8)
            + QPolynomial::q_pow(12)
            + (&two * &b(3, 2)).shift(6)
            + QPolynomial::q_pow(8);
        assert_eq!(res.polynomial, expected);
        assert_eq!(res.contributions.len(), 6);
        let second = res
            .contributions
            .iter()
            .find(|c| c.configuration.levels()[1] == p("3,2,1"))
            .unwrap();
        assert_eq!(second.charge, 8);
        assert_eq!(second.factors.len(), 4);
    }

    #[test]
    fn small_kostka_foulkes() {
        assert_eq!(
            kostka_foulkes(&p("2,1"), &p("1,1,1")).unwrap().polynomial,
            QPolynomial::from_i64s(1, &[1, 1])
        );
        assert_eq!(
            kostka_foulkes(&p("3,1"), &p("1,1,1,1")).unwrap().polynomial,
            QPolynomial::from_i64s(3, &[1, 1, 1])
        );
        for lam in partitions_of(6) {
            assert!(kostka_foulkes(&lam, &lam).unwrap().polynomial.is_one());
        }
        assert!(kostka_foulkes(&p("1,1"), &p("2")).unwrap().polynomial.is_zero());
        assert!(parabolic_kostka(&p("3,3"), &r("3^2")).unwrap().polynomial.is_one());
    }

    #[test]
    fn three_row_catalan_value() {
        let ty = ConfigType::new(p("5,5,5"), RectangleSequence::repeated(1, 1, 15)).unwrap();
        assert_eq!(kostka_at_one_type(&ty).unwrap(), BigUint::from(6006u32));
    }

    #[test]
    fn matches_charge_oracle() {
        for n in 1..=6 {
            for lam in partitions_of(n) {
                for mu in partitions_of(n) {
                    let f = kostka_foulkes(&lam, &mu).unwrap().polynomial;
                    let c = charge_generating_function(&lam, &mu).unwrap();
                    assert_eq!(f, c, "{lam} {mu}");
                    let one = parabolic_kostka_at_one(&lam, &RectangleSequence::rows(&mu)).unwrap();
                    assert_eq!(BigInt::from(one), f.eval_one());
                }
            }
        }
    }

    #[test]
    fn duality_examples() {
        assert!(verify_duality(&p("4,4,3,3,2"), &r("2^3,2^2,2^2,1,1")).unwrap());
        assert!(verify_duality(&p("5"), &r("5")).unwrap());
        let d = duality_sides(&p("2,1"), &r("1,1,1")).unwrap();
        assert!(d.holds);
        assert_eq!(d.right, QPolynomial::from_i64s(1, &[1, 1]));
    }

    #[test]
    fn leading_terms() {
        assert_eq!(
            min_degree_and_leading(&p("2,1"), &r("1,1,1")).unwrap(),
            (1, BigInt::one())
        );
        assert_eq!(
            min_degree_and_leading(&p("4,4"), &r("4,4")).unwrap(),
            (0, BigInt::one())
        );
        for n in 1..=3 {
            let lam = p("4,2").scale(n);
            let mu = RectangleSequence::rows(&p("2,2,1,1")).scale(n);
            let (a, lead) = min_degree_and_leading(&lam, &mu).unwrap();
            assert_eq!(a, 3 * n);
            assert_eq!(lead, BigInt::from(n + 1));
            let ty = ConfigType::new(lam, mu).unwrap();
            let (a2, lead2) = min_degree_and_leading_fast(&ty).unwrap();
            assert_eq!((a2, BigInt::from(lead2)), (a, lead));
        }
        assert_eq!(
            min_degree_and_leading(&p("1,1"), &r("2")),
            Err(Error::ZeroKostka)
        );
    }

    #[test]
    fn maximal_contribution() {
        assert!(max_config_contribution(&p("3,2"), &p("3,2")).unwrap().is_one());
        assert_eq!(
            max_config_contribution(&p("2,1"), &p("1,1,1")).unwrap(),
            q_integer(2).shift(1)
        );
        assert!(max_config_contribution(&p("1,1"), &p("2")).unwrap().eval_one().is_zero());
        for n in 1..=7 {
            for lam in partitions_of(n) {
                for mu in partitions_of(n) {
                    let k = kostka_foulkes(&lam, &mu).unwrap().polynomial;
                    let delta = max_config_contribution(&lam, &mu).unwrap();
                    assert!(k.dominates(&delta), "{lam} {mu}");
                    if lam.dominates(&mu) {
                        let d = maximal_configuration(&lam, &mu).unwrap();
                        assert!(d.is_admissible());
                        let stats = d.stats();
                        let own = standard_factors(&stats)
                            .iter()
                            .fold(QPolynomial::q_pow(stats.charge() as usize), |acc, f| {
                                &acc * &f.poly()
                            });
                        assert_eq!(own, delta, "{lam} {mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p("1"), &p("1"), &p("2")).unwrap(), BigUint::one());
        assert_eq!(
            lr_coefficient(&p("2,1"), &p("2,1"), &p("3,2,1")).unwrap(),
            BigUint::from(2u32)
        );
        let (big, m) = lr_embedding(2, &p("1"), &p("1"), &p("2")).unwrap();
        assert_eq!(big, p("3,2,1"));
        let (_, lead) = min_degree_and_leading(&big, &m).unwrap();
        assert_eq!(lead, BigInt::one());
    }

    #[test]
    fn disjoint_rectangles() {
        let (outer, inner) = disjoint_rectangles_shape(&r("2^2,1"));
        assert_eq!(outer, p("3,3,1"));
        assert_eq!(inner, p("1,1"));
    }
}
