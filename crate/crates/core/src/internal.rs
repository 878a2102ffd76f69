//! Internal (Kronecker) products of Schur functions: characters, principal
//! specializations, the fermionic formula and Liskova polynomials.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::config::{enumerate_admissible_type, ColumnStats, ConfigType, Configuration};
use crate::error::{Error, Result};
use crate::kostka::{kostka_foulkes, parabolic_kostka, Factor};
use crate::partitions::{partitions_of, Partition, Rect, RectangleSequence};
use crate::qpoly::QPolynomial;

/// Largest `n` for which a full character table is built.
pub const CHARACTER_CAP: usize = 10;

/// `χ^λ_ρ` for `λ, ρ ⊢ n` with class sizes `n!/z_ρ`.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    chi: HashMap<(usize, usize), i64>,
    pub class_sizes: Vec<BigInt>,
}

impl CharacterTable {
    fn index(&self, p: &Partition) -> usize {
        self.partitions
            .iter()
            .position(|x| x == p)
            .expect("partition of the table's size")
    }

    pub fn chi(&self, lambda: &Partition, rho: &Partition) -> i64 {
        self.chi[&(self.index(lambda), self.index(rho))]
    }

    fn chi_idx(&self, l: usize, r: usize) -> i64 {
        self.chi[&(l, r)]
    }

    pub fn factorial(&self) -> BigInt {
        (1..=self.n).fold(BigInt::one(), |a, k| a * k)
    }
}

/// `z_ρ = Π_i i^{m_i} m_i!`.
pub fn z_rho(rho: &Partition) -> BigInt {
    let mut z = BigInt::one();
    let mut i = 0;
    let parts = rho.parts();
    while i < parts.len() {
        let v = parts[i];
        let mut m = 0;
        while i < parts.len() && parts[i] == v {
            m += 1;
            i += 1;
            z *= v;
            z *= m;
        }
    }
    z
}

/// Beta-set of `λ` with `len` beads.
fn beta_set(lambda: &Partition, len: usize) -> Vec<usize> {
    (0..len).map(|i| lambda.part(i) + len - 1 - i).collect()
}

fn from_beta(beta: &[usize]) -> Partition {
    let mut b = beta.to_vec();
    b.sort_unstable_by(|x, y| y.cmp(x));
    let len = b.len();
    Partition::from_unsorted(b.iter().enumerate().map(|(i, &x)| x + i + 1 - len).collect())
}

/// Murnaghan–Nakayama: strip border strips of the sizes in `rho`, in order.
fn mn_character(
    lambda: &Partition,
    rho: &[usize],
    memo: &mut HashMap<(Partition, usize), i64>,
) -> i64 {
    if rho.is_empty() {
        return i64::from(lambda.size() == 0);
    }
    let key = (lambda.clone(), rho.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let h = rho[0];
    let len = lambda.len() + h;
    let beta = beta_set(lambda, len);
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < h || beta.contains(&(b - h)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - h && x < b).count();
        let mut nb = beta.clone();
        nb[idx] = b - h;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_character(&from_beta(&nb), &rho[1..], memo);
    }
    memo.insert(key, total);
    total
}

/// `χ^λ_ρ` for a single pair.
pub fn character(lambda: &Partition, rho: &Partition) -> i64 {
    let mut memo = HashMap::new();
    mn_character(lambda, rho.parts(), &mut memo)
}

pub fn character_table(n: usize) -> Result<CharacterTable> {
    if n > CHARACTER_CAP {
        return Err(Error::EnumerationCapExceeded {
            cap: CHARACTER_CAP as u64,
        });
    }
    let partitions = partitions_of(n);
    let mut fact = BigInt::one();
    for k in 2..=n {
        fact *= k;
    }
    let class_sizes = partitions.iter().map(|r| &fact / z_rho(r)).collect();
    let mut chi = HashMap::new();
    for (ri, rho) in partitions.iter().enumerate() {
        // memo keyed on (shape, remaining suffix length) is valid per ρ
        let mut memo = HashMap::new();
        for (li, lam) in partitions.iter().enumerate() {
            chi.insert((li, ri), mn_character(lam, rho.parts(), &mut memo));
        }
    }
    Ok(CharacterTable {
        n,
        partitions,
        chi,
        class_sizes,
    })
}

fn same_size(alpha: &Partition, beta: &Partition) -> Result<()> {
    if alpha.size() != beta.size() {
        return Err(Error::SizeMismatch {
            left: alpha.size(),
            right: beta.size(),
        });
    }
    Ok(())
}

fn exact_div(num: BigInt, den: &BigInt) -> Result<BigInt> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::NonIntegral(format!("{num} / {den}")));
    }
    Ok(q)
}

/// `g_{αβγ}` for every `γ` with a nonzero coefficient.
pub fn kronecker_coefficients(alpha: &Partition, beta: &Partition) -> Result<BTreeMap<Partition, BigInt>> {
    same_size(alpha, beta)?;
    let t = character_table(alpha.size())?;
    let (a, b) = (t.index(alpha), t.index(beta));
    let fact = t.factorial();
    let mut out = BTreeMap::new();
    for (gi, gamma) in t.partitions.iter().enumerate() {
        let mut sum = BigInt::zero();
        for (ri, size) in t.class_sizes.iter().enumerate() {
            sum += size * (t.chi_idx(a, ri) * t.chi_idx(b, ri) * t.chi_idx(gi, ri));
        }
        let g = exact_div(sum, &fact)?;
        if g.is_negative() {
            return Err(Error::NonIntegral(format!("negative coefficient for {gamma}")));
        }
        if !g.is_zero() {
            out.insert(gamma.clone(), g);
        }
    }
    Ok(out)
}

/// `s_α * s_β (q, q^2, ..., q^{N-1})` from the class sum.
pub fn principal_specialization_character(alpha: &Partition, beta: &Partition, big_n: usize) -> Result<QPolynomial> {
    same_size(alpha, beta)?;
    if big_n < 2 {
        return Err(Error::TooSmallN { n: big_n, min: 1 });
    }
    let t = character_table(alpha.size())?;
    let (a, b) = (t.index(alpha), t.index(beta));
    let mut sum = QPolynomial::zero();
    for (ri, rho) in t.partitions.iter().enumerate() {
        let c = t.chi_idx(a, ri) * t.chi_idx(b, ri);
        if c == 0 {
            continue;
        }
        let mut term = QPolynomial::constant(&t.class_sizes[ri] * c);
        for &part in rho.parts() {
            // q^part [N-1]_{q^part}
            let geometric = QPolynomial::from_coeffs(
                0,
                (0..(big_n - 1) * part)
                    .map(|e| if e % part == 0 { BigInt::one() } else { BigInt::zero() })
                    .collect(),
            );
            term = &term * &geometric.shift(part);
        }
        sum += term;
    }
    let fact = t.factorial();
    let coeffs: Result<Vec<BigInt>> = sum
        .coeffs_from_zero()
        .into_iter()
        .map(|c| exact_div(c, &fact))
        .collect();
    Ok(QPolynomial::from_coeffs(0, coeffs?))
}

/// `[α,β]_N = (α_1+β_1, ..., α_r+β_1, β_1^{N-r-s}, β_1-β_s, ..., β_1-β_2)`.
pub fn bracket_partition(alpha: &Partition, beta: &Partition, big_n: usize) -> Result<Partition> {
    let (r, s) = (alpha.len(), beta.len());
    if r + s >= big_n {
        return Err(Error::TooSmallN { n: big_n, min: r + s });
    }
    let b1 = beta.first();
    let mut parts: Vec<usize> = alpha.parts().iter().map(|a| a + b1).collect();
    parts.extend(std::iter::repeat_n(b1, big_n - r - s));
    parts.extend((2..=s).rev().map(|j| b1 - beta.part(j - 1)));
    Partition::new(parts)
}

/// One term of the internal fermionic sum.
#[derive(Clone, Debug)]
pub struct InternalContribution {
    pub configuration: Configuration,
    pub charge: u64,
    /// `[P + m + aug, P]` for every `(k, j)` with `P > 0`.
    pub factors: Vec<Factor>,
    /// `(k, j, P, m + aug)` for every `(k, j)` entering the symmetry identity.
    pub data: Vec<(usize, usize, i64, usize)>,
}

impl InternalContribution {
    pub fn polynomial(&self) -> QPolynomial {
        self.factors
            .iter()
            .fold(QPolynomial::q_pow(self.charge as usize), |acc, f| &acc * &f.poly())
    }

    /// The conjugate of the first level.
    pub fn first_level_columns(&self) -> Vec<usize> {
        self.configuration.columns().first().cloned().unwrap_or_default()
    }
}

#[derive(Clone, Debug)]
pub struct InternalFermionic {
    pub polynomial: QPolynomial,
    pub contributions: Vec<InternalContribution>,
}

/// The type `([α,β]_N, (β_1)^N)`.
pub fn internal_type(alpha: &Partition, beta: &Partition, big_n: usize) -> Result<Arc<ConfigType>> {
    same_size(alpha, beta)?;
    let lambda = bracket_partition(alpha, beta, big_n)?;
    let mu = Partition::from_unsorted(vec![beta.first(); big_n]);
    Ok(Arc::new(ConfigType::kostka_foulkes(lambda, &mu)?))
}

fn internal_data(stats: &ColumnStats<'_>, levels: usize, r: usize, b1: usize, big_n: usize, width: usize) -> Vec<(usize, usize, i64, usize)> {
    let mut out = Vec::new();
    for k in 1..=levels {
        for j in 1..=width.max(b1) {
            let aug = if j == b1 && k >= 2 && k <= r { big_n * (k - 1) } else { 0 };
            let m = stats.multiplicity(k, j) + aug;
            if m > 0 {
                out.push((k, j, stats.vacancy(k, j), m));
            }
        }
    }
    out
}

/// `Σ_ν q^{c(ν)} Π [P + m + N(k-1)δ_{j,β_1}θ(r-k), P]_q` over admissible
/// configurations of type `([α,β]_N, (β_1)^N)`.
pub fn internal_fermionic(alpha: &Partition, beta: &Partition, big_n: usize) -> Result<InternalFermionic> {
    let ty = internal_type(alpha, beta, big_n)?;
    let r = alpha.len();
    let b1 = beta.first();
    let configs = enumerate_admissible_type(&ty)?;
    let mut contributions = Vec::with_capacity(configs.len());
    for c in configs {
        let stats = c.stats();
        let width = c.columns().iter().map(Vec::len).max().unwrap_or(0);
        let data = internal_data(&stats, ty.levels(), r, b1, big_n, width);
        let charge = stats.charge() as u64;
        drop(stats);
        let factors = data
            .iter()
            .filter(|d| d.2 > 0)
            .map(|&(_, _, p, m)| Factor {
                top: p as usize + m,
                bottom: p as usize,
            })
            .collect();
        contributions.push(InternalContribution {
            configuration: c,
            charge,
            factors,
            data,
        });
    }
    let polynomial = contributions.iter().map(InternalContribution::polynomial).sum();
    Ok(InternalFermionic {
        polynomial,
        contributions,
    })
}

/// Checks `2c(ν) + Σ P (m + aug) = N|α|` for every configuration.
pub fn symmetry_center_identity(alpha: &Partition, beta: &Partition, big_n: usize) -> Result<bool> {
    let f = internal_fermionic(alpha, beta, big_n)?;
    let target = (big_n * alpha.size()) as i64;
    Ok(f.contributions.iter().all(|c| {
        let s: i64 = c.data.iter().map(|&(_, _, p, m)| p * m as i64).sum();
        2 * c.charge as i64 + s == target
    }))
}

/// `λ_N = (rN - β'_k, ..., rN - β'_1, α')` and `N` copies of the rectangle `(r^k)`.
pub fn dual_form_type(
    alpha: &Partition,
    beta: &Partition,
    r: usize,
    k: usize,
    big_n: usize,
) -> Result<(Partition, RectangleSequence)> {
    same_size(alpha, beta)?;
    if alpha.first() > r || beta.first() > k || alpha.first() + beta.first() > big_n * r {
        return Err(Error::RangeError(format!(
            "need α_1 ≤ r, β_1 ≤ k and α_1 + β_1 ≤ Nr (r = {r}, k = {k}, N = {big_n})"
        )));
    }
    let bc = beta.conjugate();
    let mut parts: Vec<usize> = (1..=k)
        .rev()
        .map(|i| {
            (r * big_n)
                .checked_sub(bc.part(i - 1))
                .ok_or_else(|| Error::RangeError("rN below a column of β".into()))
        })
        .collect::<Result<_>>()?;
    parts.extend(alpha.conjugate().parts());
    let lambda = Partition::new(parts)?;
    let rects = RectangleSequence::new(vec![Rect::new(r, k); big_n])?;
    Ok((lambda, rects))
}

/// Whether `K_{λ_N,R_N}(q)` and `s_α * s_β(q, ..., q^{N-1})` differ by a power of `q`.
pub fn verify_dual_form(alpha: &Partition, beta: &Partition, r: usize, k: usize, big_n: usize) -> Result<bool> {
    let (lambda, rects) = dual_form_type(alpha, beta, r, k, big_n)?;
    let kost = parabolic_kostka(&lambda, &rects)?.polynomial;
    let chr = principal_specialization_character(alpha, beta, big_n)?;
    Ok(kost.equals_up_to_q_power(&chr))
}

#[derive(Clone, Debug, Serialize)]
pub struct StableLimit {
    pub min_degree: usize,
    /// Leading coefficients of the limiting series.
    #[serde(serialize_with = "crate::display_serde::many")]
    pub series: Vec<BigInt>,
    /// The series times the hook polynomial of α, trailing zeros dropped.
    #[serde(serialize_with = "crate::display_serde::many")]
    pub numerator: Vec<BigInt>,
    pub stable_from: usize,
}

/// `Π_{x ∈ α} (1 - q^{h(x)})`.
pub fn hook_polynomial(alpha: &Partition) -> QPolynomial {
    alpha.cells().fold(QPolynomial::one(), |acc, (i, j)| {
        &acc * &(QPolynomial::one() - QPolynomial::q_pow(alpha.hook(i, j)))
    })
}

/// Raises `N` until the leading `depth` coefficients of the internal
/// fermionic sum repeat for three consecutive values of `N`.
pub fn stable_limit(alpha: &Partition, beta: &Partition, depth: usize, n_cap: usize) -> Result<StableLimit> {
    let start = alpha.len() + beta.len() + 1;
    let mut history: Vec<(usize, Vec<BigInt>)> = Vec::new();
    for big_n in start..=n_cap.max(start) {
        let p = internal_fermionic(alpha, beta, big_n)?.polynomial;
        let lo = p.min_degree().ok_or(Error::ZeroPolynomial)?;
        let prefix: Vec<BigInt> = (lo..lo + depth).map(|e| p.coeff(e)).collect();
        history.push((lo, prefix));
        let h = history.len();
        if h >= 3 && history[h - 1] == history[h - 2] && history[h - 2] == history[h - 3] {
            let (min_degree, series) = history.pop().unwrap();
            let truncated = &QPolynomial::from_coeffs(0, series.clone()) * &hook_polynomial(alpha);
            let mut numerator: Vec<BigInt> = (0..depth).map(|e| truncated.coeff(e)).collect();
            while numerator.last().is_some_and(Zero::is_zero) {
                numerator.pop();
            }
            return Ok(StableLimit {
                min_degree,
                series,
                numerator,
                stable_from: big_n - 2,
            });
        }
    }
    Err(Error::NoStabilization(n_cap))
}

/// `L^μ_{αβ}(q) = Σ_γ g_{αβγ} K_{γμ}(q)` for every `μ` with a nonzero result.
pub fn liskova(alpha: &Partition, beta: &Partition) -> Result<BTreeMap<Partition, QPolynomial>> {
    let g = kronecker_coefficients(alpha, beta)?;
    let mut out = BTreeMap::new();
    for mu in partitions_of(alpha.size()) {
        let mut total = QPolynomial::zero();
        for (gamma, coeff) in &g {
            total += kostka_foulkes(gamma, &mu)?.polynomial.scale(coeff);
        }
        if !total.is_nonnegative() {
            return Err(Error::NonIntegral(format!("negative coefficient in L^{mu}")));
        }
        if !total.is_zero() {
            out.insert(mu, total);
        }
    }
    Ok(out)
}

/// `q^{|α|} s_α(1, q, ..., q^{N-2})`, the value of the class sum when `β = (n)`.
pub fn one_row_specialization(alpha: &Partition, big_n: usize) -> QPolynomial {
    crate::qpoly::generalized_gaussian(big_n - 1, alpha).shift(alpha.size())
}
