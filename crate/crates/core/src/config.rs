//! Configurations of type `(λ, R)`: vacancy numbers, charge, pruned
//! enumeration of the admissible ones, and the integer-matrix encoding.
//!
//! Levels are indexed from 1 as in the usual notation; level 0 is the empty
//! partition. Internally a level is handled through its column lengths.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{enumeration_cap, Error, Result};
use crate::partitions::{Partition, RectangleSequence};

/// `x(x-1)/2` for any integer `x`; nonnegative everywhere.
pub fn binom2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// The type data `(λ, R)` with mandated level sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigType {
    lambda: Partition,
    rects: RectangleSequence,
    sizes: Vec<usize>,
    max_width: usize,
}

impl ConfigType {
    pub fn new(lambda: Partition, rects: RectangleSequence) -> Result<Self> {
        if lambda.size() != rects.size() {
            return Err(Error::SizeMismatch {
                left: lambda.size(),
                right: rects.size(),
            });
        }
        let levels = lambda.len().max(rects.max_height()).saturating_sub(1);
        let mut sizes = Vec::with_capacity(levels);
        for k in 1..=levels {
            let tail: usize = lambda.parts().iter().skip(k).sum();
            let taken: usize = rects
                .rects()
                .iter()
                .map(|r| r.width * r.height.saturating_sub(k))
                .sum();
            if taken > tail {
                return Err(Error::NegativeLevel {
                    level: k,
                    size: tail as i64 - taken as i64,
                });
            }
            sizes.push(tail - taken);
        }
        let max_width = rects.max_width();
        Ok(ConfigType {
            lambda,
            rects,
            sizes,
            max_width,
        })
    }

    /// The Kostka–Foulkes type: one single-row rectangle per part of `mu`.
    pub fn kostka_foulkes(lambda: Partition, mu: &Partition) -> Result<Self> {
        Self::new(lambda, RectangleSequence::rows(mu))
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn rects(&self) -> &RectangleSequence {
        &self.rects
    }

    /// Number of levels that may be nonempty.
    pub fn levels(&self) -> usize {
        self.sizes.len()
    }

    /// Mandated size of level `k`, zero outside `1..=levels`.
    pub fn size(&self, k: usize) -> usize {
        if k == 0 {
            0
        } else {
            self.sizes.get(k - 1).copied().unwrap_or(0)
        }
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn max_width(&self) -> usize {
        self.max_width
    }

    /// `Σ_{a: η_a = k} min(μ_a, j)`, the rectangle term of the vacancy numbers.
    pub fn source(&self, k: usize, j: usize) -> i64 {
        self.rects
            .rects()
            .iter()
            .filter(|r| r.height == k)
            .map(|r| r.width.min(j) as i64)
            .sum()
    }

    /// `#{a : η_a ≥ k, μ_a ≥ j}`, the rectangle term of the charge.
    pub fn weight(&self, k: usize, j: usize) -> i64 {
        self.rects
            .rects()
            .iter()
            .filter(|r| r.height >= k && r.width >= j)
            .count() as i64
    }

    /// The dual type `(λ', R')` with transposed rectangles, dominantly rearranged.
    pub fn dual(&self) -> Result<ConfigType> {
        ConfigType::new(self.lambda.conjugate(), self.rects.transpose())
    }

    /// `(Nλ, NR)`.
    pub fn stretch(&self, n: usize) -> Result<ConfigType> {
        ConfigType::new(self.lambda.scale(n), self.rects.scale(n))
    }
}

/// Mandated level sizes, truncated after the last nonzero one.
pub fn level_sizes(lambda: &Partition, rects: &RectangleSequence) -> Result<Vec<usize>> {
    let ty = ConfigType::new(lambda.clone(), rects.clone())?;
    let mut sizes = ty.sizes;
    while sizes.last() == Some(&0) {
        sizes.pop();
    }
    Ok(sizes)
}

/// Tabulated source and weight terms, indexed `[k][j]` for `j ≤ width`.
struct TypeTables {
    width: usize,
    source: Vec<Vec<i64>>,
    weight: Vec<Vec<i64>>,
}

impl TypeTables {
    fn new(ty: &ConfigType, width: usize) -> Self {
        let levels = ty.levels();
        let source = (0..=levels + 1)
            .map(|k| (0..=width).map(|j| ty.source(k, j)).collect())
            .collect();
        let weight = (0..=levels + 2)
            .map(|k| (0..=width).map(|j| ty.weight(k, j)).collect())
            .collect();
        TypeTables {
            width,
            source,
            weight,
        }
    }

    fn source(&self, k: usize, j: usize) -> i64 {
        self.source
            .get(k)
            .map_or(0, |row| row[j.min(self.width)])
    }

    fn weight(&self, k: usize, j: usize) -> i64 {
        if j > self.width {
            0
        } else {
            self.weight.get(k).map_or(0, |row| row[j])
        }
    }
}

fn prefix(cols: &[usize], upto: usize) -> Vec<i64> {
    let mut q = Vec::with_capacity(upto + 1);
    q.push(0i64);
    let mut acc = 0i64;
    for j in 1..=upto {
        acc += cols.get(j - 1).copied().unwrap_or(0) as i64;
        q.push(acc);
    }
    q
}

/// One essential vacancy datum: level `k`, part `j` with `m = m_j(ν^(k)) > 0`
/// and vacancy number `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Essential {
    pub k: usize,
    pub j: usize,
    pub p: i64,
    pub m: usize,
}

/// Vacancy and charge data computed straight from column vectors.
pub struct ColumnStats<'a> {
    ty: &'a ConfigType,
    tables: TypeTables,
    span: usize,
    prefixes: Vec<Vec<i64>>,
    cols: Vec<&'a [usize]>,
}

impl<'a> ColumnStats<'a> {
    /// `cols[k-1]` holds the column lengths of level `k`.
    pub fn new(ty: &'a ConfigType, cols: &'a [Vec<usize>]) -> Self {
        let longest = cols.iter().map(Vec::len).max().unwrap_or(0);
        let span = longest.max(ty.max_width()) + 1;
        let tables = TypeTables::new(ty, span);
        let mut level_cols: Vec<&[usize]> = vec![&[]];
        level_cols.extend(cols.iter().map(Vec::as_slice));
        level_cols.push(&[]);
        let prefixes = level_cols.iter().map(|c| prefix(c, span)).collect();
        ColumnStats {
            ty,
            tables,
            span,
            prefixes,
            cols: level_cols,
        }
    }

    fn q(&self, k: usize, j: usize) -> i64 {
        match self.prefixes.get(k) {
            Some(p) => p[j.min(self.span)],
            None => 0,
        }
    }

    fn col(&self, k: usize, j: usize) -> i64 {
        self.cols
            .get(k)
            .and_then(|c| c.get(j - 1))
            .map_or(0, |&x| x as i64)
    }

    pub fn vacancy(&self, k: usize, j: usize) -> i64 {
        if k == 0 {
            return 0;
        }
        self.q(k - 1, j) - 2 * self.q(k, j) + self.q(k + 1, j) + self.tables.source(k, j)
    }

    pub fn multiplicity(&self, k: usize, j: usize) -> usize {
        (self.col(k, j) - self.col(k, j + 1)) as usize
    }

    /// Every vacancy number that can be negative is nonnegative.
    pub fn is_admissible(&self) -> bool {
        (1..=self.ty.levels()).all(|k| (1..=self.span).all(|j| self.vacancy(k, j) >= 0))
    }

    pub fn essentials(&self) -> Vec<Essential> {
        let mut out = Vec::new();
        for k in 1..=self.ty.levels() {
            let len = self.cols[k].len();
            for j in 1..=len {
                let m = self.multiplicity(k, j);
                if m > 0 {
                    out.push(Essential {
                        k,
                        j,
                        p: self.vacancy(k, j),
                        m,
                    });
                }
            }
        }
        out
    }

    pub fn charge(&self) -> i64 {
        let mut c = 0;
        for k in 1..=self.ty.levels() + 1 {
            for j in 1..=self.span {
                c += binom2(self.col(k - 1, j) - self.col(k, j) + self.tables.weight(k, j));
            }
        }
        c
    }

    pub fn cocharge(&self) -> i64 {
        let mut c = 0;
        for k in 1..=self.ty.levels() + 1 {
            for j in 1..=self.span {
                c += binom2(self.col(k - 1, j) - self.col(k, j));
            }
        }
        c
    }

    /// `m_{ij} = α^{i-1}_j − α^i_j + #{a : η_a ≥ i, μ_a ≥ j}` on a `dim × dim` grid.
    pub fn matrix(&self, dim: usize) -> Vec<Vec<i64>> {
        (1..=dim)
            .map(|i| {
                (1..=dim)
                    .map(|j| self.col(i - 1, j) - self.col(i, j) + self.tables.weight(i, j))
                    .collect()
            })
            .collect()
    }
}

/// A sequence of partitions with the sizes mandated by its type.
#[derive(Clone, PartialEq, Eq)]
pub struct Configuration {
    ty: Arc<ConfigType>,
    levels: Vec<Partition>,
    cols: Vec<Vec<usize>>,
}

impl std::fmt::Debug for Configuration {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.levels).finish()
    }
}

impl Configuration {
    /// Levels beyond those given are empty. Sizes must match the type.
    pub fn new(ty: Arc<ConfigType>, mut levels: Vec<Partition>) -> Result<Self> {
        if levels.len() > ty.levels() && levels[ty.levels()..].iter().any(|l| !l.is_empty()) {
            return Err(Error::SizeMismatch {
                left: levels.len(),
                right: ty.levels(),
            });
        }
        levels.resize(ty.levels(), Partition::empty());
        for (k, l) in levels.iter().enumerate() {
            if l.size() != ty.size(k + 1) {
                return Err(Error::SizeMismatch {
                    left: l.size(),
                    right: ty.size(k + 1),
                });
            }
        }
        let cols = levels.iter().map(Partition::columns).collect();
        Ok(Configuration { ty, levels, cols })
    }

    pub(crate) fn from_columns(ty: Arc<ConfigType>, cols: Vec<Vec<usize>>) -> Self {
        let levels = cols.iter().map(|c| Partition::from_columns(c)).collect();
        Configuration { ty, levels, cols }
    }

    pub fn config_type(&self) -> &ConfigType {
        &self.ty
    }

    pub fn type_arc(&self) -> &Arc<ConfigType> {
        &self.ty
    }

    pub fn levels(&self) -> &[Partition] {
        &self.levels
    }

    /// Level `k` (from 1); empty outside the range.
    pub fn level(&self, k: usize) -> Partition {
        if k == 0 {
            return Partition::empty();
        }
        self.levels.get(k - 1).cloned().unwrap_or_default()
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.cols
    }

    pub fn stats(&self) -> ColumnStats<'_> {
        ColumnStats::new(&self.ty, &self.cols)
    }

    pub fn vacancy(&self, k: usize, j: usize) -> i64 {
        self.stats().vacancy(k, j)
    }

    pub fn is_admissible(&self) -> bool {
        self.stats().is_admissible()
    }

    pub fn charge(&self) -> u64 {
        self.stats().charge() as u64
    }

    pub fn cocharge(&self) -> u64 {
        self.stats().cocharge() as u64
    }

    pub fn essentials(&self) -> Vec<Essential> {
        self.stats().essentials()
    }

    /// The square matrix encoding, wide enough for the dual type as well.
    pub fn to_matrix(&self) -> ConfigMatrix {
        let dim = matrix_dim(&self.ty, &self.cols);
        ConfigMatrix {
            lambda: self.ty.lambda.clone(),
            rects: self.ty.rects.clone(),
            entries: self.stats().matrix(dim),
        }
    }

    pub fn report(&self) -> ConfigReport {
        ConfigReport {
            levels: self.levels.iter().map(|l| l.parts().to_vec()).collect(),
            charge: self.charge(),
            vacancy: self
                .essentials()
                .iter()
                .map(|e| (e.k, e.j, e.p))
                .collect(),
        }
    }
}

/// JSON form of a configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigReport {
    pub levels: Vec<Vec<usize>>,
    pub charge: u64,
    pub vacancy: Vec<(usize, usize, i64)>,
}

fn matrix_dim(ty: &ConfigType, cols: &[Vec<usize>]) -> usize {
    let longest = cols.iter().map(Vec::len).max().unwrap_or(0);
    [
        ty.lambda.len(),
        ty.lambda.first(),
        ty.rects.max_height(),
        ty.rects.max_width(),
        longest,
        1,
    ]
    .into_iter()
    .max()
    .unwrap()
}

// ---------------------------------------------------------------------------
// Enumeration

struct Search<'a> {
    ty: &'a ConfigType,
    tables: TypeTables,
    span: usize,
    /// Static upper bounds on `Q_j(ν^(k))`, `[k][j]` for `k = 0..=L+1`.
    upper: Vec<Vec<i64>>,
    cap: u64,
    seen: &'a AtomicU64,
    abort: &'a AtomicBool,
}

impl<'a> Search<'a> {
    fn new(ty: &'a ConfigType, seen: &'a AtomicU64, abort: &'a AtomicBool) -> Self {
        let levels = ty.levels();
        let biggest = ty.sizes().iter().copied().max().unwrap_or(0);
        let span = biggest.max(ty.max_width()) + 1;
        let tables = TypeTables::new(ty, span);
        let mut upper: Vec<Vec<i64>> = (0..=levels + 1)
            .map(|k| {
                let s = if k == 0 || k > levels { 0 } else { ty.size(k) };
                vec![s as i64; span + 1]
            })
            .collect();
        for row in upper.iter_mut() {
            row[0] = 0;
        }
        let mut changed = true;
        while changed {
            changed = false;
            for k in 1..=levels {
                #[allow(clippy::needless_range_loop)]
                for j in 1..=span {
                    let bound =
                        (upper[k - 1][j] + upper[k + 1][j] + tables.source(k, j)).div_euclid(2);
                    if bound < upper[k][j] {
                        upper[k][j] = bound;
                        changed = true;
                    }
                }
            }
        }
        Search {
            ty,
            tables,
            span,
            upper,
            cap: enumeration_cap(),
            seen,
            abort,
        }
    }

    fn infeasible(&self) -> bool {
        self.upper.iter().any(|row| row.iter().any(|&u| u < 0))
    }

    /// All candidates for level `k` given the prefix sums of levels `k-2`, `k-1`.
    fn candidates(&self, k: usize, before: &[i64], prev: &[i64]) -> Vec<Vec<usize>> {
        let s = self.ty.size(k);
        let span = self.span;
        let mut lb = vec![i64::MIN; span + 1];
        if k >= 2 {
            for j in 1..=span {
                lb[j] = 2 * prev[j] - before[j] - self.tables.source(k - 1, j);
            }
        }
        // Nonnegative vacancies force the differences Q_j(t+1) - Q_j(t) to
        // drop by at most src_t(j) per level, which caps Q_j(k) against every
        // later static bound.
        let levels = self.ty.levels();
        let mut ub = vec![0i64; span + 1];
        for j in 1..=span {
            let mut best = i64::MAX;
            let mut drop = 0i64;
            let mut carried = 0i64;
            for t in k + 1..=levels + 1 {
                drop += self.tables.source(t - 1, j);
                carried += drop;
                let steps = (t - k) as i64;
                let bound = (self.upper[t][j] + steps * prev[j] + carried).div_euclid(steps + 1);
                best = best.min(bound);
            }
            ub[j] = best;
        }
        let si = s as i64;
        // Beyond the last possible column the prefix sum is the full size.
        for j in s.max(1)..=span {
            if lb[j] > si || ub[j] < si {
                return Vec::new();
            }
        }
        let mut out = Vec::new();
        if s == 0 {
            out.push(Vec::new());
            return out;
        }
        let mut lo = vec![0i64; s + 1];
        let mut hi = vec![si; s + 1];
        for j in 1..=s {
            lo[j] = lb[j].max(0);
            hi[j] = ub[j].min(si);
        }
        lo[s] = si;
        for j in (1..s).rev() {
            hi[j] = hi[j].min(hi[j + 1]);
        }
        let mut cur = Vec::with_capacity(s);
        Self::columns(1, 0, s, &lo, &hi, &mut cur, &mut out);
        out
    }

    fn columns(
        j: usize,
        q: i64,
        maxc: usize,
        lo: &[i64],
        hi: &[i64],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let s = lo.len() - 1;
        if q == s as i64 {
            out.push(cur.clone());
            return;
        }
        if j > s {
            return;
        }
        let mut need = 1i64;
        for (t, &l) in lo.iter().enumerate().skip(j) {
            let width = (t - j + 1) as i64;
            let gap = l - q;
            if gap > 0 {
                need = need.max((gap + width - 1) / width);
            }
        }
        let top = (maxc as i64).min(hi[j] - q);
        let mut c = top;
        while c >= need {
            cur.push(c as usize);
            Self::columns(j + 1, q + c, c as usize, lo, hi, cur, out);
            cur.pop();
            c -= 1;
        }
    }

    fn dfs<T>(
        &self,
        k: usize,
        stack: &mut Vec<Vec<usize>>,
        prefixes: &mut Vec<Vec<i64>>,
        acc: &mut T,
        visit: &(impl Fn(&mut T, &[Vec<usize>]) + Sync),
    ) -> Result<()> {
        if self.abort.load(Ordering::Relaxed) {
            return Err(Error::EnumerationCapExceeded { cap: self.cap });
        }
        if k > self.ty.levels() {
            if self.seen.fetch_add(1, Ordering::Relaxed) + 1 > self.cap {
                self.abort.store(true, Ordering::Relaxed);
                return Err(Error::EnumerationCapExceeded { cap: self.cap });
            }
            visit(acc, stack);
            return Ok(());
        }
        let n = prefixes.len();
        let cands = self.candidates(k, &prefixes[n - 2], &prefixes[n - 1]);
        for c in cands {
            prefixes.push(prefix(&c, self.span));
            stack.push(c);
            let r = self.dfs(k + 1, stack, prefixes, acc, visit);
            stack.pop();
            prefixes.pop();
            r?;
        }
        Ok(())
    }

    /// Partial configurations of the first `depth` levels, for fan-out.
    fn seeds(&self, depth: usize) -> Vec<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        let zero = vec![0i64; self.span + 1];
        let mut prefixes = vec![zero.clone(), zero];
        self.seed_rec(1, depth, &mut stack, &mut prefixes, &mut out);
        out
    }

    fn seed_rec(
        &self,
        k: usize,
        depth: usize,
        stack: &mut Vec<Vec<usize>>,
        prefixes: &mut Vec<Vec<i64>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if k > depth || k > self.ty.levels() {
            out.push(stack.clone());
            return;
        }
        let n = prefixes.len();
        for c in self.candidates(k, &prefixes[n - 2], &prefixes[n - 1]) {
            prefixes.push(prefix(&c, self.span));
            stack.push(c);
            self.seed_rec(k + 1, depth, stack, prefixes, out);
            stack.pop();
            prefixes.pop();
        }
    }
}

/// Fold over every admissible configuration, given as column vectors of
/// levels `1..=L`. Work is split over the first two levels and merged with
/// `merge`, which must be associative and commutative for a deterministic result.
pub fn fold_admissible<T, I, V, M>(ty: &ConfigType, init: I, visit: V, merge: M) -> Result<T>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    V: Fn(&mut T, &[Vec<usize>]) + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    let seen = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let search = Search::new(ty, &seen, &abort);
    if search.infeasible() {
        return Ok(init());
    }
    let seeds = search.seeds(2);
    let zero = vec![0i64; search.span + 1];
    seeds
        .par_iter()
        .try_fold(&init, |mut acc, seed| {
            let mut prefixes = vec![zero.clone(), zero.clone()];
            for c in seed {
                prefixes.push(prefix(c, search.span));
            }
            let mut stack = seed.clone();
            search.dfs(seed.len() + 1, &mut stack, &mut prefixes, &mut acc, &visit)?;
            Ok(acc)
        })
        .try_reduce(&init, |a, b| Ok(merge(a, b)))
}

/// Every admissible configuration, sorted lexicographically by levels.
pub fn enumerate_admissible_type(ty: &Arc<ConfigType>) -> Result<Vec<Configuration>> {
    let mut all = fold_admissible(
        ty,
        Vec::new,
        |acc: &mut Vec<Vec<Vec<usize>>>, cols| acc.push(cols.to_vec()),
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )?;
    all.sort_by(|a, b| {
        let pa: Vec<Partition> = a.iter().map(|c| Partition::from_columns(c)).collect();
        let pb: Vec<Partition> = b.iter().map(|c| Partition::from_columns(c)).collect();
        pa.cmp(&pb)
    });
    Ok(all
        .into_iter()
        .map(|cols| Configuration::from_columns(ty.clone(), cols))
        .collect())
}

pub fn enumerate_admissible(
    lambda: &Partition,
    rects: &RectangleSequence,
) -> Result<Vec<Configuration>> {
    let ty = Arc::new(ConfigType::new(lambda.clone(), rects.clone())?);
    enumerate_admissible_type(&ty)
}

/// Number of admissible configurations.
pub fn count_admissible(ty: &ConfigType) -> Result<u64> {
    fold_admissible(ty, || 0u64, |n, _| *n += 1, |a, b| a + b)
}

/// Every configuration with the mandated sizes, admissible or not. Only for
/// tiny types; used as an oracle for the pruned search.
pub fn enumerate_all_configurations(ty: &Arc<ConfigType>) -> Result<Vec<Configuration>> {
    let mut out: Vec<Vec<Partition>> = vec![Vec::new()];
    let mut counter = crate::error::CapCounter::new();
    for &s in ty.sizes() {
        let parts = crate::partitions::partitions_of(s);
        let mut next = Vec::new();
        for prefix in &out {
            for p in &parts {
                counter.tick()?;
                let mut v = prefix.clone();
                v.push(p.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|levels| Configuration::new(ty.clone(), levels))
        .collect()
}

// ---------------------------------------------------------------------------
// Matrix encoding

/// Integer matrix `m_{ij}` together with its type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigMatrix {
    pub lambda: Partition,
    pub rects: RectangleSequence,
    pub entries: Vec<Vec<i64>>,
}

impl ConfigMatrix {
    fn dims(&self) -> (usize, usize) {
        let rows = self.entries.len();
        let cols = self.entries.iter().map(Vec::len).max().unwrap_or(0);
        (rows, cols)
    }

    /// Entry `(i, j)` from 1, zero outside the stored block.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        if i == 0 || j == 0 {
            return 0;
        }
        self.entries
            .get(i - 1)
            .and_then(|r| r.get(j - 1))
            .copied()
            .unwrap_or(0)
    }

    fn column_target(&self, j: usize) -> i64 {
        self.rects
            .rects()
            .iter()
            .filter(|r| r.width >= j)
            .map(|r| r.height as i64)
            .sum()
    }

    fn span(&self) -> usize {
        let (r, c) = self.dims();
        r.max(c)
            .max(self.lambda.len())
            .max(self.lambda.first())
            .max(self.rects.max_height())
            .max(self.rects.max_width())
    }

    /// The first failing condition among row sums (2) and column sums (1).
    fn check_sums(&self) -> Result<()> {
        let n = self.span();
        for i in 1..=n {
            let row: i64 = (1..=n).map(|j| self.get(i, j)).sum();
            if row != self.lambda.part(i - 1) as i64 {
                return Err(Error::InvalidMatrix {
                    condition: 2,
                    detail: format!("row {i} sums to {row}, expected {}", self.lambda.part(i - 1)),
                });
            }
        }
        for j in 1..=n {
            let col: i64 = (1..=n).map(|i| self.get(i, j)).sum();
            if col != self.column_target(j) {
                return Err(Error::InvalidMatrix {
                    condition: 1,
                    detail: format!("column {j} sums to {col}, expected {}", self.column_target(j)),
                });
            }
        }
        Ok(())
    }

    /// Column lengths of level `k` read off the matrix.
    fn level_columns(&self, k: usize) -> Vec<i64> {
        let n = self.span();
        (1..=n + 1)
            .map(|j| {
                let below: i64 = (k + 1..=n).map(|i| self.get(i, j)).sum();
                let rect: i64 = self
                    .rects
                    .rects()
                    .iter()
                    .filter(|r| r.width >= j)
                    .map(|r| r.height.saturating_sub(k) as i64)
                    .sum();
                below - rect
            })
            .collect()
    }

    /// Condition (3): `Σ_{j≤k} (m_{ij} − m_{i+1,j}) ≥ 0`.
    pub fn condition3(&self) -> bool {
        let n = self.span();
        (1..=n).all(|i| {
            let mut acc = 0;
            (1..=n).all(|j| {
                acc += self.get(i, j) - self.get(i + 1, j);
                acc >= 0
            })
        })
    }

    /// Condition (4): `Σ_a min(η_a,k) δ_{μ_a,j} ≥ Σ_{i≤k} (m_{ij} − m_{i,j+1})`.
    pub fn condition4(&self) -> bool {
        let n = self.span();
        (1..=n).all(|k| {
            (1..=n).all(|j| {
                let lhs: i64 = self
                    .rects
                    .rects()
                    .iter()
                    .filter(|r| r.width == j)
                    .map(|r| r.height.min(k) as i64)
                    .sum();
                let rhs: i64 = (1..=k).map(|i| self.get(i, j) - self.get(i, j + 1)).sum();
                lhs >= rhs
            })
        })
    }

    /// The failing conditions among (0)–(4); empty when all hold.
    pub fn failing_conditions(&self) -> Vec<u8> {
        let mut out = Vec::new();
        if let Err(Error::InvalidMatrix { .. }) = self.check_sums() {
            let n = self.span();
            if (1..=n).any(|i| (1..=n).map(|j| self.get(i, j)).sum::<i64>() != self.lambda.part(i - 1) as i64) {
                out.push(2);
            }
            if (1..=n).any(|j| (1..=n).map(|i| self.get(i, j)).sum::<i64>() != self.column_target(j)) {
                out.push(1);
            }
            out.sort_unstable();
        }
        if !self.condition3() {
            out.push(3);
        }
        if !self.condition4() {
            out.push(4);
        }
        out
    }

    /// `Σ binom(m_{ij}, 2)`.
    pub fn charge(&self) -> i64 {
        self.entries.iter().flatten().map(|&m| binom2(m)).sum()
    }

    /// Reconstruct the configuration. Fails on (1), (2) or (4); a matrix
    /// failing only (3) gives a non-admissible configuration.
    pub fn to_configuration(&self) -> Result<Configuration> {
        self.check_sums()?;
        let ty = Arc::new(ConfigType::new(self.lambda.clone(), self.rects.clone())?);
        let mut cols = Vec::with_capacity(ty.levels());
        for k in 1..=self.span() {
            let c = self.level_columns(k);
            for j in 0..c.len() {
                let next = c.get(j + 1).copied().unwrap_or(0);
                if c[j] < next || c[j] < 0 {
                    return Err(Error::InvalidMatrix {
                        condition: 4,
                        detail: format!("level {k} columns {} and {} increase", j + 1, j + 2),
                    });
                }
            }
            if k > ty.levels() {
                if c.iter().any(|&x| x != 0) {
                    return Err(Error::InvalidMatrix {
                        condition: 4,
                        detail: format!("level {k} should be empty"),
                    });
                }
                continue;
            }
            let mut v: Vec<usize> = c.into_iter().map(|x| x as usize).collect();
            while v.last() == Some(&0) {
                v.pop();
            }
            cols.push(v);
        }
        Ok(Configuration::from_columns(ty, cols))
    }

    /// The dual matrix `m̂_{ij} = −m_{ji} + [i ≤ λ_j] + #{a : μ_a ≥ i, η_a ≥ j}`
    /// for the type `(λ', R')`.
    pub fn dual(&self) -> Result<ConfigMatrix> {
        self.check_sums()?;
        let n = self.span();
        let entries = (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j| {
                        let lam = i64::from(i <= self.lambda.part(j - 1));
                        let rect = self
                            .rects
                            .rects()
                            .iter()
                            .filter(|r| r.width >= i && r.height >= j)
                            .count() as i64;
                        -self.get(j, i) + lam + rect
                    })
                    .collect()
            })
            .collect();
        Ok(ConfigMatrix {
            lambda: self.lambda.conjugate(),
            rects: self.rects.transpose(),
            entries,
        })
    }

    /// The same matrix padded or trimmed to `n × n` (only zero entries dropped).
    pub fn square(&self, n: usize) -> ConfigMatrix {
        let entries = (1..=n)
            .map(|i| (1..=n).map(|j| self.get(i, j)).collect())
            .collect();
        ConfigMatrix {
            lambda: self.lambda.clone(),
            rects: self.rects.clone(),
            entries,
        }
    }
}

pub fn to_matrix(cfg: &Configuration) -> ConfigMatrix {
    cfg.to_matrix()
}

pub fn from_matrix(m: &ConfigMatrix) -> Result<Configuration> {
    m.to_configuration()
}

pub fn matrix_charge(m: &ConfigMatrix) -> i64 {
    m.charge()
}

pub fn duality_map(m: &ConfigMatrix) -> Result<ConfigMatrix> {
    m.dual()
}

/// `Δ(λ, μ)`: levels `(λ_{k+1}, λ_{k+2}, ...)` for the Kostka–Foulkes type.
pub fn maximal_configuration(lambda: &Partition, mu: &Partition) -> Result<Configuration> {
    let ty = Arc::new(ConfigType::kostka_foulkes(lambda.clone(), mu)?);
    let levels = (1..=ty.levels())
        .map(|k| Partition::from_sorted(lambda.parts().iter().skip(k).copied().collect()))
        .collect();
    Configuration::new(ty, levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn r(s: &str) -> RectangleSequence {
        s.parse().unwrap()
    }

    fn example_type() -> Arc<ConfigType> {
        Arc::new(ConfigType::new(p("4,4,3,3,2"), r("2^3,2^2,2^2,1,1")).unwrap())
    }

    fn cfg(ty: &Arc<ConfigType>, levels: &[&str]) -> Configuration {
        Configuration::new(ty.clone(), levels.iter().map(|s| p(s)).collect()).unwrap()
    }

    #[test]
    fn sizes() {
        assert_eq!(
            level_sizes(&p("4,4,3,3,2"), &r("2^3,2^2,2^2,1,1")).unwrap(),
            vec![4, 6, 5, 2]
        );
        assert!(level_sizes(&p("5"), &r("5")).unwrap().is_empty());
        assert_eq!(
            level_sizes(&p("3,3"), &r("1,1,1,1,1,1")).unwrap(),
            vec![3]
        );
        assert!(matches!(
            level_sizes(&p("3,1"), &r("1,1")),
            Err(Error::SizeMismatch { .. })
        ));
        assert!(matches!(
            level_sizes(&p("2"), &r("1^2")),
            Err(Error::NegativeLevel { .. })
        ));
    }

    #[test]
    fn vacancy_examples() {
        let ty = example_type();
        let c = cfg(&ty, &["3,1", "3,2,1", "3,2", "2"]);
        assert_eq!(c.vacancy(1, 1), 1);
        assert_eq!(c.vacancy(2, 2), 1);
        assert_eq!(c.vacancy(2, 3), 1);
        assert!(c.is_admissible());
        assert_eq!(c.charge(), 8);
        assert!(cfg(&ty, &["4", "3,3", "3,2", "2"]).is_admissible());
        let bad = cfg(&ty, &["1,1,1,1", "3,3", "3,2", "2"]);
        assert_eq!(bad.vacancy(1, 1), -4);
        assert!(!bad.is_admissible());

        let trivial = Arc::new(ConfigType::new(Partition::empty(), RectangleSequence::default()).unwrap());
        let empty = Configuration::new(trivial, vec![]).unwrap();
        assert!((1..4).all(|k| (1..4).all(|j| empty.vacancy(k, j) == 0)));
        assert_eq!(empty.charge(), 0);
        assert_eq!(empty.cocharge(), 0);
    }

    #[test]
    fn example_enumeration() {
        let ty = example_type();
        let all = enumerate_admissible_type(&ty).unwrap();
        let got: Vec<Vec<String>> = all
            .iter()
            .map(|c| c.levels().iter().map(|l| l.to_string()).collect())
            .collect();
        // The printed list has (3,1) as the first level of the last two
        // entries; that choice makes P_1^(2) = -1, while (2,1,1) is admissible.
        let expected = [
            ["3,1", "3,3", "3,2", "2"],
            ["3,1", "3,2,1", "3,2", "2"],
            ["2,2", "2,2,2", "3,2", "2"],
            ["4", "3,3", "3,2", "2"],
            ["2,1,1", "2,2,1,1", "2,2,1", "2"],
            ["2,1,1", "2,2,1,1", "3,1,1", "2"],
        ];
        let misprint = cfg(&ty, &["3,1", "2,2,1,1", "2,2,1", "2"]);
        assert_eq!(misprint.vacancy(2, 1), -1);
        let mut expected: Vec<Vec<String>> = expected
            .iter()
            .map(|v| v.iter().map(|s| s.to_string()).collect())
            .collect();
        expected.sort_by_key(|v| v.iter().map(|s| p(s)).collect::<Vec<_>>());
        assert_eq!(got, expected);
    }

    #[test]
    fn charge_on_two_row_catalan_type() {
        let ty = Arc::new(ConfigType::new(p("6,6"), RectangleSequence::repeated(1, 1, 12)).unwrap());
        assert_eq!(cfg(&ty, &["3,2,1"]).charge(), 44);
    }

    #[test]
    fn configuration_counts() {
        let counts: Vec<u64> = (1..=6)
            .map(|n| {
                let ty = ConfigType::new(p(&format!("{n},{n},{n}")), RectangleSequence::repeated(1, 1, 3 * n)).unwrap();
                count_admissible(&ty).unwrap()
            })
            .collect();
        let brute: Vec<u64> = (1..=6)
            .map(|n| {
                let ty = Arc::new(ConfigType::new(p(&format!("{n},{n},{n}")), RectangleSequence::repeated(1, 1, 3 * n)).unwrap());
                enumerate_all_configurations(&ty)
                    .unwrap()
                    .iter()
                    .filter(|c| c.is_admissible())
                    .count() as u64
            })
            .collect();
        assert_eq!(counts, brute);
        assert_eq!(counts, vec![1, 3, 6, 16, 32, 78]);
        let ty = ConfigType::new(p("6,6"), RectangleSequence::repeated(1, 1, 12)).unwrap();
        assert_eq!(count_admissible(&ty).unwrap(), 11);
    }

    #[test]
    fn cocharge_relation_kostka_foulkes() {
        // c − c̄ = Σ_{k,j} [W (α^{k−1} − α^k) + binom(W, 2)]
        let ty = Arc::new(ConfigType::kostka_foulkes(p("2,1"), &p("1,1,1")).unwrap());
        let all = enumerate_admissible_type(&ty).unwrap();
        assert!(!all.is_empty());
        let mu = p("1,1,1");
        for c in &all {
            let a1 = c.level(1).columns();
            let cross: i64 = mu
                .columns()
                .iter()
                .enumerate()
                .map(|(j, &m)| m as i64 * a1.get(j).copied().unwrap_or(0) as i64)
                .sum();
            assert_eq!(
                c.cocharge() as i64,
                c.charge() as i64 - mu.n_stat() as i64 + cross
            );
        }
    }

    #[test]
    fn matrix_of_example() {
        let ty = example_type();
        let c = cfg(&ty, &["3,1", "3,2,1", "3,2", "2"]);
        let m = c.to_matrix();
        let rows: Vec<Vec<i64>> = m.entries.iter().map(|r| r[..3].to_vec()).collect();
        assert_eq!(
            rows,
            vec![
                vec![3, 2, -1],
                vec![2, 2, 0],
                vec![2, 1, 0],
                vec![1, 1, 1],
                vec![1, 1, 0]
            ]
        );
        assert!(m.entries.iter().all(|r| r[3..].iter().all(|&x| x == 0)));
        // Same rows as the printed display, which lists them in another order.
        let mut printed = vec![
            vec![2, 2, 0],
            vec![3, 2, -1],
            vec![1, 1, 1],
            vec![2, 1, 0],
            vec![1, 1, 0],
        ];
        let mut ours = rows.clone();
        printed.sort();
        ours.sort();
        assert_eq!(ours, printed);
        assert_eq!(m.charge(), 8);
        assert!(m.failing_conditions().is_empty());
        assert_eq!(from_matrix(&m).unwrap(), c);

        let mut bad = m.clone();
        bad.entries[0][2] = -2;
        assert!(matches!(
            from_matrix(&bad),
            Err(Error::InvalidMatrix { condition: 2, .. })
        ));
    }

    #[test]
    fn matrix_first_row_two_column_type() {
        let ty = Arc::new(ConfigType::kostka_foulkes(p("6,4,2,2,1,1"), &p("2,2,2,2,2,2,2,2")).unwrap());
        let levels = ["5,5", "4,2", "3,1", "2", "1"];
        let c = Configuration::new(
            ty,
            levels.iter().map(|s| p(s).conjugate()).collect(),
        )
        .unwrap();
        assert!(c.is_admissible());
        let m = c.to_matrix();
        let rows: Vec<Vec<i64>> = m.entries.iter().map(|r| r[..2].to_vec()).collect();
        assert_eq!(
            rows,
            vec![vec![3, 3], vec![1, 3], vec![1, 1], vec![1, 1], vec![1, 0], vec![1, 0]]
        );
        assert!(m.entries.iter().all(|r| r[2..].iter().all(|&x| x == 0)));
    }

    #[test]
    fn trivial_matrix() {
        let m = ConfigMatrix {
            lambda: p("4"),
            rects: r("4"),
            entries: vec![vec![1, 1, 1, 1]],
        };
        let c = from_matrix(&m).unwrap();
        assert!(c.levels().is_empty());
        let d = duality_map(&m).unwrap();
        assert_eq!(d.lambda, p("1,1,1,1"));
        assert!(d.failing_conditions().is_empty());
    }

    #[test]
    fn duality_on_example() {
        let ty = example_type();
        let dual_ty = Arc::new(ty.dual().unwrap());
        let mut images = Vec::new();
        for c in enumerate_admissible_type(&ty).unwrap() {
            let m = c.to_matrix();
            let d = duality_map(&m).unwrap();
            assert!(d.failing_conditions().is_empty(), "{:?}", d.entries);
            assert_eq!(duality_map(&d).unwrap(), m);
            images.push(from_matrix(&d).unwrap());
        }
        let mut dual_all = enumerate_admissible_type(&dual_ty).unwrap();
        let key = |c: &Configuration| c.levels().to_vec();
        images.sort_by_key(key);
        dual_all.sort_by_key(key);
        assert_eq!(
            images.iter().map(key).collect::<Vec<_>>(),
            dual_all.iter().map(key).collect::<Vec<_>>()
        );
    }

    #[test]
    fn maximal_configuration_examples() {
        let d = maximal_configuration(&p("6,4,2,2,1,1"), &p("2,2,2,2,2,2,2,2")).unwrap();
        let levels: Vec<String> = d.levels().iter().map(|l| l.to_string()).collect();
        assert_eq!(levels, ["4,2,2,1,1", "2,2,1,1", "2,1,1", "1,1", "1"]);
        for n in 1..=7 {
            for lam in partitions_of(n) {
                let d = maximal_configuration(&lam, &lam).unwrap();
                assert!(d.is_admissible());
                assert_eq!(d.charge(), 0);
            }
        }
        let d = maximal_configuration(&p("4"), &p("1,1,1,1")).unwrap();
        assert!(d.levels().is_empty());
    }

    fn small_types() -> Vec<Arc<ConfigType>> {
        let mut out = Vec::new();
        for n in 1..=7 {
            for lam in partitions_of(n) {
                for mu in partitions_of(n) {
                    if let Ok(t) = ConfigType::kostka_foulkes(lam.clone(), &mu) {
                        out.push(Arc::new(t));
                    }
                }
            }
        }
        for rs in ["2^2,1,1", "2^2,2^2", "1^2,1^2,1^2", "2^3,1^2", "3^2,1^2", "2^2,2,1^2"] {
            let rects = r(rs);
            for lam in partitions_of(rects.size()) {
                if let Ok(t) = ConfigType::new(lam, rects.clone()) {
                    out.push(Arc::new(t));
                }
            }
        }
        out
    }

    #[test]
    fn pruned_search_matches_brute_force() {
        for ty in small_types() {
            if ty.sizes().iter().sum::<usize>() > 8 {
                continue;
            }
            let brute: Vec<Configuration> = enumerate_all_configurations(&ty)
                .unwrap()
                .into_iter()
                .filter(Configuration::is_admissible)
                .collect();
            let mut fast = enumerate_admissible_type(&ty).unwrap();
            let mut brute = brute;
            let key = |c: &Configuration| c.levels().to_vec();
            brute.sort_by_key(key);
            fast.sort_by_key(key);
            assert_eq!(fast, brute, "type {:?} {:?}", ty.lambda(), ty.rects());
        }
    }

    #[test]
    fn matrix_conditions_match_admissibility() {
        for ty in small_types() {
            if ty.sizes().iter().sum::<usize>() > 7 {
                continue;
            }
            for c in enumerate_all_configurations(&ty).unwrap() {
                let m = c.to_matrix();
                let ok = m.failing_conditions().is_empty();
                assert_eq!(ok, c.is_admissible(), "{:?}", c);
                assert_eq!(m.charge(), c.charge() as i64);
                assert_eq!(from_matrix(&m).unwrap(), c);
            }
        }
    }

    #[test]
    fn duality_is_bijection_up_to_size_8() {
        for n in 1..=8 {
            for lam in partitions_of(n) {
                for mu in partitions_of(n) {
                    let ty = Arc::new(ConfigType::kostka_foulkes(lam.clone(), &mu).unwrap());
                    let here = enumerate_admissible_type(&ty).unwrap();
                    let Ok(dual_ty) = ty.dual() else {
                        assert!(here.is_empty(), "{lam} {mu}");
                        continue;
                    };
                    let dual_ty = Arc::new(dual_ty);
                    let there = enumerate_admissible_type(&dual_ty).unwrap();
                    assert_eq!(here.len(), there.len(), "{lam} {mu}");
                    let mut images: Vec<Configuration> = here
                        .iter()
                        .map(|c| {
                            let d = c.to_matrix().dual().unwrap();
                            assert!(d.failing_conditions().is_empty());
                            assert_eq!(d.dual().unwrap(), c.to_matrix());
                            from_matrix(&d).unwrap()
                        })
                        .collect();
                    images.sort_by_key(|c| c.levels().to_vec());
                    let mut there = there;
                    there.sort_by_key(|c| c.levels().to_vec());
                    assert_eq!(images, there);
                }
            }
        }
    }

    #[test]
    fn stretched_counts_stabilize() {
        let base = ConfigType::kostka_foulkes(p("2,1"), &p("1,1,1")).unwrap();
        let counts: Vec<u64> = (1..=8)
            .map(|n| count_admissible(&base.stretch(n).unwrap()).unwrap())
            .collect();
        assert!(counts[4..].iter().all(|&c| c == counts[4]), "{counts:?}");
    }

    proptest! {
        #[test]
        fn enumerated_sizes_exact(idx in 0usize..200) {
            let types = small_types();
            let ty = &types[idx % types.len()];
            for c in enumerate_admissible_type(ty).unwrap() {
                for k in 1..=ty.levels() {
                    prop_assert_eq!(c.level(k).size(), ty.size(k));
                }
                prop_assert!(c.is_admissible());
            }
        }
    }
}
