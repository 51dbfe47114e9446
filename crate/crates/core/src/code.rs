//! Linear codes: exhaustive weight distributions, minimum distance, dual
//! distance by dependent-column search, and monomial transforms.
//!
//! Enumeration walks the code as a GF(p)-space. Over GF(p^n) the rows
//! x^t * g_i (t < n) form a GF(p)-basis of the code, and a p-ary Gray code over
//! those rows visits every codeword with a single row addition per step.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::ExtField;
use crate::geometry::{generator_from_points, PointSet};
use crate::linalg::Mat;

/// Default enumeration budget: at most 2^24 codewords.
pub const DEFAULT_BUDGET_LOG2: u32 = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumOptions {
    pub budget_log2: u32,
    pub workers: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            budget_log2: DEFAULT_BUDGET_LOG2,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

impl EnumOptions {
    pub fn with_budget(mut self, budget_log2: u32) -> Self {
        self.budget_log2 = budget_log2;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }
}

/// Exact multiset {weight -> count}. Serializes as `[[w, count], ...]`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<(usize, u64)>", from = "Vec<(usize, u64)>")]
pub struct WeightDistribution(BTreeMap<usize, u64>);

impl From<WeightDistribution> for Vec<(usize, u64)> {
    fn from(w: WeightDistribution) -> Self {
        w.0.into_iter().collect()
    }
}

impl From<Vec<(usize, u64)>> for WeightDistribution {
    fn from(v: Vec<(usize, u64)>) -> Self {
        let mut w = WeightDistribution::default();
        for (weight, count) in v {
            w.add(weight, count);
        }
        w
    }
}

impl WeightDistribution {
    /// Adds `count` codewords of weight `w`; zero counts are dropped.
    pub fn add(&mut self, w: usize, count: u64) {
        if count > 0 {
            *self.0.entry(w).or_insert(0) += count;
        }
    }

    pub fn count(&self, w: usize) -> u64 {
        self.0.get(&w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.0.values().map(|&c| c as u128).sum()
    }

    /// Smallest nonzero weight, if the code is nonzero.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        self.0.keys().copied().find(|&w| w > 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.0.iter().map(|(&w, &c)| (w, c))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_pairs(&self) -> Vec<(usize, u64)> {
        self.iter().collect()
    }

    fn merge(&mut self, other: &[u64]) {
        for (w, &c) in other.iter().enumerate() {
            self.add(w, c);
        }
    }
}

/// Exact dual distance, or a lower bound when it exceeds the search limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DualDistance {
    Exact(usize),
    GreaterThan(usize),
}

impl DualDistance {
    pub fn exact(self) -> Option<usize> {
        match self {
            DualDistance::Exact(d) => Some(d),
            DualDistance::GreaterThan(_) => None,
        }
    }
}

impl std::fmt::Display for DualDistance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DualDistance::Exact(d) => write!(f, "{d}"),
            DualDistance::GreaterThan(t) => write!(f, ">{t}"),
        }
    }
}

/// A linear code given by a possibly redundant generator matrix.
#[derive(Debug, Clone)]
pub struct LinearCode {
    generator: Mat,
    basis: Mat,
}

impl LinearCode {
    pub fn new(generator: Mat) -> Self {
        let basis = generator.row_space_basis();
        LinearCode { generator, basis }
    }

    pub fn from_point_set(set: &PointSet) -> Self {
        Self::new(generator_from_points(set))
    }

    pub fn field(&self) -> &ExtField {
        self.generator.field()
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.basis.rows()
    }

    /// The generator as supplied, redundant rows included.
    pub fn generator(&self) -> &Mat {
        &self.generator
    }

    /// Reduced echelon basis of the code.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.field() == other.field() && self.length() == other.length() && self.basis == other.basis
    }

    /// True iff `word` lies in the row space.
    pub fn contains(&self, word: &[u32]) -> bool {
        if word.len() != self.length() {
            return false;
        }
        let Ok(extended) = Mat::from_rows(self.field(), &[word.to_vec()])
            .and_then(|w| self.basis.vstack(&w))
        else {
            return false;
        };
        extended.rank() == self.dimension()
    }

    pub fn encode(&self, message: &[u32]) -> Result<Vec<u32>> {
        let g = &self.generator;
        if message.len() != g.rows() {
            return Err(Error::Dimension(format!(
                "message of length {} for {} generator rows",
                message.len(),
                g.rows()
            )));
        }
        let f = self.field();
        let mut out = vec![0u32; self.length()];
        for (r, &m) in message.iter().enumerate() {
            if m == 0 {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(g.row(r)) {
                *o = f.add(*o, f.mul(m, g));
            }
        }
        Ok(out)
    }

    /// Exhaustive weight distribution over all q^k codewords.
    pub fn weight_distribution(&self, opts: &EnumOptions) -> Result<WeightDistribution> {
        let f = self.field();
        let k = self.dimension() * f.n() as usize;
        let total = codeword_count(f.p(), k, opts.budget_log2)?;
        let rows = self.prime_basis_rows();
        let engine = Engine::new(f, &rows, self.length());
        let workers = (opts.workers.max(1) as u128).min(total) as usize;
        let chunk = total.div_ceil(workers as u128);
        let mut dist = WeightDistribution::default();
        if workers <= 1 {
            dist.merge(&engine.walk(0, total));
            return Ok(dist);
        }
        let partials: Vec<Vec<u64>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers as u128)
                .map(|w| {
                    let start = w * chunk;
                    let end = ((w + 1) * chunk).min(total);
                    let engine = &engine;
                    scope.spawn(move || engine.walk(start, end))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        });
        for part in &partials {
            dist.merge(part);
        }
        Ok(dist)
    }

    /// Every codeword, in message order over the reduced basis.
    pub fn codewords(&self, budget_log2: u32) -> Result<Vec<Vec<u32>>> {
        let f = self.field();
        let k = self.dimension();
        let total = codeword_count(f.p(), k * f.n() as usize, budget_log2)?;
        let reduced = LinearCode::new(self.basis.clone());
        let mut out = Vec::with_capacity(total as usize);
        let mut msg = vec![0u32; k];
        for _ in 0..total {
            out.push(reduced.encode(&msg)?);
            for d in msg.iter_mut() {
                *d += 1;
                if *d < f.size() {
                    break;
                }
                *d = 0;
            }
        }
        Ok(out)
    }

    /// Least nonzero weight; `None` for the zero code.
    pub fn min_distance(&self, opts: &EnumOptions) -> Result<Option<usize>> {
        Ok(self.weight_distribution(opts)?.min_nonzero_weight())
    }

    /// GF(p)-basis of the code: x^t * b_i for each basis row b_i and t < n.
    fn prime_basis_rows(&self) -> Vec<Vec<u32>> {
        let f = self.field();
        let mut rows = Vec::with_capacity(self.dimension() * f.n() as usize);
        for r in 0..self.basis.rows() {
            let row = self.basis.row(r);
            let mut scale = 1u32;
            for _ in 0..f.n() {
                rows.push(row.iter().map(|&v| f.mul(scale, v)).collect());
                scale *= f.p();
            }
        }
        rows
    }

    pub fn dual(&self) -> LinearCode {
        LinearCode::new(self.basis.kernel_basis())
    }

    /// Column j of the result is scalars[j] times column perm[j].
    pub fn apply_monomial(&self, perm: &[usize], scalars: &[u32]) -> Result<LinearCode> {
        let n = self.length();
        check_permutation(perm, n)?;
        if scalars.len() != n {
            return Err(Error::Dimension(format!("{} scalars for length {n}", scalars.len())));
        }
        if let Some(j) = scalars.iter().position(|&s| s == 0) {
            return Err(Error::ZeroScalar(j));
        }
        let f = self.field();
        let mut g = self.generator.permute_columns(perm);
        for r in 0..g.rows() {
            for (j, &s) in scalars.iter().enumerate() {
                let v = f.mul(s, g.get(r, j));
                g.set(r, j, v);
            }
        }
        Ok(LinearCode::new(g))
    }

    pub fn permute(&self, perm: &[usize]) -> Result<LinearCode> {
        self.apply_monomial(perm, &vec![1; self.length()])
    }

    /// Minimum distance of the dual code, found as the size of the smallest
    /// linearly dependent set of generator columns, searched up to `t_max <= 5`.
    pub fn dual_min_distance_upto(&self, t_max: usize) -> Result<DualDistance> {
        if !(1..=5).contains(&t_max) {
            return Err(Error::InvalidParameters(format!("t_max must be in 1..=5, got {t_max}")));
        }
        DependencySearch::new(self).run(t_max)
    }
}

fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if perm.len() != n {
        return Err(Error::Dimension(format!("permutation of length {} for length {n}", perm.len())));
    }
    for &i in perm {
        if i >= n || std::mem::replace(&mut seen[i], true) {
            return Err(Error::InvalidParameters("not a permutation".into()));
        }
    }
    Ok(())
}

/// p^k as u128 if it fits within 2^budget_log2.
fn codeword_count(p: u32, k: usize, budget_log2: u32) -> Result<u128> {
    let exceeded = || Error::BudgetExceeded { p, k, budget_log2 };
    let total = (p as u128).checked_pow(k as u32).ok_or_else(exceeded)?;
    if budget_log2 < 128 && total > 1u128 << budget_log2 {
        return Err(exceeded());
    }
    Ok(total)
}

/// Codeword representation used during the Gray walk.
enum Engine {
    /// p = 2: one bit-plane per coefficient, packed into u64 words.
    Binary {
        len: usize,
        planes: usize,
        words: usize,
        rows: Vec<Vec<u64>>,
    },
    /// Odd p: coefficient digits, coordinate-major (digit b of coordinate j at j*n + b).
    Digits {
        len: usize,
        p: u32,
        n: usize,
        rows: Vec<Vec<u32>>,
    },
}

impl Engine {
    fn new(field: &ExtField, rows: &[Vec<u32>], len: usize) -> Self {
        let n = field.n() as usize;
        if field.p() == 2 {
            let words = len.div_ceil(64);
            let rows = rows
                .iter()
                .map(|row| {
                    let mut packed = vec![0u64; n * words];
                    for (j, &v) in row.iter().enumerate() {
                        for b in 0..n {
                            if (v >> b) & 1 == 1 {
                                packed[b * words + j / 64] |= 1 << (j % 64);
                            }
                        }
                    }
                    packed
                })
                .collect();
            Engine::Binary {
                len,
                planes: n,
                words,
                rows,
            }
        } else {
            let rows = rows
                .iter()
                .map(|row| row.iter().flat_map(|&v| field.coeffs(v)).collect())
                .collect();
            Engine::Digits {
                len,
                p: field.p(),
                n,
                rows,
            }
        }
    }

    fn num_rows(&self) -> usize {
        match self {
            Engine::Binary { rows, .. } => rows.len(),
            Engine::Digits { rows, .. } => rows.len(),
        }
    }

    fn len(&self) -> usize {
        match self {
            Engine::Binary { len, .. } | Engine::Digits { len, .. } => *len,
        }
    }

    fn p(&self) -> u32 {
        match self {
            Engine::Binary { .. } => 2,
            Engine::Digits { p, .. } => *p,
        }
    }

    /// Weight histogram of Gray-code states start..end.
    fn walk(&self, start: u128, end: u128) -> Vec<u64> {
        let mut hist = vec![0u64; self.len() + 1];
        if start >= end {
            return hist;
        }
        let k = self.num_rows();
        let p = self.p();
        // Digits of `start` in base p, least significant first.
        let mut t = vec![0u32; k + 1];
        let mut rest = start;
        for d in t.iter_mut().take(k) {
            *d = (rest % p as u128) as u32;
            rest /= p as u128;
        }
        let gray: Vec<u32> = (0..k).map(|i| (t[i] + p - t[i + 1]) % p).collect();
        match self {
            Engine::Binary {
                planes,
                words,
                rows,
                ..
            } => {
                let mut cur = vec![0u64; planes * words];
                for (i, &g) in gray.iter().enumerate() {
                    if g == 1 {
                        xor_into(&mut cur, &rows[i]);
                    }
                }
                let mut counter = start;
                loop {
                    hist[binary_weight(&cur, *planes, *words)] += 1;
                    counter += 1;
                    if counter == end {
                        break;
                    }
                    let i = counter.trailing_zeros() as usize;
                    xor_into(&mut cur, &rows[i]);
                }
            }
            Engine::Digits { p, n, rows, len } => {
                let p = *p;
                let mut cur = vec![0u32; len * n];
                for (i, &g) in gray.iter().enumerate() {
                    for _ in 0..g {
                        add_into(&mut cur, &rows[i], p);
                    }
                }
                let mut counter = start;
                let mut digits = t;
                loop {
                    hist[digit_weight(&cur, *n)] += 1;
                    counter += 1;
                    if counter == end {
                        break;
                    }
                    // Increment the base-p counter; the row to add is the
                    // position of the digit that absorbs the carry.
                    let mut i = 0;
                    while digits[i] == p - 1 {
                        digits[i] = 0;
                        i += 1;
                    }
                    digits[i] += 1;
                    add_into(&mut cur, &rows[i], p);
                }
            }
        }
        hist
    }
}

#[inline]
fn xor_into(cur: &mut [u64], row: &[u64]) {
    for (c, r) in cur.iter_mut().zip(row) {
        *c ^= r;
    }
}

#[inline]
fn binary_weight(cur: &[u64], planes: usize, words: usize) -> usize {
    (0..words)
        .map(|w| {
            let mut any = 0u64;
            for b in 0..planes {
                any |= cur[b * words + w];
            }
            any.count_ones() as usize
        })
        .sum()
}

#[inline]
fn add_into(cur: &mut [u32], row: &[u32], p: u32) {
    for (c, &r) in cur.iter_mut().zip(row) {
        let s = *c + r;
        *c = if s >= p { s - p } else { s };
    }
}

#[inline]
fn digit_weight(cur: &[u32], n: usize) -> usize {
    if n == 1 {
        cur.iter().filter(|&&d| d != 0).count()
    } else {
        cur.chunks_exact(n).filter(|c| c.iter().any(|&d| d != 0)).count()
    }
}

/// Smallest dependent column set of a generator matrix.
struct DependencySearch {
    field: ExtField,
    columns: Vec<Vec<u32>>,
}

impl DependencySearch {
    fn new(code: &LinearCode) -> Self {
        let b = code.basis();
        DependencySearch {
            field: code.field().clone(),
            columns: (0..b.cols()).map(|j| b.column(j)).collect(),
        }
    }

    /// Scales so the first nonzero entry is 1; `None` for the zero vector.
    fn normalize(&self, v: &[u32]) -> Option<Vec<u32>> {
        let f = &self.field;
        let lead = *v.iter().find(|&&x| x != 0)?;
        let inv = f.inv(lead)?;
        Some(v.iter().map(|&x| f.mul(x, inv)).collect())
    }

    fn combine(&self, a: &[u32], s: u32, b: &[u32]) -> Vec<u32> {
        let f = &self.field;
        a.iter().zip(b).map(|(&x, &y)| f.add(x, f.mul(s, y))).collect()
    }

    fn run(&self, t_max: usize) -> Result<DualDistance> {
        let n = self.columns.len();
        let q = self.field.size();
        if self.columns.iter().any(|c| c.iter().all(|&x| x == 0)) {
            return Ok(DualDistance::Exact(1));
        }
        if t_max < 2 {
            return Ok(DualDistance::GreaterThan(1));
        }
        let mut single: HashMap<Vec<u32>, usize> = HashMap::with_capacity(n);
        for (j, c) in self.columns.iter().enumerate() {
            if single.insert(self.normalize(c).unwrap(), j).is_some() {
                return Ok(DualDistance::Exact(2));
            }
        }
        if t_max < 3 {
            return Ok(DualDistance::GreaterThan(2));
        }
        // No two columns are proportional, so c_i + a c_j is never zero and is
        // proportional to a third column exactly when the three are dependent.
        for i in 0..n {
            for j in i + 1..n {
                for a in 1..q {
                    let v = self.combine(&self.columns[i], a, &self.columns[j]);
                    if single.contains_key(&self.normalize(&v).unwrap()) {
                        return Ok(DualDistance::Exact(3));
                    }
                }
            }
        }
        if t_max < 4 {
            return Ok(DualDistance::GreaterThan(3));
        }
        // With no dependency of size <= 3, two pair combinations can only
        // coincide projectively when they come from disjoint pairs.
        let mut pairs: HashMap<Vec<u32>, (usize, usize)> = HashMap::new();
        for i in 0..n {
            for j in i + 1..n {
                for a in 1..q {
                    let v = self.combine(&self.columns[i], a, &self.columns[j]);
                    if let Some(&prev) = pairs.get(&self.normalize(&v).unwrap()) {
                        if prev != (i, j) {
                            return Ok(DualDistance::Exact(4));
                        }
                    } else {
                        pairs.insert(self.normalize(&v).unwrap(), (i, j));
                    }
                }
            }
        }
        if t_max < 5 {
            return Ok(DualDistance::GreaterThan(4));
        }
        for i in 0..n {
            for j in i + 1..n {
                for a in 1..q {
                    let v = self.combine(&self.columns[i], a, &self.columns[j]);
                    for k in j + 1..n {
                        for b in 1..q {
                            let w = self.combine(&v, b, &self.columns[k]);
                            if pairs.contains_key(&self.normalize(&w).unwrap()) {
                                return Ok(DualDistance::Exact(5));
                            }
                        }
                    }
                }
            }
        }
        Ok(DualDistance::GreaterThan(5))
    }
}
