//! Finite-dimensional Lie algebras given by sparse exact structure constants.
//!
//! Only brackets `[e_i, e_j]` with `i < j` are stored; antisymmetry is
//! structural. Jacobi checks run on integers when every structure constant is
//! rational with a modest common denominator, and fall back to exact scalar
//! arithmetic otherwise.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exactnum::{linalg, Rational, Scalar};

pub type SparseVec<S> = Vec<(usize, S)>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("the bracket of basis elements {i} and {j} leaves the span")]
    NotClosed { i: usize, j: usize },
    #[error("basis element {0} depends on the earlier ones")]
    DependentBasis(usize),
    #[error("basis element {index} is not an eigenvector of ad({source_name})")]
    NotEigenvector { source_name: String, index: usize },
    #[error("grading {source_name} is not compatible with [e_{i}, e_{j}] (component e_{k})")]
    IncompatibleGrading { source_name: String, i: usize, j: usize, k: usize },
    #[error("grading {source_name} has {got} degrees for an algebra of dimension {dim}")]
    GradingLength { source_name: String, got: usize, dim: usize },
    #[error("no regular element found after {0} attempts")]
    NoRegularElement(usize),
    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { got: usize, expected: usize },
}

/// A named contiguous range of basis indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub name: String,
    pub start: usize,
    pub len: usize,
}

impl Block {
    pub fn range(&self) -> std::ops::Range<usize> {
        self.start..self.start + self.len
    }
}

#[derive(Debug, Clone)]
pub struct LieAlgebra<S> {
    name: String,
    dim: usize,
    labels: Vec<String>,
    blocks: Vec<Block>,
    grading: Option<Vec<i64>>,
    table: Vec<SparseVec<S>>,
}

fn tri_index(dim: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < dim);
    i * dim - i * (i + 1) / 2 + (j - i - 1)
}

fn to_sparse<S: Scalar>(v: Vec<S>) -> SparseVec<S> {
    v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

impl<S: Scalar> LieAlgebra<S> {
    /// Builds an algebra from a bracket function called once for every `i < j`.
    pub fn from_brackets(
        name: impl Into<String>,
        dim: usize,
        mut bracket: impl FnMut(usize, usize) -> SparseVec<S>,
    ) -> Self {
        let mut table = Vec::with_capacity(dim * dim.saturating_sub(1) / 2);
        for i in 0..dim {
            for j in (i + 1)..dim {
                let mut v: SparseVec<S> = bracket(i, j).into_iter().filter(|(_, c)| !c.is_zero()).collect();
                v.sort_by_key(|(k, _)| *k);
                table.push(v);
            }
        }
        LieAlgebra {
            name: name.into(),
            dim,
            labels: (0..dim).map(|k| format!("e{k}")).collect(),
            blocks: vec![Block { name: "all".into(), start: 0, len: dim }],
            grading: None,
            table,
        }
    }

    /// The Lie algebra spanned by the given square matrices under the
    /// commutator. The matrices must be independent and closed.
    pub fn from_matrices(name: impl Into<String>, mats: &[Vec<Vec<S>>]) -> Result<Self, LieError> {
        let n = mats.first().map_or(0, Vec::len);
        let span = SpanMatrices::new(n, mats)?;
        let mut err = None;
        let alg = Self::from_brackets(name, mats.len(), |i, j| {
            if err.is_some() {
                return Vec::new();
            }
            let c = commutator(&mats[i], &mats[j]);
            match span.coordinates(&c) {
                Some(coords) => to_sparse(coords),
                None => {
                    err = Some(LieError::NotClosed { i, j });
                    Vec::new()
                }
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(alg),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
        self
    }

    pub fn with_blocks(mut self, blocks: Vec<Block>) -> Self {
        assert_eq!(blocks.iter().map(|b| b.len).sum::<usize>(), self.dim);
        self.blocks = blocks;
        self
    }

    pub fn with_grading(mut self, degrees: Vec<i64>) -> Self {
        assert_eq!(degrees.len(), self.dim);
        self.grading = Some(degrees);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn grading(&self) -> Option<&[i64]> {
        self.grading.as_deref()
    }

    /// `[e_i, e_j]` as a sparse vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> SparseVec<S> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Vec::new(),
            Less => self.table[tri_index(self.dim, i, j)].clone(),
            Greater => self.table[tri_index(self.dim, j, i)].iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }

    /// Stored bracket for `i < j` without cloning.
    fn upper(&self, i: usize, j: usize) -> &SparseVec<S> {
        &self.table[tri_index(self.dim, i, j)]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> S {
        self.bracket_basis(i, j).into_iter().find(|(m, _)| *m == k).map_or_else(S::zero, |(_, c)| c)
    }

    /// Overwrites `c_ij^k` (and thereby `c_ji^k = -c_ij^k`).
    pub fn set_structure_constant(&mut self, i: usize, j: usize, k: usize, c: S) {
        let (i, j, c) = if i < j { (i, j, c) } else { (j, i, -c) };
        let idx = tri_index(self.dim, i, j);
        let v = &mut self.table[idx];
        v.retain(|(m, _)| *m != k);
        if !c.is_zero() {
            v.push((k, c));
            v.sort_by_key(|(m, _)| *m);
        }
    }

    /// All nonzero constants `(i, j, k, c_ij^k)` with `i < j`.
    pub fn constants(&self) -> impl Iterator<Item = (usize, usize, usize, &S)> + '_ {
        let d = self.dim;
        (0..d).flat_map(move |i| ((i + 1)..d).map(move |j| (i, j))).flat_map(move |(i, j)| {
            self.upper(i, j).iter().map(move |(k, c)| (i, j, *k, c))
        })
    }

    pub fn nonzero_constants(&self) -> usize {
        self.table.iter().map(Vec::len).sum()
    }

    fn check_len(&self, v: &[S]) -> Result<(), LieError> {
        if v.len() == self.dim {
            Ok(())
        } else {
            Err(LieError::DimensionMismatch { got: v.len(), expected: self.dim })
        }
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket(&self, x: &[S], y: &[S]) -> Result<Vec<S>, LieError> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut out = vec![S::zero(); self.dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                if i == j {
                    continue;
                }
                let coef = xi.mul_ref(yj);
                let (lo, hi, neg) = if i < j { (i, j, false) } else { (j, i, true) };
                for (k, c) in self.upper(lo, hi) {
                    let t = coef.mul_ref(c);
                    if neg {
                        out[*k] -= &t;
                    } else {
                        out[*k] += &t;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad(x)`: entry `[k][j]` is the `e_k` coefficient of `[x, e_j]`.
    pub fn ad_matrix(&self, x: &[S]) -> Result<Vec<Vec<S>>, LieError> {
        self.check_len(x)?;
        let mut m = vec![vec![S::zero(); self.dim]; self.dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for j in 0..self.dim {
                if i == j {
                    continue;
                }
                let (lo, hi, neg) = if i < j { (i, j, false) } else { (j, i, true) };
                for (k, c) in self.upper(lo, hi) {
                    let t = xi.mul_ref(c);
                    if neg {
                        m[*k][j] -= &t;
                    } else {
                        m[*k][j] += &t;
                    }
                }
            }
        }
        Ok(m)
    }

    fn basis_vector(&self, i: usize) -> Vec<S> {
        let mut v = vec![S::zero(); self.dim];
        v[i] = S::one();
        v
    }

    /// The Killing form `tr(ad e_i ad e_j)`.
    pub fn killing_form(&self) -> Vec<Vec<S>> {
        let ads: Vec<Vec<Vec<S>>> =
            (0..self.dim).map(|i| self.ad_matrix(&self.basis_vector(i)).expect("basis vector")).collect();
        let mut k = vec![vec![S::zero(); self.dim]; self.dim];
        for i in 0..self.dim {
            for j in i..self.dim {
                let mut t = S::zero();
                for a in 0..self.dim {
                    for b in 0..self.dim {
                        t.add_product(&ads[i][a][b], &ads[j][b][a]);
                    }
                }
                k[i][j] = t.clone();
                k[j][i] = t;
            }
        }
        k
    }

    /// The same algebra in a new basis. `new_in_old[i]` gives the new basis
    /// vector `i` in old coordinates and `old_in_new[k]` the old basis vector
    /// `k` in new coordinates; the two must be mutually inverse.
    pub fn change_basis(
        &self,
        name: impl Into<String>,
        new_in_old: &[SparseVec<S>],
        old_in_new: &[SparseVec<S>],
    ) -> Result<Self, LieError> {
        if new_in_old.len() != self.dim || old_in_new.len() != self.dim {
            return Err(LieError::DimensionMismatch { expected: self.dim, got: new_in_old.len().min(old_in_new.len()) });
        }
        let d = self.dim;
        let mut old = vec![S::zero(); d];
        let mut touched: Vec<usize> = Vec::new();
        Ok(Self::from_brackets(name, d, |i, j| {
            for (a, ca) in &new_in_old[i] {
                for (b, cb) in &new_in_old[j] {
                    if a == b {
                        continue;
                    }
                    let f = ca.mul_ref(cb);
                    for (k, c) in self.bracket_basis(*a, *b) {
                        if old[k].is_zero() {
                            touched.push(k);
                        }
                        old[k].add_product(&f, &c);
                    }
                }
            }
            let mut out = vec![S::zero(); d];
            for &k in &touched {
                if !old[k].is_zero() {
                    for (m, c) in &old_in_new[k] {
                        out[*m].add_product(&old[k], c);
                    }
                }
                old[k] = S::zero();
            }
            touched.clear();
            to_sparse(out)
        }))
    }

    /// Applies `f` to every structure constant, keeping the basis.
    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> LieAlgebra<T> {
        LieAlgebra {
            name: self.name.clone(),
            dim: self.dim,
            labels: self.labels.clone(),
            blocks: self.blocks.clone(),
            grading: self.grading.clone(),
            table: self
                .table
                .iter()
                .map(|v| v.iter().map(|(k, c)| (*k, f(c))).filter(|(_, c)| !c.is_zero()).collect())
                .collect(),
        }
    }
}

/// `ab - ba` for square matrices.
pub fn commutator<S: Scalar>(a: &[Vec<S>], b: &[Vec<S>]) -> Vec<Vec<S>> {
    let ab = linalg::mat_mul(a, b);
    let ba = linalg::mat_mul(b, a);
    ab.into_iter()
        .zip(ba)
        .map(|(r, s)| r.into_iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

fn flatten<S: Scalar>(m: &[Vec<S>]) -> Vec<S> {
    m.iter().flat_map(|r| r.iter().cloned()).collect()
}

/// Exact coordinates of matrices in the span of an independent family.
#[derive(Debug, Clone)]
pub struct SpanMatrices<S> {
    n: usize,
    span: linalg::SpanBasis<S>,
}

impl<S: Scalar> SpanMatrices<S> {
    pub fn new(n: usize, mats: &[Vec<Vec<S>>]) -> Result<Self, LieError> {
        let mut span = linalg::SpanBasis::new(n * n);
        for (k, m) in mats.iter().enumerate() {
            if !span.insert(flatten(m)) {
                return Err(LieError::DependentBasis(k));
            }
        }
        Ok(SpanMatrices { n, span })
    }

    pub fn coordinates(&self, m: &[Vec<S>]) -> Option<Vec<S>> {
        debug_assert_eq!(m.len(), self.n);
        self.span.coordinates(&flatten(m))
    }
}

/// Picks a maximal independent subfamily of matrices, in order.
pub fn independent_matrices<S: Scalar>(mats: impl IntoIterator<Item = Vec<Vec<S>>>) -> Vec<Vec<Vec<S>>> {
    let mut span: Option<linalg::SpanBasis<S>> = None;
    let mut out = Vec::new();
    for m in mats {
        let n = m.len();
        let s = span.get_or_insert_with(|| linalg::SpanBasis::new(n * n));
        if s.insert(flatten(&m)) {
            out.push(m);
        }
    }
    out
}

/// Which basis triples a Jacobi check visits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JacobiMode {
    /// Every triple `i < j < k`.
    Exhaustive,
    /// Random distinct triples from a seeded generator.
    Sampled { triples: usize, seed: u64 },
    /// Every triple with all three indices in the same block.
    WithinBlocks,
    /// The given triples only.
    Triples(Vec<(usize, usize, usize)>),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct JacobiReport {
    pub triples_checked: usize,
    pub failures: usize,
    /// The first few failing triples.
    pub examples: Vec<(usize, usize, usize)>,
}

impl JacobiReport {
    pub fn is_ok(&self) -> bool {
        self.failures == 0
    }

    fn record(&mut self, t: (usize, usize, usize), ok: bool) {
        self.triples_checked += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < 10 {
                self.examples.push(t);
            }
        }
    }

    pub fn merge(&mut self, other: JacobiReport) {
        self.triples_checked += other.triples_checked;
        self.failures += other.failures;
        for e in other.examples {
            if self.examples.len() < 10 {
                self.examples.push(e);
            }
        }
    }
}

impl fmt::Display for JacobiReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} triples checked, {} failures", self.triples_checked, self.failures)
    }
}

/// Integer image of a rational structure-constant table, scaled by a common
/// denominator. Both orientations of each pair are stored for fast access.
struct IntTable {
    dim: usize,
    rows: Vec<Vec<(u32, i64)>>,
}

impl IntTable {
    fn build<S: Scalar>(l: &LieAlgebra<S>) -> Option<Self> {
        let mut den = num_bigint::BigInt::from(1);
        let mut rats = Vec::with_capacity(l.table.len());
        for v in &l.table {
            let mut row = Vec::with_capacity(v.len());
            for (k, c) in v {
                let q = c.to_rational()?;
                den = den.lcm(&q.denom());
                row.push((*k, q));
            }
            rats.push(row);
        }
        let den = den.to_i64().filter(|d| *d < (1 << 40))?;
        let d = l.dim;
        let mut rows = vec![Vec::new(); d * d];
        let mut t = 0;
        for i in 0..d {
            for j in (i + 1)..d {
                for (k, q) in &rats[t] {
                    let n = (q * &Rational::int(den)).as_small()?.0;
                    if n.abs() >= (1 << 40) {
                        return None;
                    }
                    rows[i * d + j].push((*k as u32, n));
                    rows[j * d + i].push((*k as u32, -n));
                }
                t += 1;
            }
        }
        Some(IntTable { dim: d, rows })
    }

    fn bracket_is_zero(&self, u: &[BigInt], v: &[BigInt]) -> bool {
        let d = self.dim;
        let mut acc = vec![BigInt::from(0); d];
        for (i, x) in u.iter().enumerate().filter(|(_, x)| !Zero::is_zero(*x)) {
            for (j, y) in v.iter().enumerate().filter(|(j, y)| *j != i && !Zero::is_zero(*y)) {
                let w = x * y;
                for &(k, n) in &self.rows[i * d + j] {
                    acc[k as usize] += &w * n;
                }
            }
        }
        acc.iter().all(Zero::is_zero)
    }

    fn jacobi_zero(&self, a: usize, b: usize, c: usize, buf: &mut [i128], touched: &mut Vec<usize>) -> bool {
        let d = self.dim;
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            for &(l, n1) in &self.rows[x * d + y] {
                for &(m, n2) in &self.rows[l as usize * d + z] {
                    let slot = &mut buf[m as usize];
                    if *slot == 0 {
                        touched.push(m as usize);
                    }
                    *slot += n1 as i128 * n2 as i128;
                }
            }
        }
        let mut ok = true;
        for &m in touched.iter() {
            if buf[m] != 0 {
                ok = false;
            }
            buf[m] = 0;
        }
        touched.clear();
        ok
    }
}

/// `[[e_a,e_b],e_c] + [[e_b,e_c],e_a] + [[e_c,e_a],e_b]` in basis coordinates.
pub fn jacobi_residual<S: Scalar>(l: &LieAlgebra<S>, a: usize, b: usize, c: usize) -> Vec<S> {
    let mut acc = vec![S::zero(); l.dim];
    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
        for (m, c1) in l.bracket_basis(x, y) {
            for (k, c2) in l.bracket_basis(m, z) {
                acc[k].add_product(&c1, &c2);
            }
        }
    }
    acc
}

fn generic_jacobi_zero<S: Scalar>(l: &LieAlgebra<S>, a: usize, b: usize, c: usize) -> bool {
    linalg::is_zero_vec(&jacobi_residual(l, a, b, c))
}

/// Random distinct sorted triples from a seeded generator.
pub fn random_triples(dim: usize, count: usize, seed: u64) -> Vec<(usize, usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    if dim < 3 {
        return out;
    }
    while out.len() < count {
        let mut t = [rng.gen_range(0..dim), rng.gen_range(0..dim), rng.gen_range(0..dim)];
        t.sort_unstable();
        if t[0] != t[1] && t[1] != t[2] {
            out.push((t[0], t[1], t[2]));
        }
    }
    out
}

/// Checks `[[a,b],c] + [[b,c],a] + [[c,a],b] = 0` on basis triples.
pub fn jacobi_check<S: Scalar>(l: &LieAlgebra<S>, mode: &JacobiMode) -> JacobiReport {
    let triples: Box<dyn Iterator<Item = (usize, usize, usize)>> = match mode {
        JacobiMode::Exhaustive => Box::new(all_triples(0..l.dim)),
        JacobiMode::Sampled { triples, seed } => Box::new(random_triples(l.dim, *triples, *seed).into_iter()),
        JacobiMode::WithinBlocks => {
            Box::new(l.blocks.clone().into_iter().flat_map(|b| all_triples(b.range()).collect::<Vec<_>>()))
        }
        JacobiMode::Triples(ts) => Box::new(ts.clone().into_iter()),
    };
    let mut report = JacobiReport::default();
    match IntTable::build(l) {
        Some(table) => {
            let mut buf = vec![0i128; l.dim];
            let mut touched = Vec::new();
            for (a, b, c) in triples {
                let ok = table.jacobi_zero(a, b, c, &mut buf, &mut touched);
                report.record((a, b, c), ok);
            }
        }
        None => {
            for (a, b, c) in triples {
                report.record((a, b, c), generic_jacobi_zero(l, a, b, c));
            }
        }
    }
    report
}

fn all_triples(r: std::ops::Range<usize>) -> impl Iterator<Item = (usize, usize, usize)> {
    let (s, e) = (r.start, r.end);
    (s..e).flat_map(move |a| ((a + 1)..e).flat_map(move |b| ((b + 1)..e).map(move |c| (a, b, c))))
}

/// Whether `[u, v] = 0` for all pairs of the given vectors.
fn brackets_vanish<S: Scalar>(l: &LieAlgebra<S>, vs: &[Vec<S>]) -> Result<bool, LieError> {
    let ints: Option<Vec<Vec<BigInt>>> = vs
        .iter()
        .map(|v| {
            let qs: Vec<Rational> = v.iter().map(Scalar::to_rational).collect::<Option<_>>()?;
            let den = qs.iter().fold(BigInt::from(1), |acc, q| acc.lcm(&q.denom()));
            Some(qs.iter().map(|q| q.numer() * (&den / q.denom())).collect())
        })
        .collect();
    if let (Some(table), Some(ints)) = (IntTable::build(l), ints) {
        return Ok((0..ints.len()).all(|p| ((p + 1)..ints.len()).all(|q| table.bracket_is_zero(&ints[p], &ints[q]))));
    }
    for (p, u) in vs.iter().enumerate() {
        for v in &vs[p + 1..] {
            if !linalg::is_zero_vec(&l.bracket(u, v)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A Cartan subalgebra found as the kernel of `ad(x)` for a regular `x`.
#[derive(Debug, Clone)]
pub struct CartanSubalgebra<S> {
    pub rank: usize,
    pub element: Vec<S>,
    pub basis: Vec<Vec<S>>,
}

/// Finds the rank of `l` from a regular element.
///
/// For a candidate `x` the kernel `N = ker ad(x)` is computed exactly. When
/// `ker ad(x) = ker ad(x)^2` the kernel is the Engel subalgebra of `x`, which is
/// self-normalizing; if it is moreover abelian it is a Cartan subalgebra, so
/// its dimension is the rank. Candidates start sparse and become denser
/// until both checks pass.
pub fn cartan_subalgebra<S: Scalar>(l: &LieAlgebra<S>, seed: u64) -> Result<CartanSubalgebra<S>, LieError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = l.dim;
    if d == 0 {
        return Ok(CartanSubalgebra { rank: 0, element: Vec::new(), basis: Vec::new() });
    }
    const ATTEMPTS: usize = 12;
    for attempt in 0..ATTEMPTS {
        let terms = (4 + 4 * attempt).min(d);
        let mut x = vec![S::zero(); d];
        let mut idx: Vec<usize> = (0..d).collect();
        for k in 0..terms {
            let pick = rng.gen_range(k..d);
            idx.swap(k, pick);
            let mut c = 0;
            while c == 0 {
                c = rng.gen_range(-3i64..=3);
            }
            x[idx[k]] = S::from_int(c);
        }
        let a = l.ad_matrix(&x)?;
        let a2 = linalg::mat_mul(&a, &a);
        let as_rational = |m: &[Vec<S>]| -> Option<Vec<Vec<Rational>>> {
            m.iter().map(|r| r.iter().map(Scalar::to_rational).collect()).collect()
        };
        let modular = as_rational(&a)
            .zip(as_rational(&a2))
            .and_then(|(m, m2)| linalg::rank_mod_p(&m).zip(linalg::rank_mod_p(&m2)));
        // skipping a candidate is always safe
        if matches!(modular, Some((r1, r2)) if r1 != r2) {
            continue;
        }
        let kernel: Vec<Vec<S>> = match as_rational(&a) {
            Some(m) => linalg::kernel_multimodular(&m, d)
                .into_iter()
                .map(|v| v.into_iter().map(S::from_rational).collect())
                .collect(),
            None => linalg::kernel(&a, d),
        };
        // rank(a²) ≤ rank(a) always, so a matching modular rank settles it
        let target = d - kernel.len();
        let certified = matches!(modular, Some((_, r2)) if r2 == target);
        if !certified && linalg::rank(&a2) != target {
            continue;
        }
        let abelian = brackets_vanish(l, &kernel)?;
        if abelian {
            return Ok(CartanSubalgebra { rank: kernel.len(), element: x, basis: kernel });
        }
    }
    Err(LieError::NoRegularElement(ATTEMPTS))
}

/// One ingredient of a grading.
#[derive(Debug, Clone)]
pub enum GradingSource<S> {
    /// An element whose `ad` is diagonal on the basis; its eigenvalues grade.
    Element { name: String, element: Vec<S> },
    /// Explicit integer degrees, optionally reduced modulo `modulus`.
    Labels { name: String, degrees: Vec<i64>, modulus: Option<i64> },
}

impl<S> GradingSource<S> {
    pub fn name(&self) -> &str {
        match self {
            GradingSource::Element { name, .. } | GradingSource::Labels { name, .. } => name,
        }
    }
}

/// The value of one grading source on a basis element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GradeValue<S> {
    Eigenvalue(S),
    Degree(i64),
}

impl<S: fmt::Display> fmt::Display for GradeValue<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GradeValue::Eigenvalue(s) => write!(f, "{s}"),
            GradeValue::Degree(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct GradedPart<S> {
    pub key: Vec<GradeValue<S>>,
    pub indices: Vec<usize>,
}

impl<S> GradedPart<S> {
    pub fn dim(&self) -> usize {
        self.indices.len()
    }
}

#[derive(Debug, Clone)]
pub struct GradedDecomposition<S> {
    pub sources: Vec<String>,
    /// Parts in order of their first basis index.
    pub parts: Vec<GradedPart<S>>,
}

impl<S: Scalar> GradedDecomposition<S> {
    /// Sum of the dimensions of the parts whose key satisfies `pred`.
    pub fn dim_where(&self, pred: impl Fn(&[GradeValue<S>]) -> bool) -> usize {
        self.parts.iter().filter(|p| pred(&p.key)).map(GradedPart::dim).sum()
    }
}

/// Splits `l` into the joint graded pieces of the given sources and verifies
/// `[L_a, L_b] ⊆ L_{a+b}` on every nonzero basis bracket.
pub fn grading_decompose<S: Scalar>(
    l: &LieAlgebra<S>,
    sources: &[GradingSource<S>],
) -> Result<GradedDecomposition<S>, LieError> {
    let d = l.dim;
    let mut values: Vec<Vec<GradeValue<S>>> = vec![Vec::new(); d];
    for src in sources {
        match src {
            GradingSource::Element { name, element } => {
                let ad = l.ad_matrix(element)?;
                for j in 0..d {
                    let off_diag = (0..d).any(|k| k != j && !ad[k][j].is_zero());
                    if off_diag {
                        return Err(LieError::NotEigenvector { source_name: name.clone(), index: j });
                    }
                    values[j].push(GradeValue::Eigenvalue(ad[j][j].clone()));
                }
            }
            GradingSource::Labels { name, degrees, modulus } => {
                if degrees.len() != d {
                    return Err(LieError::GradingLength { source_name: name.clone(), got: degrees.len(), dim: d });
                }
                for (j, g) in degrees.iter().enumerate() {
                    let g = modulus.map_or(*g, |m| g.rem_euclid(m));
                    values[j].push(GradeValue::Degree(g));
                }
            }
        }
    }
    for i in 0..d {
        for j in (i + 1)..d {
            for (k, _) in l.upper(i, j) {
                for (s, src) in sources.iter().enumerate() {
                    let ok = match (&values[i][s], &values[j][s], &values[*k][s], src) {
                        (GradeValue::Eigenvalue(a), GradeValue::Eigenvalue(b), GradeValue::Eigenvalue(c), _) => {
                            a.clone() + b == *c
                        }
                        (GradeValue::Degree(a), GradeValue::Degree(b), GradeValue::Degree(c), src) => {
                            let sum = a + b;
                            match src {
                                GradingSource::Labels { modulus: Some(m), .. } => sum.rem_euclid(*m) == *c,
                                _ => sum == *c,
                            }
                        }
                        _ => false,
                    };
                    if !ok {
                        return Err(LieError::IncompatibleGrading {
                            source_name: src.name().to_string(),
                            i,
                            j,
                            k: *k,
                        });
                    }
                }
            }
        }
    }
    let mut parts: Vec<GradedPart<S>> = Vec::new();
    let mut lookup: HashMap<Vec<GradeValue<S>>, usize> = HashMap::new();
    for (j, key) in values.into_iter().enumerate() {
        match lookup.get(&key) {
            Some(&p) => parts[p].indices.push(j),
            None => {
                lookup.insert(key.clone(), parts.len());
                parts.push(GradedPart { key, indices: vec![j] });
            }
        }
    }
    Ok(GradedDecomposition { sources: sources.iter().map(|s| s.name().to_string()).collect(), parts })
}

/// Generic element with small random integer coefficients.
pub fn random_small_vector<S: Scalar>(rng: &mut impl Rng, dim: usize, bound: i64) -> Vec<S> {
    (0..dim).map(|_| S::from_int(rng.gen_range(-bound..=bound))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2() -> LieAlgebra<Rational> {
        // e0 = h, e1 = e, e2 = f
        LieAlgebra::from_brackets("sl2", 3, |i, j| match (i, j) {
            (0, 1) => vec![(1, Rational::int(2))],
            (0, 2) => vec![(2, Rational::int(-2))],
            (1, 2) => vec![(0, Rational::ONE)],
            _ => Vec::new(),
        })
    }

    #[test]
    fn sl2_basics() {
        let l = sl2();
        assert!(jacobi_check(&l, &JacobiMode::Exhaustive).is_ok());
        assert_eq!(l.structure_constant(2, 1, 0), Rational::int(-1));
        let csa = cartan_subalgebra(&l, 1).unwrap();
        assert_eq!(csa.rank, 1);
    }

    #[test]
    fn perturbed_constant_breaks_jacobi() {
        let mut l = sl2();
        l.set_structure_constant(0, 1, 1, Rational::int(3));
        assert!(!jacobi_check(&l, &JacobiMode::Exhaustive).is_ok());
    }

    #[test]
    fn grading_by_h() {
        let l = sl2();
        let h = vec![Rational::ONE, Rational::ZERO, Rational::ZERO];
        let g = grading_decompose(&l, &[GradingSource::Element { name: "h".into(), element: h }]).unwrap();
        let dims: Vec<usize> = g.parts.iter().map(GradedPart::dim).collect();
        assert_eq!(dims, vec![1, 1, 1]);
        let bad = vec![Rational::ZERO, Rational::ONE, Rational::ZERO];
        assert!(grading_decompose(&l, &[GradingSource::Element { name: "e".into(), element: bad }]).is_err());
    }

    #[test]
    fn matrices_span() {
        let m = |a: [[i64; 2]; 2]| -> Vec<Vec<Rational>> {
            a.iter().map(|r| r.iter().map(|&x| Rational::int(x)).collect()).collect()
        };
        let mats = vec![m([[1, 0], [0, -1]]), m([[0, 1], [0, 0]]), m([[0, 0], [1, 0]])];
        let l = LieAlgebra::from_matrices("sl2", &mats).unwrap();
        assert_eq!(l.structure_constant(0, 1, 1), Rational::int(2));
        assert!(LieAlgebra::from_matrices("x", &mats[1..]).is_err());
    }
}
