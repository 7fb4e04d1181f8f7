//! Projection of root systems onto the plane of an a2 subsystem.
//!
//! The plane `Π` is spanned by `k_i − k_j` for a triple of indices (by default
//! `1, 2, 3`). A root of f4, e6, e7 or e8 projects either onto one of the six
//! hexagon points (the outer a2), onto zero (`g0`), or onto one of the six
//! points `±⅓(k_p + k_q − 2k_m)`, which carry the Jordan pairs.
//!
//! Axis convention: axis `m` is the direction `⅓(k_p + k_q − 2k_m)` where
//! `{m, p, q}` is the triple. `J(m)` sits at the positive multiple and `J̄(m)`
//! at the negative one, so `−k_1 ∈ J(1)`.

mod embed;
mod figure;
mod listed;
mod nested;
mod planes;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::exactnum::{linalg, FieldScalar, Rational};
use crate::rootspace::{generate_roots, inner, span_rank, AlgebraName, RootError, RootVector};

pub use embed::{
    eta_embedding, recognize_inside_e8, three_plane_types, EtaEmbedding, EtaTarget, Recognition, SubstitutionReading,
    ThreePlaneType,
};
pub use figure::{c3_panels, figure_points, FigurePoint, FigureSet, PanelPoint};
pub use listed::{
    compare_with_lists, corrections, e6_a2_factors, listed_g0, listed_hw_jordan, resolve_family, Correction,
    ListComparison, ResolvedFamily, SignFamily, SignReading,
};
pub use nested::{
    label_particles, nested_decomposition, particle_lists, three_grading, NestedNode, ParticleKind, ParticleLabel,
    ThreeGrading,
};
pub use planes::{
    build_planes, plane_checks, quantum_numbers, table3_literal, table3_printed_distinct, table3_quantum_numbers,
    PlaneCheck, PlaneSet, QuantumNumberRow, Table3Literal,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjectionError {
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("basis vectors are linearly dependent")]
    DependentBasis,
    #[error("subspaces are not parallel")]
    NotParallel,
    #[error("projection onto an affine subspace is not linear")]
    AffineProjection,
    #[error("{0} has no a2-plane decomposition")]
    Unsupported(AlgebraName),
    #[error("root {root} projects to {point}, which is none of the expected points")]
    UnexpectedProjection { root: RootVector, point: RootVector },
    #[error("root {0} fits no pair of quantum-number planes")]
    NoPlanePair(RootVector),
    #[error("{0} is not a root of {1}")]
    NotARoot(RootVector, String),
    #[error("no reading of {0} matches")]
    NoReading(String),
    #[error("labeling is not a partition: {0}")]
    NotAPartition(String),
    #[error("{0} has no a2-plane structure to recurse into")]
    NotDecomposable(String),
}

fn third() -> Rational {
    Rational::frac(1, 3)
}

/// An affine subspace `offset + span(basis)` of R^8.
///
/// The offset is kept orthogonal to the span, which makes parallelism and
/// distance well defined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    basis: Vec<RootVector>,
    offset: RootVector,
}

impl Subspace {
    pub fn linear(basis: Vec<RootVector>) -> Result<Self, ProjectionError> {
        if span_rank(&basis) != basis.len() {
            return Err(ProjectionError::DependentBasis);
        }
        Ok(Subspace { basis, offset: RootVector::zero() })
    }

    /// `offset + span(basis)`; the offset is replaced by its component
    /// orthogonal to the span.
    pub fn affine(offset: RootVector, basis: Vec<RootVector>) -> Result<Self, ProjectionError> {
        let lin = Self::linear(basis)?;
        let along = lin.project_linear(&offset);
        Ok(Subspace { offset: &offset - &along, basis: lin.basis })
    }

    pub fn basis(&self) -> &[RootVector] {
        &self.basis
    }

    pub fn offset(&self) -> &RootVector {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_linear(&self) -> bool {
        self.offset.is_zero()
    }

    pub fn linear_part(&self) -> Subspace {
        Subspace { basis: self.basis.clone(), offset: RootVector::zero() }
    }

    /// Coefficients of the orthogonal projection of `v` onto the span.
    fn coefficients(&self, v: &RootVector) -> Vec<FieldScalar> {
        let gram: Vec<Vec<FieldScalar>> =
            self.basis.iter().map(|a| self.basis.iter().map(|b| inner(a, b)).collect()).collect();
        let rhs: Vec<FieldScalar> = self.basis.iter().map(|b| inner(b, v)).collect();
        linalg::solve(&gram, &rhs).expect("Gram matrix of an independent basis is invertible")
    }

    fn combine(&self, coeffs: &[FieldScalar]) -> RootVector {
        let mut out = RootVector::zero();
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                out = &out + &b.scale(c);
            }
        }
        out
    }

    fn project_linear(&self, v: &RootVector) -> RootVector {
        self.combine(&self.coefficients(v))
    }

    pub fn contains(&self, v: &RootVector) -> bool {
        let w = v - &self.offset;
        self.project_linear(&w) == w
    }

    /// `c` with `v = offset + Σ c_i basis_i`, when `v` lies in the subspace.
    pub fn coordinates(&self, v: &RootVector) -> Option<Vec<FieldScalar>> {
        let w = v - &self.offset;
        let c = self.coefficients(&w);
        (self.combine(&c) == w).then_some(c)
    }

    pub fn is_parallel(&self, other: &Subspace) -> bool {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        self.dim() == other.dim() && span_rank(&all) == self.dim()
    }

    pub fn negated(&self) -> Subspace {
        Subspace { basis: self.basis.clone(), offset: -&self.offset }
    }
}

/// The plane spanned by `k_i − k_j` for `i, j` in `triple`.
pub fn pi_plane_of(triple: [usize; 3]) -> Subspace {
    let [a, b, c] = triple;
    Subspace::linear(vec![&RootVector::k(a) - &RootVector::k(b), &RootVector::k(b) - &RootVector::k(c)])
        .expect("independent")
}

/// The plane `Π` spanned by `k_i − k_j`, `i, j = 1, 2, 3`.
pub fn pi_plane() -> Subspace {
    pi_plane_of([1, 2, 3])
}

/// Orthogonal projection onto a linear subspace.
pub fn project(v: &RootVector, s: &Subspace) -> Result<RootVector, ProjectionError> {
    if !s.is_linear() {
        return Err(ProjectionError::AffineProjection);
    }
    Ok(s.project_linear(v))
}

/// Squared distance between parallel subspaces, with the distance itself
/// when it lies in the field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distance {
    pub squared: FieldScalar,
    pub value: Option<FieldScalar>,
}

pub fn distance_to(a: &Subspace, b: &Subspace) -> Result<Distance, ProjectionError> {
    if !a.is_parallel(b) {
        return Err(ProjectionError::NotParallel);
    }
    let diff = &a.offset - &b.offset;
    let perp = &diff - &a.project_linear(&diff);
    let squared = perp.norm2();
    let value = squared.sqrt_real();
    Ok(Distance { squared, value })
}

/// The axis direction `⅓(k_p + k_q − 2k_m)` for `m` in `triple`.
///
/// # Panics
/// Panics when `m` is not in `triple`.
pub fn axis_direction(triple: [usize; 3], m: usize) -> RootVector {
    assert!(triple.contains(&m), "axis {m} not in {triple:?}");
    let mut v = RootVector::zero();
    for &i in &triple {
        let c = if i == m { -2 } else { 1 };
        v = &v + &RootVector::k(i).scale_rational(&Rational::int(c));
    }
    v.scale_rational(&third())
}

/// Part of a decomposition. Axes are k-indices of the triple used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PartTag {
    OuterA2,
    J(usize),
    JBar(usize),
    G0,
}

impl PartTag {
    pub fn conjugate(self) -> PartTag {
        match self {
            PartTag::J(m) => PartTag::JBar(m),
            PartTag::JBar(m) => PartTag::J(m),
            t => t,
        }
    }
}

impl fmt::Display for PartTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartTag::OuterA2 => write!(f, "outer_a2"),
            PartTag::J(m) => write!(f, "J({m})"),
            PartTag::JBar(m) => write!(f, "Jbar({m})"),
            PartTag::G0 => write!(f, "g0"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionPart {
    pub tag: PartTag,
    pub roots: Vec<RootVector>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub name: String,
    pub triple: [usize; 3],
    /// Outer a2, `J` on each axis, `J̄` on each axis, `g0`.
    pub parts: Vec<DecompositionPart>,
}

impl Decomposition {
    pub fn part(&self, tag: PartTag) -> &[RootVector] {
        self.parts.iter().find(|p| p.tag == tag).map_or(&[], |p| p.roots.as_slice())
    }

    pub fn sizes(&self) -> Vec<(PartTag, usize)> {
        self.parts.iter().map(|p| (p.tag, p.roots.len())).collect()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().map(|p| p.roots.len()).sum()
    }
}

/// Expected part sizes `(J, g0)` per algebra.
pub fn expected_sizes(name: AlgebraName) -> Option<(usize, usize)> {
    match name {
        AlgebraName::F4 => Some((6, 6)),
        AlgebraName::E6 => Some((9, 12)),
        AlgebraName::E7 => Some((15, 30)),
        AlgebraName::E8 => Some((27, 72)),
        _ => None,
    }
}

/// Classifies roots by their projection onto the plane of `triple`.
pub fn decompose_roots(
    name: &str,
    roots: &[RootVector],
    triple: [usize; 3],
) -> Result<Decomposition, ProjectionError> {
    let plane = pi_plane_of(triple);
    let mut points: Vec<(RootVector, PartTag)> = Vec::new();
    for (i, &a) in triple.iter().enumerate() {
        for &b in &triple[i + 1..] {
            let h = &RootVector::k(a) - &RootVector::k(b);
            points.push((-&h, PartTag::OuterA2));
            points.push((h, PartTag::OuterA2));
        }
    }
    for &m in &triple {
        let d = axis_direction(triple, m);
        points.push((-&d, PartTag::JBar(m)));
        points.push((d, PartTag::J(m)));
    }
    points.push((RootVector::zero(), PartTag::G0));

    let mut buckets: BTreeMap<PartTag, Vec<RootVector>> = BTreeMap::new();
    for r in roots {
        let p = plane.project_linear(r);
        let tag = points
            .iter()
            .find(|(q, _)| *q == p)
            .map(|(_, t)| *t)
            .ok_or_else(|| ProjectionError::UnexpectedProjection { root: r.clone(), point: p.clone() })?;
        buckets.entry(tag).or_default().push(r.clone());
    }
    let mut order = vec![PartTag::OuterA2];
    order.extend(triple.iter().map(|&m| PartTag::J(m)));
    order.extend(triple.iter().map(|&m| PartTag::JBar(m)));
    order.push(PartTag::G0);
    let parts = order
        .into_iter()
        .map(|tag| {
            let mut roots = buckets.remove(&tag).unwrap_or_default();
            roots.sort();
            DecompositionPart { tag, roots }
        })
        .collect();
    Ok(Decomposition { name: name.to_string(), triple, parts })
}

/// `L^n = a2 ⊕ g0 ⊕ 3×(J, J̄)` as root sets, for f4, e6, e7, e8.
pub fn decompose(name: AlgebraName) -> Result<Decomposition, ProjectionError> {
    if expected_sizes(name).is_none() {
        return Err(ProjectionError::Unsupported(name));
    }
    let rs = generate_roots(name)?;
    decompose_roots(name.as_str(), &rs.roots, [1, 2, 3])
}

/// The coordinate permutation `k_{t0} → k_{t1} → k_{t2} → k_{t0}`, applied
/// `shift` times.
pub fn cyclic_permutation(triple: [usize; 3], shift: usize) -> [usize; 8] {
    let mut perm: [usize; 8] = std::array::from_fn(|i| i);
    for (i, &t) in triple.iter().enumerate() {
        perm[t - 1] = triple[(i + shift) % 3] - 1;
    }
    perm
}

/// Image of a part under a cyclic permutation of the triple's indices.
pub fn cyclic_image(part: &DecompositionPart, triple: [usize; 3], shift: usize) -> DecompositionPart {
    let perm = cyclic_permutation(triple, shift);
    let moved = |m: usize| perm[m - 1] + 1;
    let tag = match part.tag {
        PartTag::J(m) => PartTag::J(moved(m)),
        PartTag::JBar(m) => PartTag::JBar(moved(m)),
        t => t,
    };
    let mut roots: Vec<RootVector> = part.roots.iter().map(|r| r.permute(&perm)).collect();
    roots.sort();
    DecompositionPart { tag, roots }
}

/// Reverses every root; `J(m)` becomes `J̄(m)`.
pub fn negate(part: &DecompositionPart) -> DecompositionPart {
    let mut roots: Vec<RootVector> = part.roots.iter().map(|r| -r).collect();
    roots.sort();
    DecompositionPart { tag: part.tag.conjugate(), roots }
}

pub(crate) fn sorted(mut v: Vec<RootVector>) -> Vec<RootVector> {
    v.sort();
    v.dedup();
    v
}

pub(crate) fn parse(s: &str) -> RootVector {
    RootVector::parse_expr(s).unwrap_or_else(|e| panic!("bad built-in expression {s:?}: {e}"))
}

pub(crate) fn fs(num: i64, den: i64) -> FieldScalar {
    FieldScalar::from(Rational::frac(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn project_minus_k1() {
        let p = project(&-&RootVector::k(1), &pi_plane()).unwrap();
        assert_eq!(p, axis_direction([1, 2, 3], 1));
    }

    #[test]
    fn affine_offset_is_orthogonal() {
        let s = Subspace::affine(RootVector::k(1), vec![&RootVector::k(1) + &RootVector::k(2)]).unwrap();
        assert_eq!(inner(s.offset(), &s.basis()[0]), FieldScalar::zero());
        assert!(s.contains(&RootVector::k(1)));
        assert!(s.contains(&-&RootVector::k(2)));
    }

    #[test]
    fn cyclic_shift_moves_axis() {
        let perm = cyclic_permutation([1, 2, 3], 1);
        assert_eq!(RootVector::k(1).permute(&perm), RootVector::k(2));
        assert_eq!(RootVector::k(3).permute(&perm), RootVector::k(1));
    }
}
