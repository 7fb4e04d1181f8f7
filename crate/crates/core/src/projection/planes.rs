//! The planes and parallel spaces that carry `g0` and the Jordan pairs.

use crate::exactnum::{FieldScalar, Rational, Surd};
use crate::rootspace::{inner, span_rank, AlgebraName, RootVector};

use super::listed::e6_a2_factors;
use super::{axis_direction, decompose, distance_to, fs, parse, sorted, PartTag, ProjectionError, Subspace};

fn surd(num: i64, den: i64, s: Surd) -> FieldScalar {
    FieldScalar::surd(Rational::frac(num, den), s)
}

/// Named subspaces and vectors of one algebra.
#[derive(Debug, Clone)]
pub struct PlaneSet {
    pub name: AlgebraName,
    pub subspaces: Vec<(String, Subspace)>,
    pub vectors: Vec<(String, RootVector)>,
}

impl PlaneSet {
    pub fn subspace(&self, label: &str) -> Option<&Subspace> {
        self.subspaces.iter().find(|(l, _)| l == label).map(|(_, s)| s)
    }

    pub fn vector(&self, label: &str) -> Option<&RootVector> {
        self.vectors.iter().find(|(l, _)| l == label).map(|(_, v)| v)
    }
}

fn e6_bases() -> ([RootVector; 2], [RootVector; 2]) {
    let r22 = surd(1, 2, Surd::R2);
    let r66 = surd(1, 6, Surd::R6);
    (
        [parse("k4+k5").scale(&r22), parse("k1+k2+k3-r3k6").scale(&r66)],
        [parse("k4-k5").scale(&r22), parse("k1+k2+k3+r3k6").scale(&r66)],
    )
}

fn e6_offsets() -> ([RootVector; 3], [RootVector; 3]) {
    (
        [
            parse("1/6(-5k1+k2+k3+3k4-3k5-r3k6)"),
            parse("1/3(-k1+2k2+2k3+r3k6)"),
            parse("1/6(-5k1+k2+k3-3k4+3k5-r3k6)"),
        ],
        [
            parse("1/6(-5k1+k2+k3+3k4+3k5+r3k6)"),
            parse("1/3(-k1+2k2+2k3-r3k6)"),
            parse("1/6(-5k1+k2+k3-3k4-3k5+r3k6)"),
        ],
    )
}

/// Basis of the space spanned by the `g0` roots.
fn sigma0_basis(name: AlgebraName) -> Result<Vec<RootVector>, ProjectionError> {
    Ok(match name {
        AlgebraName::F4 => vec![parse("k4"), parse("k1+k2+k3").scale(&surd(1, 3, Surd::R3))],
        AlgebraName::E6 => {
            let (a, b) = e6_bases();
            a.into_iter().chain(b).collect()
        }
        AlgebraName::E7 => ["k4", "k5", "k6", "k7", "k1+k2+k3"].iter().map(|s| parse(s)).collect(),
        AlgebraName::E8 => ["k4", "k5", "k6", "k7", "k8", "k1+k2+k3"].iter().map(|s| parse(s)).collect(),
        other => return Err(ProjectionError::Unsupported(other)),
    })
}

/// The space of the `g0` roots and the parallel spaces of the Jordan pairs
/// on axis `m`, named `Pi0`/`Pi+`/`Pi-` for f4 and `Sigma0`/`Sigma+`/`Sigma-`
/// otherwise. For e6 also the two planes of the a2 factors, the offsets
/// `u_i`, `v_i` and the planes through them.
pub fn build_planes(name: AlgebraName) -> Result<PlaneSet, ProjectionError> {
    let basis = sigma0_basis(name)?;
    let d1 = axis_direction([1, 2, 3], 1);
    let stem = if name == AlgebraName::F4 { "Pi" } else { "Sigma" };
    let mut subspaces = vec![
        (format!("{stem}0"), Subspace::linear(basis.clone())?),
        (format!("{stem}+"), Subspace::affine(d1.clone(), basis.clone())?),
        (format!("{stem}-"), Subspace::affine(-&d1, basis)?),
    ];
    let mut vectors = vec![("axis".to_string(), d1)];
    if name == AlgebraName::E6 {
        let (b1, b2) = e6_bases();
        let (us, vs) = e6_offsets();
        subspaces.push(("Pi0(1)".into(), Subspace::linear(b1.to_vec())?));
        subspaces.push(("Pi0(2)".into(), Subspace::linear(b2.to_vec())?));
        for (k, (offsets, b)) in [(&us, &b1), (&vs, &b2)].into_iter().enumerate() {
            for (i, off) in offsets.iter().enumerate() {
                let plus = Subspace::affine(off.clone(), b.to_vec())?;
                subspaces.push((format!("Pi-({})_{}", k + 1, i + 1), plus.negated()));
                subspaces.push((format!("Pi+({})_{}", k + 1, i + 1), plus));
            }
        }
        for (i, u) in us.iter().enumerate() {
            vectors.push((format!("u{}", i + 1), u.clone()));
        }
        for (i, v) in vs.iter().enumerate() {
            vectors.push((format!("v{}", i + 1), v.clone()));
        }
    }
    Ok(PlaneSet { name, subspaces, vectors })
}

/// One containment, orthogonality or distance claim and whether it holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneCheck {
    pub label: String,
    pub ok: bool,
}

fn check(out: &mut Vec<PlaneCheck>, label: impl Into<String>, ok: bool) {
    out.push(PlaneCheck { label: label.into(), ok });
}

/// Coordinates `(s, t)` of points in a 2-dimensional subspace.
fn st_set(s: &Subspace, roots: &[RootVector]) -> Option<Vec<(FieldScalar, FieldScalar)>> {
    let mut out = Vec::new();
    for r in roots {
        let c = s.coordinates(r)?;
        out.push((c[0].clone(), c[1].clone()));
    }
    out.sort();
    out.dedup();
    Some(out)
}

fn f4_parameter_sets() -> [Vec<(FieldScalar, FieldScalar)>; 3] {
    let r3 = |n, d| surd(n, d, Surd::R3);
    let z = || fs(0, 1);
    let mut plus = vec![
        (z(), r3(-1, 3)),
        (fs(1, 1), r3(-1, 3)),
        (fs(-1, 1), r3(-1, 3)),
        (fs(1, 2), r3(1, 6)),
        (fs(-1, 2), r3(1, 6)),
        (z(), r3(2, 3)),
    ];
    let mut zero = vec![(fs(1, 1), z()), (fs(-1, 1), z())];
    for s in [fs(1, 2), fs(-1, 2)] {
        for t in [r3(1, 2), r3(-1, 2)] {
            zero.push((s.clone(), t));
        }
    }
    let mut minus: Vec<_> = plus.iter().map(|(s, t)| (s.clone(), -t)).collect();
    plus.sort();
    zero.sort();
    minus.sort();
    [plus, zero, minus]
}

/// Every containment, orthogonality and distance claim for the spaces of
/// `name`, on all three axes.
pub fn plane_checks(name: AlgebraName) -> Result<Vec<PlaneCheck>, ProjectionError> {
    let dec = decompose(name)?;
    let planes = build_planes(name)?;
    let stem = if name == AlgebraName::F4 { "Pi" } else { "Sigma" };
    let zero = planes.subspace(&format!("{stem}0")).expect("built").clone();
    let g0 = dec.part(PartTag::G0);
    let two_thirds = fs(2, 3);
    let mut out = Vec::new();
    check(&mut out, format!("g0 roots lie in {stem}0"), g0.iter().all(|r| zero.contains(r)));
    check(&mut out, format!("g0 roots span {stem}0"), span_rank(g0) == zero.dim());
    for m in 1..=3 {
        let d = axis_direction([1, 2, 3], m);
        for (sign, tag) in [(1, PartTag::J(m)), (-1, PartTag::JBar(m))] {
            let off = if sign > 0 { d.clone() } else { -&d };
            let space = Subspace::affine(off, zero.basis().to_vec())?;
            let roots = dec.part(tag);
            check(&mut out, format!("{tag} lies in the space parallel to {stem}0"), roots.iter().all(|r| space.contains(r)));
            let dist = distance_to(&space, &zero)?;
            check(&mut out, format!("{tag} space at squared distance 2/3"), dist.squared == two_thirds);
            check(&mut out, format!("{tag} space at distance r6/3"), dist.value == Some(surd(1, 3, Surd::R6)));
        }
    }
    let plus = planes.subspace(&format!("{stem}+")).expect("built");
    let minus = planes.subspace(&format!("{stem}-")).expect("built");
    check(&mut out, format!("h.w. J lies in {stem}+"), dec.part(PartTag::J(1)).iter().all(|r| plus.contains(r)));
    check(&mut out, format!("conjugate J lies in {stem}-"), dec.part(PartTag::JBar(1)).iter().all(|r| minus.contains(r)));
    match name {
        AlgebraName::F4 => {
            let [p, z, m] = f4_parameter_sets();
            check(&mut out, "Pi+ parameters", st_set(plus, dec.part(PartTag::J(1))) == Some(p));
            check(&mut out, "Pi0 parameters (corrected)", st_set(&zero, g0) == Some(z));
            check(&mut out, "Pi- parameters", st_set(minus, dec.part(PartTag::JBar(1))) == Some(m));
        }
        AlgebraName::E6 => e6_checks(&mut out, &planes, dec.part(PartTag::J(1)))?,
        _ => {}
    }
    Ok(out)
}

fn e6_checks(out: &mut Vec<PlaneCheck>, planes: &PlaneSet, hw: &[RootVector]) -> Result<(), ProjectionError> {
    let p1 = planes.subspace("Pi0(1)").expect("built");
    let p2 = planes.subspace("Pi0(2)").expect("built");
    let orth = |v: &RootVector, s: &Subspace| s.basis().iter().all(|b| inner(v, b) == fs(0, 1));
    for i in 1..=3 {
        let u = planes.vector(&format!("u{i}")).expect("built");
        let v = planes.vector(&format!("v{i}")).expect("built");
        check(out, format!("u{i} orthogonal to Pi0(1)"), orth(u, p1));
        check(out, format!("v{i} orthogonal to Pi0(2)"), orth(v, p2));
    }
    check(out, "Pi0(1) orthogonal to Pi0(2)", p2.basis().iter().all(|b| orth(b, p1)));
    let [a1, a2] = e6_a2_factors();
    check(out, "a2(1) roots lie in Pi0(1)", a1.iter().all(|r| p1.contains(r)));
    check(out, "a2(2) roots lie in Pi0(2)", a2.iter().all(|r| p2.contains(r)));
    for k in 1..=2 {
        let ok = hw.iter().all(|r| {
            (1..=3).filter(|i| planes.subspace(&format!("Pi+({k})_{i}")).expect("built").contains(r)).count() == 1
        });
        check(out, format!("each h.w. root lies on exactly one Pi+({k})_i"), ok);
    }
    Ok(())
}

/// A row of the e6 quantum-number table: the planes through the root and its
/// coordinates there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumNumberRow {
    pub root: RootVector,
    /// Index `i` of the plane through `±u_i` parallel to `Pi0(1)`.
    pub plane1_index: usize,
    /// Index `j` of the plane through `±v_j` parallel to `Pi0(2)`.
    pub plane2_index: usize,
    /// Coordinates along `Pi0(1)`.
    pub st: (FieldScalar, FieldScalar),
    /// Coordinates along `Pi0(2)`.
    pub st_prime: (FieldScalar, FieldScalar),
}

/// Quantum numbers of one e6 root of `J(1)` (`conjugate = false`) or of
/// `J̄(1)` (`conjugate = true`).
pub fn quantum_numbers(root: &RootVector, conjugate: bool) -> Result<QuantumNumberRow, ProjectionError> {
    let planes = build_planes(AlgebraName::E6)?;
    let sign = if conjugate { "-" } else { "+" };
    let find = |k: usize| {
        (1..=3).find_map(|i| {
            let s = planes.subspace(&format!("Pi{sign}({k})_{i}")).expect("built");
            s.coordinates(root).map(|c| (i, (c[0].clone(), c[1].clone())))
        })
    };
    match (find(1), find(2)) {
        (Some((i, st)), Some((j, st_prime))) => {
            Ok(QuantumNumberRow { root: root.clone(), plane1_index: i, plane2_index: j, st, st_prime })
        }
        _ => Err(ProjectionError::NoPlanePair(root.clone())),
    }
}

/// Quantum numbers of the nine h.w. e6 Jordan roots, ordered by plane indices.
pub fn table3_quantum_numbers() -> Result<Vec<QuantumNumberRow>, ProjectionError> {
    let dec = decompose(AlgebraName::E6)?;
    let mut rows = dec.part(PartTag::J(1)).iter().map(|r| quantum_numbers(r, false)).collect::<Result<Vec<_>, _>>()?;
    rows.sort_by_key(|r| (r.plane1_index, r.plane2_index));
    Ok(rows)
}

/// A row of the listed table, with the listed root and its correction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table3Literal {
    pub block: usize,
    pub row: usize,
    pub printed: RootVector,
    pub root: RootVector,
    pub st: (FieldScalar, FieldScalar),
    pub st_prime: (FieldScalar, FieldScalar),
}

/// The listed quantum-number table. Block 3 row 2 repeats block 1
/// row 2; `root` holds the corrected value.
pub fn table3_literal() -> Vec<Table3Literal> {
    let t = [(surd(1, 2, Surd::R2), surd(-1, 6, Surd::R6)), (fs(0, 1), surd(1, 3, Surd::R6)), (surd(-1, 2, Surd::R2), surd(-1, 6, Surd::R6))];
    let printed = [
        ["-k1+k4", "1/2(-k1+k2+k3+k4-k5-r3k6)", "-k1-k5"],
        ["1/2(-k1+k2+k3+k4+k5+r3k6)", "k2+k3", "1/2(-k1+k2+k3-k4-k5+r3k6)"],
        ["-k1+k5", "1/2(-k1+k2+k3+k4-k5-r3k6)", "-k1-k4"],
    ];
    let mut out = Vec::new();
    for (b, block) in printed.iter().enumerate() {
        for (r, s) in block.iter().enumerate() {
            let p = parse(s);
            let root = if (b, r) == (2, 1) { parse("1/2(-k1+k2+k3-k4+k5-r3k6)") } else { p.clone() };
            out.push(Table3Literal { block: b + 1, row: r + 1, printed: p, root, st: t[r].clone(), st_prime: t[b].clone() });
        }
    }
    out
}

/// Whether the listed roots are pairwise distinct (they are not).
pub fn table3_printed_distinct() -> bool {
    let printed: Vec<RootVector> = table3_literal().into_iter().map(|r| r.printed).collect();
    sorted(printed).len() == 9
}
