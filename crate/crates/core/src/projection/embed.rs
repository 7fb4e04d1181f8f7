//! Subsystems seen through the projection: the η-bases of a5 ⊂ e6 and
//! d6 ⊂ e7, the three-plane subsystems c3, a5, d6, e7, and e6, e7 found
//! inside e8 by a change of coordinates.

use crate::exactnum::{FieldScalar, Rational, Surd};
use crate::rootspace::{dynkin_type, generate_roots, inner, validate_root_system, AlgebraName, RootSystem, RootVector};

use super::listed::{e6_a2_factors, listed_hw_jordan};
use super::planes::PlaneCheck;
use super::{decompose, parse, sorted, PartTag, ProjectionError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EtaTarget {
    A5InE6,
    D6InE7,
}

impl EtaTarget {
    pub fn as_str(self) -> &'static str {
        match self {
            EtaTarget::A5InE6 => "a5-in-e6",
            EtaTarget::D6InE7 => "d6-in-e7",
        }
    }

    pub fn parse(s: &str) -> Option<EtaTarget> {
        match s {
            "a5-in-e6" | "a5_in_e6" => Some(EtaTarget::A5InE6),
            "d6-in-e7" | "d6_in_e7" => Some(EtaTarget::D6InE7),
            _ => None,
        }
    }
}

/// Roots of a subsystem written in an η-basis, with their checks.
#[derive(Debug, Clone)]
pub struct EtaEmbedding {
    pub target: EtaTarget,
    /// The η vectors themselves, when they are given explicitly.
    pub etas: Option<Vec<RootVector>>,
    /// Labels such as `eta1-eta2` with their images.
    pub images: Vec<(String, RootVector)>,
    pub dynkin: String,
    pub checks: Vec<PlaneCheck>,
}

impl EtaEmbedding {
    pub fn is_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn image(&self, label: &str) -> Option<&RootVector> {
        self.images.iter().find(|(l, _)| l == label).map(|(_, v)| v)
    }
}

const A5_LISTED: [(usize, usize, &str); 15] = [
    (1, 2, "k4+k5"),
    (3, 1, "1/2(k1+k2+k3-k4-k5-r3k6)"),
    (2, 3, "1/2(-k1-k2-k3-k4-k5+r3k6)"),
    (4, 5, "1/2(k1+k2+k3-k4+k5+r3k6)"),
    (6, 4, "k4-k5"),
    (5, 6, "1/2(-k1-k2-k3-k4+k5-r3k6)"),
    (1, 4, "-k1+k4"),
    (1, 5, "1/2(-k1+k2+k3+k4+k5+r3k6)"),
    (1, 6, "-k1+k5"),
    (2, 4, "-k1-k5"),
    (2, 5, "1/2(-k1+k2+k3-k4-k5+r3k6)"),
    (2, 6, "-k1-k4"),
    (3, 4, "1/2(-k1+k2+k3+k4-k5-r3k6)"),
    (3, 5, "k2+k3"),
    (3, 6, "1/2(-k1+k2+k3-k4+k5-r3k6)"),
];

const D6_ETAS: [&str; 6] = [
    "1/2(-k1-k4-k5-k6)",
    "1/2(-k1-k4+k5+k6)",
    "1/2(-k1+k4-k5+k6)",
    "1/2(-k1+k4+k5-k6)",
    "1/2(k2+k3+r2k7)",
    "1/2(k2+k3-r2k7)",
];

const D6_MINUS: [&str; 15] = [
    "-k5-k6",
    "-k4-k6",
    "-k4-k5",
    "1/2(-k1-k2-k3-k4-k5-k6-r2k7)",
    "1/2(-k1-k2-k3-k4-k5-k6+r2k7)",
    "-k4+k5",
    "-k4+k6",
    "1/2(-k1-k2-k3-k4+k5+k6-r2k7)",
    "1/2(-k1-k2-k3-k4+k5+k6+r2k7)",
    "-k5+k6",
    "1/2(-k1-k2-k3+k4-k5+k6-r2k7)",
    "1/2(-k1-k2-k3+k4-k5+k6+r2k7)",
    "1/2(-k1-k2-k3+k4+k5-k6-r2k7)",
    "1/2(-k1-k2-k3+k4+k5-k6+r2k7)",
    "r2k7",
];

const D6_PLUS: [&str; 15] = [
    "-k1-k4",
    "-k1-k5",
    "-k1-k6",
    "1/2(-k1+k2+k3-k4-k5-k6+r2k7)",
    "1/2(-k1+k2+k3-k4-k5-k6-r2k7)",
    "-k1+k6",
    "-k1+k5",
    "1/2(-k1+k2+k3-k4+k5+k6+r2k7)",
    "1/2(-k1+k2+k3-k4+k5+k6-r2k7)",
    "-k1+k4",
    "1/2(-k1+k2+k3+k4-k5+k6+r2k7)",
    "1/2(-k1+k2+k3+k4-k5+k6-r2k7)",
    "1/2(-k1+k2+k3+k4+k5-k6+r2k7)",
    "1/2(-k1+k2+k3+k4+k5-k6-r2k7)",
    "k2+k3",
];

fn pairs() -> impl Iterator<Item = (usize, usize)> {
    (1..=6).flat_map(|i| (i + 1..=6).map(move |j| (i, j)))
}

fn push(checks: &mut Vec<PlaneCheck>, label: impl Into<String>, ok: bool) {
    checks.push(PlaneCheck { label: label.into(), ok });
}

fn type_of(name: AlgebraName, roots: Vec<RootVector>) -> String {
    let rs = RootSystem::from_roots(name, roots);
    if !validate_root_system(&rs).is_valid() {
        return "invalid".into();
    }
    dynkin_type(&rs).map_or_else(|e| format!("error: {e}"), |t| t.to_string())
}

/// The g0 roots together with one Jordan pair.
fn g3_roots(name: AlgebraName) -> Result<Vec<RootVector>, ProjectionError> {
    let dec = decompose(name)?;
    Ok(sorted([dec.part(PartTag::G0), dec.part(PartTag::J(1)), dec.part(PartTag::JBar(1))].concat()))
}

pub fn eta_embedding(target: EtaTarget) -> Result<EtaEmbedding, ProjectionError> {
    match target {
        EtaTarget::A5InE6 => a5_in_e6(),
        EtaTarget::D6InE7 => d6_in_e7(),
    }
}

fn a5_in_e6() -> Result<EtaEmbedding, ProjectionError> {
    let e6 = generate_roots(AlgebraName::E6)?;
    let mut diff = vec![vec![None::<RootVector>; 7]; 7];
    for (i, j, s) in A5_LISTED {
        let v = parse(s);
        diff[j][i] = Some(-&v);
        diff[i][j] = Some(v);
    }
    let mut checks = Vec::new();
    let mut additive = true;
    for i in 1..=6 {
        for j in 1..=6 {
            for k in 1..=6 {
                if i != j && j != k && i != k {
                    let (a, b, c) = (&diff[i][j], &diff[j][k], &diff[i][k]);
                    additive &= matches!((a, b, c), (Some(a), Some(b), Some(c)) if &(a + b) == c);
                }
            }
        }
    }
    push(&mut checks, "eta_i - eta_j + eta_j - eta_k = eta_i - eta_k for the listed values", additive);
    let mut images = Vec::new();
    for i in 1..=6 {
        for j in 1..=6 {
            if let Some(v) = &diff[i][j] {
                images.push((format!("eta{i}-eta{j}"), v.clone()));
            }
        }
    }
    let all: Vec<RootVector> = images.iter().map(|(_, v)| v.clone()).collect();
    push(&mut checks, "every image is an e6 root", all.iter().all(|r| e6.contains(r)));
    push(&mut checks, "the 30 images are g0 and the h.w. Jordan pair", sorted(all.clone()) == g3_roots(AlgebraName::E6)?);
    let [f1, f2] = e6_a2_factors();
    let block = |set: [usize; 3]| {
        sorted(images.iter().filter(|(l, _)| set.iter().any(|a| l.starts_with(&format!("eta{a}-")))
            && set.iter().any(|b| l.ends_with(&format!("-eta{b}")))).map(|(_, v)| v.clone()).collect())
    };
    push(&mut checks, "eta1..eta3 differences are a2(1)", block([1, 2, 3]) == f1);
    push(&mut checks, "eta4..eta6 differences are a2(2)", block([4, 5, 6]) == f2);
    let dynkin = type_of(AlgebraName::A5, all);
    push(&mut checks, "type A5", dynkin == "A5");
    Ok(EtaEmbedding { target: EtaTarget::A5InE6, etas: None, images, dynkin, checks })
}

fn d6_in_e7() -> Result<EtaEmbedding, ProjectionError> {
    let e7 = generate_roots(AlgebraName::E7)?;
    let etas: Vec<RootVector> = D6_ETAS.iter().map(|s| parse(s)).collect();
    let mut checks = Vec::new();
    let orthonormal = (0..6).all(|i| {
        (0..6).all(|j| inner(&etas[i], &etas[j]) == FieldScalar::from(i64::from(i == j)))
    });
    push(&mut checks, "the eta vectors are orthonormal", orthonormal);
    let mut images = Vec::new();
    let (mut minus_ok, mut plus_ok) = (true, true);
    for (n, (i, j)) in pairs().enumerate() {
        let (a, b) = (&etas[i - 1], &etas[j - 1]);
        let m = a - b;
        let p = a + b;
        minus_ok &= m == parse(D6_MINUS[n]);
        plus_ok &= p == parse(D6_PLUS[n]);
        images.push((format!("eta{i}-eta{j}"), m.clone()));
        images.push((format!("-eta{i}+eta{j}"), -&m));
        images.push((format!("eta{i}+eta{j}"), p.clone()));
        images.push((format!("-eta{i}-eta{j}"), -&p));
    }
    push(&mut checks, "listed eta_i - eta_j expansions", minus_ok);
    push(&mut checks, "listed eta_i + eta_j expansions", plus_ok);
    let all: Vec<RootVector> = images.iter().map(|(_, v)| v.clone()).collect();
    push(&mut checks, "every image is an e7 root", all.iter().all(|r| e7.contains(r)));
    push(&mut checks, "the 60 images are g0 and the h.w. Jordan pair", sorted(all.clone()) == g3_roots(AlgebraName::E7)?);
    let dec = decompose(AlgebraName::E7)?;
    let diffs: Vec<RootVector> = pairs()
        .flat_map(|(i, j)| {
            let m = &etas[i - 1] - &etas[j - 1];
            [-&m, m]
        })
        .collect();
    push(&mut checks, "eta_i - eta_j are the g0 roots", sorted(diffs) == dec.part(PartTag::G0));
    let sums: Vec<RootVector> = pairs().map(|(i, j)| &etas[i - 1] + &etas[j - 1]).collect();
    push(&mut checks, "eta_i + eta_j are the h.w. Jordan roots", sorted(sums.clone()) == dec.part(PartTag::J(1)));
    push(&mut checks, "eta_i + eta_j match the corrected listing", sorted(sums) == listed_hw_jordan(AlgebraName::E7, true)?);
    let dynkin = type_of(AlgebraName::D6, all);
    push(&mut checks, "type D6", dynkin == "D6");
    Ok(EtaEmbedding { target: EtaTarget::D6InE7, etas: Some(etas), images, dynkin, checks })
}

/// Type of `g0 ∪ J(m) ∪ J̄(m)` for one algebra and axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreePlaneType {
    pub algebra: AlgebraName,
    pub axis: usize,
    pub roots: usize,
    pub expected: &'static str,
    pub found: String,
}

impl ThreePlaneType {
    pub fn is_ok(&self) -> bool {
        self.found == self.expected
    }
}

/// c3 in f4, a5 in e6, d6 in e7 and e7 in e8, on each of the three axes.
pub fn three_plane_types(name: AlgebraName) -> Result<Vec<ThreePlaneType>, ProjectionError> {
    let (sub, expected) = match name {
        AlgebraName::F4 => (AlgebraName::C3, "C3"),
        AlgebraName::E6 => (AlgebraName::A5, "A5"),
        AlgebraName::E7 => (AlgebraName::D6, "D6"),
        AlgebraName::E8 => (AlgebraName::E7, "E7"),
        other => return Err(ProjectionError::Unsupported(other)),
    };
    let dec = decompose(name)?;
    let mut out = Vec::new();
    for m in 1..=3 {
        let roots = [dec.part(PartTag::G0), dec.part(PartTag::J(m)), dec.part(PartTag::JBar(m))].concat();
        out.push(ThreePlaneType { algebra: name, axis: m, roots: roots.len(), expected, found: type_of(sub, roots) });
    }
    Ok(out)
}

/// How the substitution `k'_i = k_i+3` is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubstitutionReading {
    /// `k'_i = k_{i+3}`.
    SubscriptShift,
    /// `k'_i = k_i`.
    Unshifted,
    /// `k'_i = k_i + k_3`.
    SumWithK3,
}

impl SubstitutionReading {
    pub const ALL: [SubstitutionReading; 3] =
        [SubstitutionReading::SubscriptShift, SubstitutionReading::Unshifted, SubstitutionReading::SumWithK3];

    pub fn describe(self) -> &'static str {
        match self {
            SubstitutionReading::SubscriptShift => "k'_i = k_(i+3)",
            SubstitutionReading::Unshifted => "k'_i = k_i",
            SubstitutionReading::SumWithK3 => "k'_i = k_i + k_3",
        }
    }

    fn image(self, i: usize) -> RootVector {
        match self {
            SubstitutionReading::SubscriptShift => RootVector::k(i + 3),
            SubstitutionReading::Unshifted => RootVector::k(i),
            SubstitutionReading::SumWithK3 => &RootVector::k(i) + &RootVector::k(3),
        }
    }
}

/// A coordinate substitution under which the table presentation of `sub`
/// appears inside e8.
#[derive(Debug, Clone)]
pub struct Recognition {
    pub sub: AlgebraName,
    pub reading: SubstitutionReading,
    /// Images of `k_1, k_2, …` of the table presentation.
    pub images: Vec<RootVector>,
    pub target_size: usize,
    pub set_equal: bool,
    pub isometry: bool,
    /// Every reading tried and whether it matched.
    pub tried: Vec<(SubstitutionReading, bool)>,
}

fn apply(images: &[RootVector], v: &RootVector) -> RootVector {
    let mut out = RootVector::zero();
    for (c, img) in v.0.iter().zip(images) {
        if !crate::exactnum::Scalar::is_zero(c) {
            out = &out + &img.scale(c);
        }
    }
    out
}

fn substitution(sub: AlgebraName, reading: SubstitutionReading) -> Vec<RootVector> {
    let mut images: Vec<RootVector> = (1..=5).map(|i| reading.image(i)).collect();
    match sub {
        AlgebraName::E6 => {
            images.push(parse("k1+k2+k3").scale(&FieldScalar::surd(Rational::frac(-1, 3), Surd::R3)));
        }
        _ => {
            images.push(RootVector::k(1));
            images.push(parse("k2+k3").scale(&FieldScalar::surd(Rational::frac(1, 2), Surd::R2)));
        }
    }
    images
}

/// Finds the reading of the substitution that maps the table roots of `sub`
/// (e6 or e7) onto `g0` of e8 (for e6) or `g0 ∪ J(1) ∪ J̄(1)` (for e7).
pub fn recognize_inside_e8(sub: AlgebraName) -> Result<Recognition, ProjectionError> {
    let target = match sub {
        AlgebraName::E6 => decompose(AlgebraName::E8)?.part(PartTag::G0).to_vec(),
        AlgebraName::E7 => g3_roots(AlgebraName::E8)?,
        other => return Err(ProjectionError::Unsupported(other)),
    };
    let table = generate_roots(sub)?;
    let mut tried = Vec::new();
    let mut found = None;
    for reading in SubstitutionReading::ALL {
        let images = substitution(sub, reading);
        let mapped = sorted(table.roots.iter().map(|r| apply(&images, r)).collect());
        let ok = mapped == target;
        tried.push((reading, ok));
        if ok && found.is_none() {
            found = Some((reading, images));
        }
    }
    let (reading, images) = found.ok_or_else(|| ProjectionError::NoReading(format!("{sub} inside e8")))?;
    let isometry = (0..images.len()).all(|i| {
        (0..images.len()).all(|j| inner(&images[i], &images[j]) == FieldScalar::from(i64::from(i == j)))
    });
    Ok(Recognition { sub, reading, images, target_size: target.len(), set_equal: true, isometry, tried })
}
