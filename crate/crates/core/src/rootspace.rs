//! Root systems of g2, f4, e6, e7 and e8 in a common R^8.
//!
//! The exceptional tables are generated row by row. The half-sum rows of e6
//! and e7 carry a sign-parity condition and a scaled last term (`√3 k6`,
//! `√2 k7`); whether that last sign takes part in the parity count is decided
//! at generation time by the validator, see [`ParityReading`].

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

use crate::exactnum::{linalg, FieldScalar, Rational, Surd};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("unknown algebra name {0:?}")]
    UnknownName(String),
    #[error("no root table is defined for {0}")]
    UnsupportedAlgebra(AlgebraName),
    #[error("root system {name} fails validation: {first}")]
    Invalid { name: String, first: String },
    #[error("the simple-root functional vanishes on {0}")]
    NonGenericFunctional(RootVector),
    #[error("found {found} simple roots for a system of rank {rank}")]
    SimpleRootCount { found: usize, rank: usize },
    #[error("cannot parse root expression {0:?}")]
    Parse(String),
    #[error("no parity reading of the half-sum row of {0} yields a valid root system")]
    NoParityReading(AlgebraName),
    #[error("both parity readings of the half-sum row of {0} yield valid root systems")]
    AmbiguousParityReading(AlgebraName),
}

/// An exact vector of R^8 in the orthonormal basis `k1, …, k8`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RootVector(pub [FieldScalar; 8]);

impl RootVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector `k_i` for `i` in `1..=8`.
    ///
    /// # Panics
    /// Panics when `i` is outside `1..=8`.
    pub fn k(i: usize) -> Self {
        assert!((1..=8).contains(&i), "basis index {i} out of range");
        let mut v = Self::zero();
        v.0[i - 1] = FieldScalar::one();
        v
    }

    pub fn from_rationals(xs: [Rational; 8]) -> Self {
        RootVector(xs.map(FieldScalar::from))
    }

    pub fn coord(&self, i: usize) -> &FieldScalar {
        &self.0[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(FieldScalar::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.0.iter().all(FieldScalar::is_real)
    }

    pub fn scale(&self, c: &FieldScalar) -> Self {
        RootVector(std::array::from_fn(|k| {
            if self.0[k].is_zero() {
                FieldScalar::zero()
            } else {
                &self.0[k] * c
            }
        }))
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        RootVector(std::array::from_fn(|k| self.0[k].scale(q)))
    }

    pub fn norm2(&self) -> FieldScalar {
        inner(self, self)
    }

    /// Floating-point coordinates, for rendering only.
    pub fn to_f64(&self) -> [f64; 8] {
        std::array::from_fn(|k| self.0[k].to_f64().0)
    }

    /// Permutes coordinates: the result has `self[i]` at position `perm[i]`
    /// (0-based).
    pub fn permute(&self, perm: &[usize; 8]) -> Self {
        let mut out = Self::zero();
        for (i, &p) in perm.iter().enumerate() {
            out.0[p] = self.0[i].clone();
        }
        out
    }

    /// Parses expressions such as `1/2(-k1+k2+k3+k4-k5-r3k6)`, `k4-k5`,
    /// `r2/2(k2+k3)` or `-1/3(2k1-k2-k3)`. Coefficients accept rationals and
    /// the surds `r2`, `r3`, `r6`.
    pub fn parse_expr(s: &str) -> Result<Self, RootError> {
        let bad = || RootError::Parse(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (prefactor, body) = match t.find('(') {
            Some(open) => {
                let body = t[open + 1..].strip_suffix(')').ok_or_else(bad)?;
                let pre = &t[..open];
                let pre = match pre {
                    "" | "+" => FieldScalar::one(),
                    "-" => FieldScalar::from(-1),
                    _ => parse_coefficient(pre).ok_or_else(bad)?,
                };
                (pre, body.to_string())
            }
            None => (FieldScalar::one(), t.clone()),
        };
        let mut out = Self::zero();
        let mut start = 0;
        let bytes = body.as_bytes();
        let mut terms = Vec::new();
        for k in 1..=bytes.len() {
            if k == bytes.len() || bytes[k] == b'+' || bytes[k] == b'-' {
                terms.push(&body[start..k]);
                start = k;
            }
        }
        for term in terms {
            let pos = term.rfind('k').ok_or_else(bad)?;
            let idx: usize = term[pos + 1..].parse().map_err(|_| bad())?;
            if !(1..=8).contains(&idx) {
                return Err(bad());
            }
            let coef = match &term[..pos] {
                "" | "+" => FieldScalar::one(),
                "-" => FieldScalar::from(-1),
                c => parse_coefficient(c).ok_or_else(bad)?,
            };
            out.0[idx - 1] += &coef;
        }
        Ok(out.scale(&prefactor))
    }
}

/// Parses `p`, `p/q`, `rN`, `rN/q`, `p*rN`, `prN` with an optional sign.
fn parse_coefficient(s: &str) -> Option<FieldScalar> {
    let s = s.strip_suffix('*').unwrap_or(s);
    let (neg, s) = match s.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let mut value = match s.find('r') {
        Some(pos) => {
            let lead = s[..pos].trim_end_matches('*');
            let lead: Rational = if lead.is_empty() { Rational::ONE } else { lead.parse().ok()? };
            let rest = &s[pos + 1..];
            let (digit, den) = match rest.split_once('/') {
                Some((d, q)) => (d, q.parse::<Rational>().ok()?),
                None => (rest, Rational::ONE),
            };
            let surd = match digit {
                "2" => Surd::R2,
                "3" => Surd::R3,
                "6" => Surd::R6,
                _ => return None,
            };
            FieldScalar::surd(&lead / &den, surd)
        }
        None => FieldScalar::from(s.parse::<Rational>().ok()?),
    };
    if neg {
        value = -value;
    }
    Some(value)
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = if *c == FieldScalar::one() {
                format!("k{}", k + 1)
            } else if *c == FieldScalar::from(-1) {
                format!("-k{}", k + 1)
            } else if c.to_rational().is_some() {
                format!("{c}*k{}", k + 1)
            } else {
                format!("({c})*k{}", k + 1)
            };
            if !first && !body.starts_with('-') {
                f.write_str("+")?;
            }
            f.write_str(&body)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&RootVector> for &RootVector {
    type Output = RootVector;
    fn add(self, rhs: &RootVector) -> RootVector {
        RootVector(std::array::from_fn(|k| &self.0[k] + &rhs.0[k]))
    }
}

impl Sub<&RootVector> for &RootVector {
    type Output = RootVector;
    fn sub(self, rhs: &RootVector) -> RootVector {
        RootVector(std::array::from_fn(|k| &self.0[k] - &rhs.0[k]))
    }
}

impl Neg for &RootVector {
    type Output = RootVector;
    fn neg(self) -> RootVector {
        RootVector(std::array::from_fn(|k| -&self.0[k]))
    }
}

/// The Euclidean inner product in the `k` basis.
pub fn inner(u: &RootVector, v: &RootVector) -> FieldScalar {
    let mut acc = FieldScalar::zero();
    for (a, b) in u.0.iter().zip(&v.0) {
        if !a.is_zero() && !b.is_zero() {
            acc += &(a * b);
        }
    }
    acc
}

/// Exact rank of a set of vectors.
pub fn span_rank(vs: &[RootVector]) -> usize {
    let rows: Vec<Vec<FieldScalar>> = vs.iter().map(|v| v.0.to_vec()).collect();
    linalg::rank(&rows)
}

/// The exceptional algebras and the subsystem names used alongside them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraName {
    G2,
    F4,
    E6,
    E7,
    E8,
    A1,
    A2,
    A2A2,
    A5,
    C3,
    D6,
}

impl AlgebraName {
    pub const EXCEPTIONAL: [AlgebraName; 5] =
        [AlgebraName::G2, AlgebraName::F4, AlgebraName::E6, AlgebraName::E7, AlgebraName::E8];

    pub fn as_str(self) -> &'static str {
        match self {
            AlgebraName::G2 => "g2",
            AlgebraName::F4 => "f4",
            AlgebraName::E6 => "e6",
            AlgebraName::E7 => "e7",
            AlgebraName::E8 => "e8",
            AlgebraName::A1 => "a1",
            AlgebraName::A2 => "a2",
            AlgebraName::A2A2 => "a2+a2",
            AlgebraName::A5 => "a5",
            AlgebraName::C3 => "c3",
            AlgebraName::D6 => "d6",
        }
    }

    pub fn is_exceptional(self) -> bool {
        Self::EXCEPTIONAL.contains(&self)
    }
}

impl fmt::Display for AlgebraName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AlgebraName {
    type Err = RootError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let all = [
            AlgebraName::G2,
            AlgebraName::F4,
            AlgebraName::E6,
            AlgebraName::E7,
            AlgebraName::E8,
            AlgebraName::A1,
            AlgebraName::A2,
            AlgebraName::A2A2,
            AlgebraName::A5,
            AlgebraName::C3,
            AlgebraName::D6,
        ];
        let key = s.trim().to_ascii_lowercase();
        all.into_iter()
            .find(|n| n.as_str() == key)
            .ok_or_else(|| RootError::UnknownName(s.to_string()))
    }
}

/// A named finite set of roots in R^8, kept in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub name: AlgebraName,
    pub roots: Vec<RootVector>,
    pub rank: usize,
}

impl RootSystem {
    /// Sorts the roots and computes the rank of their span. Duplicates are
    /// kept so that validation can report them.
    pub fn from_roots(name: AlgebraName, mut roots: Vec<RootVector>) -> Self {
        roots.sort();
        let rank = span_rank(&roots);
        RootSystem { name, roots, rank }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        8
    }

    pub fn contains(&self, v: &RootVector) -> bool {
        self.roots.binary_search(v).is_ok()
    }
}

/// How the sign-parity condition of a half-sum row is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParityReading {
    /// Every sign in the row counts, including the one on the scaled last term.
    AllSigns,
    /// The sign on the scaled last term (`√3 k6`, `√2 k7`) is free and only
    /// the plain `k` terms are counted.
    ExcludeScaledTerm,
}

#[derive(Clone, Copy)]
enum Parity {
    Odd,
    Even,
}

fn pm_pairs(n: usize) -> Vec<RootVector> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = RootVector::zero();
                v.0[i - 1] = FieldScalar::from(si);
                v.0[j - 1] = FieldScalar::from(sj);
                out.push(v);
            }
        }
    }
    out
}

/// `½(±k1 … ±k_{n-1} ± s k_n)` with the parity condition applied to the
/// number of `+` signs.
fn half_sums(n: usize, last: FieldScalar, parity: Parity, reading: ParityReading) -> Vec<RootVector> {
    let half = Rational::frac(1, 2);
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let plus_total = mask.count_ones();
        let last_plus = (mask >> (n - 1)) & 1 == 1;
        let counted = match reading {
            ParityReading::AllSigns => plus_total,
            ParityReading::ExcludeScaledTerm => plus_total - u32::from(last_plus),
        };
        let ok = match parity {
            Parity::Odd => counted % 2 == 1,
            Parity::Even => counted % 2 == 0,
        };
        if !ok {
            continue;
        }
        let mut v = RootVector::zero();
        for k in 0..n {
            let sign = if (mask >> k) & 1 == 1 { 1 } else { -1 };
            let base = if k == n - 1 { last.clone() } else { FieldScalar::one() };
            v.0[k] = base.scale(&(&half * &Rational::int(sign)));
        }
        out.push(v);
    }
    out
}

/// The Table-2 rows for `name` under the given parity reading.
pub fn table_roots(name: AlgebraName, reading: ParityReading) -> Result<Vec<RootVector>, RootError> {
    let mut roots = Vec::new();
    match name {
        AlgebraName::G2 => {
            for i in 1..=3 {
                for j in 1..=3 {
                    if i != j {
                        roots.push(&RootVector::k(i) - &RootVector::k(j));
                    }
                }
            }
            for i in 1..=3 {
                let mut v = RootVector::zero();
                for j in 1..=3 {
                    v.0[j - 1] = FieldScalar::from(Rational::frac(if i == j { -2 } else { 1 }, 3));
                }
                roots.push(-&v);
                roots.push(v);
            }
        }
        AlgebraName::F4 => {
            for i in 1..=4 {
                roots.push(RootVector::k(i));
                roots.push(-&RootVector::k(i));
            }
            roots.extend(pm_pairs(4));
            let half = Rational::frac(1, 2);
            for mask in 0u32..16 {
                let mut v = RootVector::zero();
                for k in 0..4 {
                    let s = if (mask >> k) & 1 == 1 { half.clone() } else { -&half };
                    v.0[k] = FieldScalar::from(s);
                }
                roots.push(v);
            }
        }
        AlgebraName::E6 => {
            roots.extend(pm_pairs(5));
            let r3 = FieldScalar::surd(Rational::ONE, Surd::R3);
            roots.extend(half_sums(6, r3, Parity::Odd, reading));
        }
        AlgebraName::E7 => {
            let r2 = FieldScalar::surd(Rational::ONE, Surd::R2);
            let mut v = RootVector::zero();
            v.0[6] = r2.clone();
            roots.push(-&v);
            roots.push(v);
            roots.extend(pm_pairs(6));
            roots.extend(half_sums(7, r2, Parity::Even, reading));
        }
        AlgebraName::E8 => {
            roots.extend(pm_pairs(8));
            roots.extend(half_sums(8, FieldScalar::one(), Parity::Even, ParityReading::AllSigns));
        }
        other => return Err(RootError::UnsupportedAlgebra(other)),
    }
    Ok(roots)
}

/// The parity reading under which the half-sum row of `name` produces a valid
/// root system, or `None` for tables without a scaled term.
pub fn resolve_parity_reading(name: AlgebraName) -> Result<Option<ParityReading>, RootError> {
    if !matches!(name, AlgebraName::E6 | AlgebraName::E7) {
        return Ok(None);
    }
    let mut valid = Vec::new();
    for reading in [ParityReading::AllSigns, ParityReading::ExcludeScaledTerm] {
        let rs = RootSystem::from_roots(name, table_roots(name, reading)?);
        if validate_root_system(&rs).is_valid() {
            valid.push(reading);
        }
    }
    match valid.as_slice() {
        [one] => Ok(Some(*one)),
        [] => Err(RootError::NoParityReading(name)),
        _ => Err(RootError::AmbiguousParityReading(name)),
    }
}

fn build(name: AlgebraName) -> Result<RootSystem, RootError> {
    let reading = resolve_parity_reading(name)?.unwrap_or(ParityReading::AllSigns);
    Ok(RootSystem::from_roots(name, table_roots(name, reading)?))
}

/// The root system of an exceptional algebra, exactly as tabulated.
pub fn generate_roots(name: AlgebraName) -> Result<RootSystem, RootError> {
    static CACHE: [OnceLock<Result<RootSystem, RootError>>; 5] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let slot = AlgebraName::EXCEPTIONAL
        .iter()
        .position(|n| *n == name)
        .ok_or(RootError::UnsupportedAlgebra(name))?;
    CACHE[slot].get_or_init(|| build(name)).clone()
}

/// One failed root-system axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootViolation {
    ZeroVector,
    Duplicate(RootVector),
    NotClosedUnderNegation(RootVector),
    NonIntegralCartan { alpha: RootVector, beta: RootVector, value: FieldScalar },
    ReflectionOutside { alpha: RootVector, beta: RootVector, image: RootVector },
    ForbiddenMultiple { alpha: RootVector, beta: RootVector },
    NotReal(RootVector),
}

impl fmt::Display for RootViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootViolation::ZeroVector => write!(f, "zero vector in the root set"),
            RootViolation::Duplicate(r) => write!(f, "duplicate root {r}"),
            RootViolation::NotClosedUnderNegation(r) => write!(f, "not closed under negation: {r}"),
            RootViolation::NonIntegralCartan { alpha, beta, value } => {
                write!(f, "2(a,b)/(a,a) = {value} is not an integer for a = {alpha}, b = {beta}")
            }
            RootViolation::ReflectionOutside { alpha, beta, image } => {
                write!(f, "reflection of {beta} in {alpha} gives {image}, not a root")
            }
            RootViolation::ForbiddenMultiple { alpha, beta } => {
                write!(f, "{beta} is a multiple of {alpha} other than ±1")
            }
            RootViolation::NotReal(r) => write!(f, "root {r} has non-real coordinates"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub pairs_checked: usize,
    pub violations: Vec<RootViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks closure under reflections, integrality of Cartan numbers and the
/// absence of multiples other than `±α`, listing every violation.
pub fn validate_root_system(rs: &RootSystem) -> ValidationReport {
    let mut report = ValidationReport::default();
    let set: HashSet<&RootVector> = rs.roots.iter().collect();
    let mut seen = HashSet::new();
    for r in &rs.roots {
        if r.is_zero() {
            report.violations.push(RootViolation::ZeroVector);
        }
        if !r.is_real() {
            report.violations.push(RootViolation::NotReal(r.clone()));
        }
        if !seen.insert(r) {
            report.violations.push(RootViolation::Duplicate(r.clone()));
        }
        if !set.contains(&-r) {
            report.violations.push(RootViolation::NotClosedUnderNegation(r.clone()));
        }
    }
    if !report.violations.is_empty() {
        return report;
    }
    let norms: Vec<FieldScalar> = rs.roots.iter().map(RootVector::norm2).collect();
    let inv_norms: Vec<FieldScalar> = norms.iter().map(|n| n.inv().expect("nonzero root")).collect();
    for (a, alpha) in rs.roots.iter().enumerate() {
        for (b, beta) in rs.roots.iter().enumerate() {
            report.pairs_checked += 1;
            let ip = inner(alpha, beta);
            if ip.is_zero() {
                continue;
            }
            if a != b && &ip * &ip == &norms[a] * &norms[b] && beta != &-alpha {
                report
                    .violations
                    .push(RootViolation::ForbiddenMultiple { alpha: alpha.clone(), beta: beta.clone() });
                continue;
            }
            let value = (&ip * &inv_norms[a]).scale(&Rational::int(2));
            let Some(c) = value.to_rational().filter(Rational::is_integer) else {
                report.violations.push(RootViolation::NonIntegralCartan {
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                    value,
                });
                continue;
            };
            let image = beta - &alpha.scale_rational(&c);
            if !set.contains(&image) {
                report.violations.push(RootViolation::ReflectionOutside {
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                    image,
                });
            }
        }
    }
    report
}

/// The generic functional `(8^7, 8^6, …, 1)` used to split roots into
/// positive and negative ones.
pub fn positivity_functional(v: &RootVector) -> FieldScalar {
    let mut acc = FieldScalar::zero();
    for (k, c) in v.0.iter().enumerate() {
        if !c.is_zero() {
            acc += &c.scale(&Rational::int(8i64.pow(7 - k as u32)));
        }
    }
    acc
}

/// Cartan matrix `a_ij = 2(α_i, α_j)/(α_j, α_j)` of a simple-root base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    /// Simple roots, sorted by decreasing value of the positivity functional.
    pub simple_roots: Vec<RootVector>,
    pub entries: Vec<Vec<i64>>,
    /// Squared norms of the simple roots.
    pub norms: Vec<FieldScalar>,
}

/// Simple roots and Cartan matrix of a valid root system.
///
/// A root is positive when the functional `(8^7, …, 1)` is positive on it and
/// simple when it is positive and not a sum of two positive roots. Simple
/// roots are ordered by decreasing functional value.
pub fn cartan_integers(rs: &RootSystem) -> Result<CartanMatrix, RootError> {
    let report = validate_root_system(rs);
    if let Some(first) = report.violations.first() {
        return Err(RootError::Invalid { name: rs.name.to_string(), first: first.to_string() });
    }
    let mut positive = Vec::new();
    for r in &rs.roots {
        let f = positivity_functional(r);
        match f.signum().expect("real root") {
            Ordering::Greater => positive.push((f, r.clone())),
            Ordering::Less => {}
            Ordering::Equal => return Err(RootError::NonGenericFunctional(r.clone())),
        }
    }
    let pos_set: HashSet<&RootVector> = positive.iter().map(|(_, r)| r).collect();
    let mut simple: Vec<(FieldScalar, RootVector)> = positive
        .iter()
        .filter(|(_, r)| !positive.iter().any(|(_, p)| pos_set.contains(&(r - p))))
        .cloned()
        .collect();
    simple.sort_by(|a, b| b.0.cmp_real(&a.0).expect("real functional values"));
    if simple.len() != rs.rank {
        return Err(RootError::SimpleRootCount { found: simple.len(), rank: rs.rank });
    }
    let simple_roots: Vec<RootVector> = simple.into_iter().map(|(_, r)| r).collect();
    let norms: Vec<FieldScalar> = simple_roots.iter().map(RootVector::norm2).collect();
    let entries = simple_roots
        .iter()
        .map(|ai| {
            simple_roots
                .iter()
                .zip(&norms)
                .map(|(aj, nj)| {
                    let v = (&inner(ai, aj) / nj).scale(&Rational::int(2));
                    let q = v.to_rational().expect("validated system has integral Cartan numbers");
                    q.as_small().expect("small Cartan entry").0
                })
                .collect()
        })
        .collect();
    Ok(CartanMatrix { simple_roots, entries, norms })
}

/// A simple component of a Dynkin diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleType::A(n) => write!(f, "A{n}"),
            SimpleType::B(n) => write!(f, "B{n}"),
            SimpleType::C(n) => write!(f, "C{n}"),
            SimpleType::D(n) => write!(f, "D{n}"),
            SimpleType::E(n) => write!(f, "E{n}"),
            SimpleType::F4 => write!(f, "F4"),
            SimpleType::G2 => write!(f, "G2"),
        }
    }
}

/// The type of a semisimple root system as a sorted list of simple components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DynkinType(pub Vec<SimpleType>);

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("+"))
    }
}

/// Reads off the Dynkin type of a Cartan matrix. Returns `None` for a matrix
/// that is not of finite type.
pub fn classify(cm: &CartanMatrix) -> Option<DynkinType> {
    let n = cm.entries.len();
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let u = comp[k];
            for v in 0..n {
                if !seen[v] && cm.entries[u][v] != 0 {
                    seen[v] = true;
                    comp.push(v);
                }
            }
            k += 1;
        }
        parts.push(classify_component(cm, &comp)?);
    }
    parts.sort();
    Some(DynkinType(parts))
}

fn classify_component(cm: &CartanMatrix, nodes: &[usize]) -> Option<SimpleType> {
    let n = nodes.len();
    let mut edges = Vec::new();
    let mut degree: HashMap<usize, usize> = nodes.iter().map(|&u| (u, 0)).collect();
    for (a, &u) in nodes.iter().enumerate() {
        for &v in &nodes[a + 1..] {
            let m = cm.entries[u][v] * cm.entries[v][u];
            if m != 0 {
                edges.push((u, v, m));
                *degree.get_mut(&u)? += 1;
                *degree.get_mut(&v)? += 1;
            }
        }
    }
    if edges.len() != n - 1 {
        return None;
    }
    let multiple: Vec<&(usize, usize, i64)> = edges.iter().filter(|e| e.2 > 1).collect();
    match multiple.as_slice() {
        [] => {
            let branch: Vec<usize> = nodes.iter().copied().filter(|u| degree[u] >= 3).collect();
            match branch.as_slice() {
                [] => Some(SimpleType::A(n)),
                [b] if degree[b] == 3 => {
                    let mut arms: Vec<usize> = nodes
                        .iter()
                        .copied()
                        .filter(|&v| v != *b && cm.entries[*b][v] != 0)
                        .map(|first| arm_length(cm, nodes, *b, first))
                        .collect();
                    arms.sort_unstable();
                    match arms.as_slice() {
                        [1, 1, _] => Some(SimpleType::D(n)),
                        [1, 2, 2] => Some(SimpleType::E(6)),
                        [1, 2, 3] => Some(SimpleType::E(7)),
                        [1, 2, 4] => Some(SimpleType::E(8)),
                        _ => None,
                    }
                }
                _ => None,
            }
        }
        [&(_, _, 3)] if n == 2 => Some(SimpleType::G2),
        [&(u, v, 2)] => {
            if nodes.iter().any(|w| degree[w] >= 3) {
                return None;
            }
            if n == 2 {
                return Some(SimpleType::B(2));
            }
            let short_is_v = cm.norms[v].cmp_real(&cm.norms[u]).ok()? == Ordering::Less;
            let (short, long) = if short_is_v { (v, u) } else { (u, v) };
            if degree[&short] == 1 {
                Some(SimpleType::B(n))
            } else if degree[&long] == 1 {
                Some(SimpleType::C(n))
            } else if n == 4 {
                Some(SimpleType::F4)
            } else {
                None
            }
        }
        _ => None,
    }
}

fn arm_length(cm: &CartanMatrix, nodes: &[usize], from: usize, first: usize) -> usize {
    let mut prev = from;
    let mut cur = first;
    let mut len = 1;
    loop {
        let next: Vec<usize> =
            nodes.iter().copied().filter(|&w| w != prev && w != cur && cm.entries[cur][w] != 0).collect();
        match next.as_slice() {
            [w] => {
                prev = cur;
                cur = *w;
                len += 1;
            }
            _ => return len,
        }
    }
}

/// Validates, extracts simple roots and classifies in one step.
pub fn dynkin_type(rs: &RootSystem) -> Result<DynkinType, RootError> {
    let cm = cartan_integers(rs)?;
    classify(&cm).ok_or_else(|| RootError::Invalid {
        name: rs.name.to_string(),
        first: "Cartan matrix is not of finite type".to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_expressions() {
        let v = RootVector::parse_expr("1/2(-k1+k2+k3+k4-k5-r3k6)").unwrap();
        assert_eq!(v.coord(1), &FieldScalar::from(Rational::frac(-1, 2)));
        assert_eq!(v.coord(6), &FieldScalar::surd(Rational::frac(-1, 2), Surd::R3));
        let w = RootVector::parse_expr("r2/2(k2+k3)").unwrap();
        assert_eq!(w.norm2(), FieldScalar::one());
        let u = RootVector::parse_expr("-1/3(2k1-k2-k3)").unwrap();
        assert_eq!(u.coord(1), &FieldScalar::from(Rational::frac(-2, 3)));
        assert_eq!(RootVector::parse_expr("k4-k5").unwrap(), &RootVector::k(4) - &RootVector::k(5));
        assert!(RootVector::parse_expr("k9").is_err());
    }

    #[test]
    fn inner_products() {
        let a = &RootVector::k(1) - &RootVector::k(2);
        assert_eq!(inner(&a, &a), FieldScalar::from(2));
        assert!(inner(&RootVector::k(4), &a).is_zero());
        let h = RootVector::parse_expr("1/2(k1+k2+k3+k4+k5+k6+k7+k8)").unwrap();
        assert_eq!(h.norm2(), FieldScalar::from(2));
    }

    #[test]
    fn single_vector_is_not_closed() {
        let rs = RootSystem::from_roots(AlgebraName::A1, vec![RootVector::k(1)]);
        let report = validate_root_system(&rs);
        assert_eq!(report.violations, vec![RootViolation::NotClosedUnderNegation(RootVector::k(1))]);
    }

    #[test]
    fn a2_subsystem_type() {
        let mut roots = Vec::new();
        for (i, j) in [(1, 2), (2, 3), (1, 3)] {
            let v = &RootVector::k(i) - &RootVector::k(j);
            roots.push(-&v);
            roots.push(v);
        }
        let rs = RootSystem::from_roots(AlgebraName::A2, roots);
        assert_eq!(dynkin_type(&rs).unwrap().to_string(), "A2");
    }
}
