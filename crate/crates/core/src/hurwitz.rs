//! The Hurwitz algebras R, C, Q and 𝔠 of dimension 1, 2, 4 and 8.
//!
//! All four share one multiplication table on the basis `1, u1, …, u7`:
//! C is `span{1, u1}` and Q is `span{1, u1, u2, u3}`. The octonion table is
//! the Cayley–Dickson double of Q with `u7 = ℓ`, `u4 = u1 ℓ`, `u5 = u2 ℓ`,
//! `u6 = u3 ℓ` and `(a + bℓ)(c + dℓ) = (ac − d̄b) + (da + bc̄)ℓ`. With this
//! table the Zorn product below reproduces the octonion product exactly.
//!
//! Octonionic conjugation [`HurwitzElement::conj_oct`] negates the unit
//! coefficients only; it never conjugates the complex scalars.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use thiserror::Error;

use crate::exactnum::{linalg, FieldScalar, Rational, Scalar};
use crate::lie::{independent_matrices, LieAlgebra, LieError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HurwitzError {
    #[error("Hurwitz algebras have dimension 1, 2, 4 or 8, not {0}")]
    UnsupportedDimension(usize),
    #[error("derivations D_(a,b) are defined here for dimension 4 or 8, not {0}")]
    NoDerivations(usize),
    #[error("operands have dimensions {0} and {1}")]
    DimensionMismatch(usize, usize),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// `OCTONION_TABLE[i][j] = (s, k)` means `e_i e_j = s e_k` with `e_0 = 1`.
pub const OCTONION_TABLE: [[(i8, u8); 8]; 8] = [
    [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2), (-1, 7), (-1, 6), (1, 5), (1, 4)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1), (1, 6), (-1, 7), (-1, 4), (1, 5)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0), (-1, 5), (1, 4), (-1, 7), (1, 6)],
    [(1, 4), (1, 7), (-1, 6), (1, 5), (-1, 0), (-1, 3), (1, 2), (-1, 1)],
    [(1, 5), (1, 6), (1, 7), (-1, 4), (1, 3), (-1, 0), (-1, 1), (-1, 2)],
    [(1, 6), (-1, 5), (1, 4), (1, 7), (-1, 2), (1, 1), (-1, 0), (-1, 3)],
    [(1, 7), (-1, 4), (-1, 5), (-1, 6), (1, 1), (1, 2), (1, 3), (-1, 0)],
];

fn check_dim(n: usize) -> Result<(), HurwitzError> {
    if matches!(n, 1 | 2 | 4 | 8) {
        Ok(())
    } else {
        Err(HurwitzError::UnsupportedDimension(n))
    }
}

/// An element of the Hurwitz algebra of dimension `coords.len()`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HurwitzElement<S> {
    coords: Vec<S>,
}

impl<S: Scalar> HurwitzElement<S> {
    pub fn new(coords: Vec<S>) -> Result<Self, HurwitzError> {
        check_dim(coords.len())?;
        Ok(HurwitzElement { coords })
    }

    pub fn zero(dim: usize) -> Self {
        HurwitzElement { coords: vec![S::zero(); dim] }
    }

    pub fn one(dim: usize) -> Self {
        Self::unit(dim, 0)
    }

    /// The basis element `u_k` (`k = 0` is the identity).
    pub fn unit(dim: usize, k: usize) -> Self {
        let mut x = Self::zero(dim);
        x.coords[k] = S::one();
        x
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<S> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(S::is_zero)
    }

    /// The coefficient of the identity.
    pub fn real(&self) -> &S {
        &self.coords[0]
    }

    pub fn scale(&self, c: &S) -> Self {
        HurwitzElement { coords: self.coords.iter().map(|x| x.mul_ref(c)).collect() }
    }

    fn same_dim(&self, other: &Self) -> Result<(), HurwitzError> {
        if self.dim() == other.dim() {
            Ok(())
        } else {
            Err(HurwitzError::DimensionMismatch(self.dim(), other.dim()))
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, HurwitzError> {
        self.same_dim(other)?;
        let n = self.dim();
        let mut out = vec![S::zero(); n];
        for (i, x) in self.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coords.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let (s, k) = OCTONION_TABLE[i][j];
                let t = x.mul_ref(y);
                if s > 0 {
                    out[k as usize] += &t;
                } else {
                    out[k as usize] -= &t;
                }
            }
        }
        Ok(HurwitzElement { coords: out })
    }

    /// Octonionic conjugation: negates the imaginary-unit coefficients.
    pub fn conj_oct(&self) -> Self {
        let mut c: Vec<S> = self.coords.iter().map(|x| -x.clone()).collect();
        c[0] = self.coords[0].clone();
        HurwitzElement { coords: c }
    }

    /// Complex conjugation of every coefficient, leaving the units alone.
    pub fn conj_scalars(&self) -> Self {
        HurwitzElement { coords: self.coords.iter().map(S::conj).collect() }
    }

    /// `n(x) = x x̄`.
    pub fn norm(&self) -> S {
        self.mul(&self.conj_oct()).expect("same dimension").coords[0].clone()
    }

    /// `t(x) = x + x̄`.
    pub fn trace(&self) -> S {
        self.coords[0].clone() + &self.coords[0]
    }

    /// `xy − yx`.
    pub fn commutator(&self, other: &Self) -> Result<Self, HurwitzError> {
        Ok(&self.mul(other)? - &other.mul(self)?)
    }

    /// `(x, y, z) = (xy)z − x(yz)`.
    pub fn associator(&self, y: &Self, z: &Self) -> Result<Self, HurwitzError> {
        let left = self.mul(y)?.mul(z)?;
        let right = self.mul(&y.mul(z)?)?;
        Ok(&left - &right)
    }

    /// Drops the identity component.
    pub fn imaginary_part(&self) -> Self {
        let mut c = self.coords.clone();
        c[0] = S::zero();
        HurwitzElement { coords: c }
    }
}

impl<S: Scalar> Add for &HurwitzElement<S> {
    type Output = HurwitzElement<S>;
    fn add(self, rhs: Self) -> HurwitzElement<S> {
        assert_eq!(self.dim(), rhs.dim());
        HurwitzElement { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a.clone() + b).collect() }
    }
}

impl<S: Scalar> Sub for &HurwitzElement<S> {
    type Output = HurwitzElement<S>;
    fn sub(self, rhs: Self) -> HurwitzElement<S> {
        assert_eq!(self.dim(), rhs.dim());
        HurwitzElement { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a.clone() - b).collect() }
    }
}

impl<S: Scalar> Neg for &HurwitzElement<S> {
    type Output = HurwitzElement<S>;
    fn neg(self) -> HurwitzElement<S> {
        HurwitzElement { coords: self.coords.iter().map(|a| -a.clone()).collect() }
    }
}

impl<S: Scalar> fmt::Display for HurwitzElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            if k == 0 {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})u{k}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for HurwitzElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sign in the Zorn pairing `A^± · B^∓ = DOT_SIGN · Σ_k α_k^± β_k^∓`.
///
/// The negative sign is the one for which the Zorn product agrees with the
/// octonion table on all 64 basis pairs; the positive sign breaks the
/// composition law.
pub const ZORN_DOT_SIGN: i64 = -1;

type Oct = HurwitzElement<FieldScalar>;

fn fs(n: i64, d: i64) -> FieldScalar {
    FieldScalar::from(Rational::frac(n, d))
}

/// `ρ± = ½(1 ± i u7)`.
pub fn rho(plus: bool) -> Oct {
    let mut c = vec![FieldScalar::zero(); 8];
    c[0] = fs(1, 2);
    let s = if plus { 1 } else { -1 };
    c[7] = &FieldScalar::i() * &fs(s, 2);
    HurwitzElement { coords: c }
}

/// `ε_k^± = ρ^± u_k` for `k = 1, 2, 3`.
pub fn epsilon(plus: bool, k: usize) -> Oct {
    assert!((1..=3).contains(&k));
    rho(plus).mul(&HurwitzElement::unit(8, k)).expect("octonions")
}

/// An octonion in Zorn form `[[α⁺, A⁺], [A⁻, α⁻]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZornMatrix {
    pub alpha_plus: FieldScalar,
    pub alpha_minus: FieldScalar,
    pub a_plus: [FieldScalar; 3],
    pub a_minus: [FieldScalar; 3],
}

fn cross(a: &[FieldScalar; 3], b: &[FieldScalar; 3]) -> [FieldScalar; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn zorn_dot(a: &[FieldScalar; 3], b: &[FieldScalar; 3]) -> FieldScalar {
    let mut acc = FieldScalar::zero();
    for k in 0..3 {
        acc += &(&a[k] * &b[k]);
    }
    acc.scale(&Rational::int(ZORN_DOT_SIGN))
}

impl ZornMatrix {
    /// Coordinates in the basis `ρ⁺, ρ⁻, ε⁺, ε⁻`.
    ///
    /// Using `u7 u_k = −u_{k+3}` one gets `ε_k^± = ½(u_k ∓ i u_{k+3})`, which
    /// inverts to `α^± = a_0 ∓ i a_7` and `α_k^± = a_k ± i a_{k+3}`.
    pub fn from_octonion(a: &Oct) -> Result<Self, HurwitzError> {
        if a.dim() != 8 {
            return Err(HurwitzError::DimensionMismatch(a.dim(), 8));
        }
        let c = a.coords();
        let i = FieldScalar::i();
        Ok(ZornMatrix {
            alpha_plus: &c[0] - &(&i * &c[7]),
            alpha_minus: &c[0] + &(&i * &c[7]),
            a_plus: std::array::from_fn(|k| &c[k + 1] + &(&i * &c[k + 4])),
            a_minus: std::array::from_fn(|k| &c[k + 1] - &(&i * &c[k + 4])),
        })
    }

    /// `α⁺ρ⁺ + α⁻ρ⁻ + Σ_k (α_k⁺ ε_k⁺ + α_k⁻ ε_k⁻)`.
    pub fn to_octonion(&self) -> Oct {
        let mut acc = rho(true).scale(&self.alpha_plus);
        acc = &acc + &rho(false).scale(&self.alpha_minus);
        for k in 0..3 {
            acc = &acc + &epsilon(true, k + 1).scale(&self.a_plus[k]);
            acc = &acc + &epsilon(false, k + 1).scale(&self.a_minus[k]);
        }
        acc
    }

    /// The Zorn product.
    pub fn mul(&self, b: &ZornMatrix) -> ZornMatrix {
        let a = self;
        let vec_comb = |s: &FieldScalar, x: &[FieldScalar; 3], t: &FieldScalar, y: &[FieldScalar; 3], z: [FieldScalar; 3]| {
            let z: [FieldScalar; 3] = std::array::from_fn(|k| &(&(s * &x[k]) + &(t * &y[k])) + &z[k]);
            z
        };
        ZornMatrix {
            alpha_plus: &(&a.alpha_plus * &b.alpha_plus) + &zorn_dot(&a.a_plus, &b.a_minus),
            alpha_minus: &(&a.alpha_minus * &b.alpha_minus) + &zorn_dot(&a.a_minus, &b.a_plus),
            a_plus: vec_comb(&a.alpha_plus, &b.a_plus, &b.alpha_minus, &a.a_plus, cross(&a.a_minus, &b.a_minus)),
            a_minus: vec_comb(&a.alpha_minus, &b.a_minus, &b.alpha_plus, &a.a_minus, cross(&a.a_plus, &b.a_plus)),
        }
    }
}

impl fmt::Display for ZornMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = |a: &[FieldScalar; 3]| format!("({}, {}, {})", a[0], a[1], a[2]);
        writeln!(f, "[ {} | {} ]", self.alpha_plus, v(&self.a_plus))?;
        write!(f, "[ {} | {} ]", v(&self.a_minus), self.alpha_minus)
    }
}

/// A linear operator on Hurwitz coordinates; `matrix[r][c]` is the `e_r`
/// coefficient of the image of `e_c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationOp<S> {
    pub matrix: Vec<Vec<S>>,
}

impl<S: Scalar> DerivationOp<S> {
    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn apply(&self, x: &HurwitzElement<S>) -> HurwitzElement<S> {
        HurwitzElement { coords: linalg::mat_vec(&self.matrix, x.coords()) }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().all(|r| linalg::is_zero_vec(r))
    }

    /// Ordered basis pairs `(i, j)` where `D(e_i e_j) ≠ D(e_i) e_j + e_i D(e_j)`.
    pub fn leibniz_failures(&self) -> Vec<(usize, usize)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let (ei, ej) = (HurwitzElement::unit(n, i), HurwitzElement::unit(n, j));
                let lhs = self.apply(&ei.mul(&ej).expect("same dim"));
                let rhs = &self.apply(&ei).mul(&ej).expect("same dim") + &ei.mul(&self.apply(&ej)).expect("same dim");
                if lhs != rhs {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// `D_{a,b} c = ⅓[[a,b],c] − (a,b,c)`.
pub fn derivation<S: Scalar>(a: &HurwitzElement<S>, b: &HurwitzElement<S>) -> Result<DerivationOp<S>, HurwitzError> {
    a.same_dim(b)?;
    let n = a.dim();
    if n != 4 && n != 8 {
        return Err(HurwitzError::NoDerivations(n));
    }
    let ab = a.commutator(b)?;
    let third = S::from_rational(Rational::frac(1, 3));
    let mut matrix = vec![vec![S::zero(); n]; n];
    for c in 0..n {
        let e = HurwitzElement::unit(n, c);
        let img = &ab.commutator(&e)?.scale(&third) - &a.associator(b, &e)?;
        for (r, v) in img.coords.into_iter().enumerate() {
            matrix[r][c] = v;
        }
    }
    Ok(DerivationOp { matrix })
}

/// `Der(Q)` or `Der(𝔠)`: a basis of derivations chosen greedily among the
/// `D_{u_i, u_j}`, `i < j`, together with the Lie algebra they span.
#[derive(Debug, Clone)]
pub struct DerivationAlgebra {
    pub generators: Vec<(usize, usize)>,
    pub ops: Vec<DerivationOp<Rational>>,
    pub lie: LieAlgebra<Rational>,
}

pub fn derivation_algebra(dim: usize) -> Result<DerivationAlgebra, HurwitzError> {
    if dim != 4 && dim != 8 {
        return Err(HurwitzError::NoDerivations(dim));
    }
    let mut candidates = Vec::new();
    for i in 1..dim {
        for j in (i + 1)..dim {
            let d = derivation::<Rational>(&HurwitzElement::unit(dim, i), &HurwitzElement::unit(dim, j))?;
            candidates.push(((i, j), d.matrix));
        }
    }
    let mats: Vec<Vec<Vec<Rational>>> = candidates.iter().map(|(_, m)| m.clone()).collect();
    let chosen = independent_matrices(mats);
    let generators: Vec<(usize, usize)> = chosen
        .iter()
        .map(|m| candidates.iter().find(|(_, c)| c == m).expect("chosen from candidates").0)
        .collect();
    let lie = LieAlgebra::from_matrices(if dim == 4 { "Der(Q)" } else { "Der(O)" }, &chosen)?
        .with_labels(generators.iter().map(|(i, j)| format!("D(u{i},u{j})")).collect());
    let ops = chosen.into_iter().map(|matrix| DerivationOp { matrix }).collect();
    Ok(DerivationAlgebra { generators, ops, lie })
}

/// Rank of the span of all `D_{u_i,u_j}` as flattened matrices.
pub fn derivation_span_rank(dim: usize) -> Result<usize, HurwitzError> {
    let mut rows = Vec::new();
    for i in 1..dim {
        for j in (i + 1)..dim {
            let d = derivation::<Rational>(&HurwitzElement::unit(dim, i), &HurwitzElement::unit(dim, j))?;
            rows.push(d.matrix.into_iter().flatten().collect::<Vec<_>>());
        }
    }
    Ok(linalg::rank(&rows))
}

/// Outcome of one family of octonion checks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckCount {
    pub checked: usize,
    pub failures: usize,
}

impl CheckCount {
    fn record(&mut self, ok: bool) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
        }
    }

    pub fn is_ok(&self) -> bool {
        self.checked > 0 && self.failures == 0
    }
}

impl fmt::Display for CheckCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} checked, {} failures", self.checked, self.failures)
    }
}

#[derive(Debug, Clone)]
pub struct OctonionReport {
    /// Zorn product against the table on ordered basis pairs.
    pub zorn_vs_table: CheckCount,
    pub zorn_failures: Vec<(usize, usize)>,
    pub composition: CheckCount,
    pub alternativity: CheckCount,
    /// Named identities among `ρ±` and `ε_k^±`.
    pub identities: Vec<(String, bool)>,
}

impl OctonionReport {
    pub fn is_ok(&self) -> bool {
        self.zorn_vs_table.is_ok()
            && self.composition.is_ok()
            && self.alternativity.is_ok()
            && self.identities.iter().all(|(_, ok)| *ok)
    }
}

/// Octonion with small Gaussian-integer coordinates.
pub fn random_octonion(rng: &mut impl rand::Rng) -> Oct {
    let coords = (0..8)
        .map(|_| {
            let re = FieldScalar::from(rng.gen_range(-4i64..=4));
            let im = FieldScalar::from(rng.gen_range(-4i64..=4));
            &re + &(&FieldScalar::i() * &im)
        })
        .collect();
    HurwitzElement { coords }
}

fn zorn_product(a: &Oct, b: &Oct) -> Result<Oct, HurwitzError> {
    Ok(ZornMatrix::from_octonion(a)?.mul(&ZornMatrix::from_octonion(b)?).to_octonion())
}

/// Zorn against table on all 64 basis pairs, then the composition law and
/// alternativity on `samples` seeded random octonions each, then the
/// idempotent identities.
pub fn octonion_suite(samples: usize, seed: u64) -> Result<OctonionReport, HurwitzError> {
    use rand::SeedableRng;
    let mut zorn_vs_table = CheckCount::default();
    let mut zorn_failures = Vec::new();
    for i in 0..8 {
        for j in 0..8 {
            let (a, b) = (Oct::unit(8, i), Oct::unit(8, j));
            let ok = zorn_product(&a, &b)? == a.mul(&b)?;
            zorn_vs_table.record(ok);
            if !ok {
                zorn_failures.push((i, j));
            }
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut composition = CheckCount::default();
    let mut alternativity = CheckCount::default();
    for _ in 0..samples {
        let (x, y) = (random_octonion(&mut rng), random_octonion(&mut rng));
        composition.record(x.mul(&y)?.norm() == &x.norm() * &y.norm());
        alternativity.record(x.associator(&x, &y)?.is_zero() && y.associator(&x, &x)?.is_zero());
    }
    let (p, m) = (rho(true), rho(false));
    let one = Oct::one(8);
    let zero = Oct::zero(8);
    let mut identities = vec![
        ("ρ+ρ+ = ρ+".to_string(), p.mul(&p)? == p),
        ("ρ-ρ- = ρ-".to_string(), m.mul(&m)? == m),
        ("ρ+ρ- = 0".to_string(), p.mul(&m)? == zero),
        ("ρ-ρ+ = 0".to_string(), m.mul(&p)? == zero),
        ("ρ+ + ρ- = 1".to_string(), &p + &m == one),
        ("conj ρ+ = ρ-".to_string(), p.conj_oct() == m),
    ];
    for k in 1..=3 {
        let (ep, em) = (epsilon(true, k), epsilon(false, k));
        identities.push((format!("ρ+ε{k}+ = ε{k}+"), p.mul(&ep)? == ep));
        identities.push((format!("ε{k}+ρ- = ε{k}+"), ep.mul(&m)? == ep));
        identities.push((format!("ρ-ε{k}+ = 0"), m.mul(&ep)? == zero));
        identities.push((format!("ε{k}+ε{k}+ = 0"), ep.mul(&ep)? == zero));
        identities.push((format!("ε{k}-ε{k}- = 0"), em.mul(&em)? == zero));
    }
    Ok(OctonionReport { zorn_vs_table, zorn_failures, composition, alternativity, identities })
}

#[cfg(test)]
mod tests {
    use super::*;

    type R = HurwitzElement<Rational>;

    #[test]
    fn units_square_to_minus_one() {
        for k in 1..8 {
            let u = R::unit(8, k);
            assert_eq!(u.mul(&u).unwrap(), R::one(8).scale(&Rational::int(-1)));
        }
    }

    #[test]
    fn quaternion_subalgebra_closed() {
        let q = |k| R::unit(4, k);
        assert_eq!(q(1).mul(&q(2)).unwrap(), q(3));
        assert_eq!(q(2).mul(&q(3)).unwrap(), q(1));
        assert_eq!(q(3).mul(&q(1)).unwrap(), q(2));
    }

    #[test]
    fn idempotents() {
        let (p, m) = (rho(true), rho(false));
        assert_eq!(p.mul(&p).unwrap(), p);
        assert!(p.mul(&m).unwrap().is_zero());
        assert_eq!(p.conj_oct(), m);
        for k in 1..=3 {
            assert!(epsilon(true, k).trace().is_zero());
        }
    }

    #[test]
    fn zorn_cross_term() {
        let mut a = ZornMatrix::from_octonion(&Oct::zero(8)).unwrap();
        let mut b = a.clone();
        a.a_minus[0] = FieldScalar::one();
        b.a_minus[1] = FieldScalar::one();
        let c = a.mul(&b);
        assert_eq!(c.a_plus, [FieldScalar::zero(), FieldScalar::zero(), FieldScalar::one()]);
    }

    #[test]
    fn non_associative() {
        let u = |k| R::unit(8, k);
        assert!(!u(1).associator(&u(2), &u(4)).unwrap().is_zero());
    }

    #[test]
    fn derivation_dims() {
        assert_eq!(derivation_span_rank(4).unwrap(), 3);
        assert_eq!(derivation_span_rank(8).unwrap(), 14);
        assert!(derivation::<Rational>(&R::unit(2, 1), &R::unit(2, 1)).is_err());
    }

    #[test]
    fn suite_passes() {
        let r = octonion_suite(20, 3).unwrap();
        assert_eq!(r.zorn_vs_table.checked, 64);
        assert!(r.is_ok(), "{r:?}");
    }
}
