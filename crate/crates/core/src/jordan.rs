//! Jordan algebras J3^n of hermitian 3×3 matrices over the Hurwitz algebras,
//! their quadratic maps, the Jordan pair axioms, and the TKK algebra.
//!
//! The product is normalized as `x ∘ y = ½(xy + yx)` so that the identity
//! matrix is the unit. A hermitian matrix is stored as
//!
//! ```text
//! [ α   a   b̄ ]
//! [ ā   β   c ]
//! [ b   c̄   γ ]
//! ```
//!
//! with coordinates ordered `α, β, γ, a, b, c` (each Hurwitz entry expanded on
//! `1, u1, …`). In the TKK algebra `J ⊕ str(J) ⊕ J̄` the brackets are
//! `[x, ȳ] = V_{x,y}`, `[T, x] = T x` and `[T, ȳ] = −T* y` with `L_a* = L_a`
//! and `D* = −D`. With these conventions the pair map `[[x, ȳ], z]` equals
//! `V_{x,y} z` from the quadratic construction, so the normalization constant
//! between the two is 1.

use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exactnum::{linalg, Rational, Scalar};
use crate::hurwitz::{HurwitzElement, HurwitzError};
use crate::lie::{independent_matrices, Block, LieAlgebra, LieError, SpanMatrices, SparseVec};

pub type Mat<S> = Vec<Vec<S>>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JordanError {
    #[error("J3^n is defined for n in {{1, 2, 4, 8}}, not {0}")]
    UnsupportedDimension(usize),
    #[error("matrix is not hermitian: {0}")]
    NotHermitian(String),
    #[error("operands come from different algebras (n = {0} and n = {1})")]
    MixedAlgebras(usize, usize),
    #[error(transparent)]
    Hurwitz(#[from] HurwitzError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

fn check_n(n: usize) -> Result<(), JordanError> {
    if matches!(n, 1 | 2 | 4 | 8) {
        Ok(())
    } else {
        Err(JordanError::UnsupportedDimension(n))
    }
}

/// An element of J3^n in matrix form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanElement<S: Scalar> {
    pub diag: [S; 3],
    /// The entries `a`, `b`, `c`.
    pub off: [HurwitzElement<S>; 3],
}

impl<S: Scalar> JordanElement<S> {
    pub fn n(&self) -> usize {
        self.off[0].dim()
    }

    pub fn dim(&self) -> usize {
        3 + 3 * self.n()
    }

    pub fn from_coords(n: usize, c: &[S]) -> Result<Self, JordanError> {
        check_n(n)?;
        assert_eq!(c.len(), 3 + 3 * n, "coordinate vector length");
        let part = |k: usize| HurwitzElement::new(c[3 + k * n..3 + (k + 1) * n].to_vec());
        Ok(JordanElement { diag: [c[0].clone(), c[1].clone(), c[2].clone()], off: [part(0)?, part(1)?, part(2)?] })
    }

    pub fn to_coords(&self) -> Vec<S> {
        let mut v: Vec<S> = self.diag.to_vec();
        for h in &self.off {
            v.extend(h.coords().iter().cloned());
        }
        v
    }

    pub fn unit(n: usize) -> Result<Self, JordanError> {
        let mut c = vec![S::zero(); 3 + 3 * n];
        for v in &mut c[..3] {
            *v = S::one();
        }
        Self::from_coords(n, &c)
    }

    /// Full matrix with octonionic conjugates filled in.
    pub fn to_matrix(&self) -> [[HurwitzElement<S>; 3]; 3] {
        let n = self.n();
        let d = |s: &S| HurwitzElement::one(n).scale(s);
        let [a, b, c] = &self.off;
        [
            [d(&self.diag[0]), a.clone(), b.conj_oct()],
            [a.conj_oct(), d(&self.diag[1]), c.clone()],
            [b.clone(), c.conj_oct(), d(&self.diag[2])],
        ]
    }

    /// Reads a matrix back, asserting hermiticity.
    pub fn from_matrix(m: &[[HurwitzElement<S>; 3]; 3]) -> Result<Self, JordanError> {
        for (i, row) in m.iter().enumerate() {
            if !row[i].imaginary_part().is_zero() {
                return Err(JordanError::NotHermitian(format!("diagonal entry {i} is not a scalar")));
            }
        }
        for (i, j) in [(0, 1), (1, 2), (2, 0)] {
            if m[j][i] != m[i][j].conj_oct() {
                return Err(JordanError::NotHermitian(format!("entries ({i},{j}) and ({j},{i}) are not conjugate")));
            }
        }
        Ok(JordanElement {
            diag: [m[0][0].real().clone(), m[1][1].real().clone(), m[2][2].real().clone()],
            off: [m[0][1].clone(), m[2][0].clone(), m[1][2].clone()],
        })
    }

    pub fn trace(&self) -> S {
        self.diag[0].clone() + &self.diag[1] + &self.diag[2]
    }

    /// `x − (tr x / 3) · 1`.
    pub fn traceless(&self) -> Self {
        let t = self.trace().mul_ref(&S::from_rational(Rational::frac(1, 3)));
        let mut x = self.clone();
        for d in &mut x.diag {
            *d -= &t;
        }
        x
    }
}

fn mat_product<S: Scalar>(
    x: &[[HurwitzElement<S>; 3]; 3],
    y: &[[HurwitzElement<S>; 3]; 3],
) -> Result<[[HurwitzElement<S>; 3]; 3], JordanError> {
    let n = x[0][0].dim();
    let mut out: [[HurwitzElement<S>; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| HurwitzElement::zero(n)));
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                out[i][j] = &out[i][j] + &x[i][k].mul(&y[k][j])?;
            }
        }
    }
    Ok(out)
}

/// `x ∘ y = ½(xy + yx)` computed from the matrix products.
pub fn circ<S: Scalar>(x: &JordanElement<S>, y: &JordanElement<S>) -> Result<JordanElement<S>, JordanError> {
    if x.n() != y.n() {
        return Err(JordanError::MixedAlgebras(x.n(), y.n()));
    }
    let (mx, my) = (x.to_matrix(), y.to_matrix());
    let p = mat_product(&mx, &my)?;
    let q = mat_product(&my, &mx)?;
    let half = S::from_rational(Rational::frac(1, 2));
    let s: [[HurwitzElement<S>; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| (&p[i][j] + &q[i][j]).scale(&half)));
    JordanElement::from_matrix(&s)
}

/// J3^n with its structure constants, for fast coordinate arithmetic.
#[derive(Debug, Clone)]
pub struct JordanAlgebra<S> {
    n: usize,
    dim: usize,
    /// `table[i][j]` is `e_i ∘ e_j`.
    table: Vec<Vec<SparseVec<S>>>,
}

impl JordanAlgebra<Rational> {
    pub fn new(n: usize) -> Result<Self, JordanError> {
        check_n(n)?;
        let dim = 3 + 3 * n;
        let basis: Vec<JordanElement<Rational>> = (0..dim)
            .map(|k| {
                let mut c = vec![Rational::ZERO; dim];
                c[k] = Rational::ONE;
                JordanElement::from_coords(n, &c)
            })
            .collect::<Result<_, _>>()?;
        let mut table = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in i..dim {
                let p = circ(&basis[i], &basis[j])?.to_coords();
                let sp: SparseVec<Rational> = p.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
                table[j][i] = sp.clone();
                table[i][j] = sp;
            }
        }
        Ok(JordanAlgebra { n, dim, table })
    }

    /// The cached algebra J3^n.
    pub fn cached(n: usize) -> Result<Arc<Self>, JordanError> {
        static CACHE: [OnceLock<Arc<JordanAlgebra<Rational>>>; 4] =
            [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
        check_n(n)?;
        let slot = n.trailing_zeros() as usize;
        Ok(CACHE[slot].get_or_init(|| Arc::new(Self::new(n).expect("valid n"))).clone())
    }
}

impl<S: Scalar> JordanAlgebra<S> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> JordanAlgebra<T> {
        JordanAlgebra {
            n: self.n,
            dim: self.dim,
            table: self
                .table
                .iter()
                .map(|row| row.iter().map(|v| v.iter().map(|(k, c)| (*k, f(c))).collect()).collect())
                .collect(),
        }
    }

    pub fn unit(&self) -> Vec<S> {
        (0..self.dim).map(|k| if k < 3 { S::one() } else { S::zero() }).collect()
    }

    pub fn basis_vector(&self, k: usize) -> Vec<S> {
        let mut v = vec![S::zero(); self.dim];
        v[k] = S::one();
        v
    }

    pub fn mul(&self, x: &[S], y: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(); self.dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let f = xi.mul_ref(yj);
                for (k, c) in &self.table[i][j] {
                    out[*k] += &f.mul_ref(c);
                }
            }
        }
        out
    }

    pub fn trace(&self, x: &[S]) -> S {
        x[0].clone() + &x[1] + &x[2]
    }

    pub fn traceless(&self, x: &[S]) -> Vec<S> {
        let t = self.trace(x).mul_ref(&S::from_rational(Rational::frac(1, 3)));
        let mut v = x.to_vec();
        for d in &mut v[..3] {
            *d -= &t;
        }
        v
    }

    /// Basis of J0: `E11 − E22`, `E22 − E33`, then the off-diagonal units.
    pub fn traceless_basis(&self) -> Vec<Vec<S>> {
        let mut out = Vec::with_capacity(self.dim - 1);
        for (p, q) in [(0, 1), (1, 2)] {
            let mut v = vec![S::zero(); self.dim];
            v[p] = S::one();
            v[q] = -S::one();
            out.push(v);
        }
        for k in 3..self.dim {
            out.push(self.basis_vector(k));
        }
        out
    }

    /// Coordinates of a traceless element in [`Self::traceless_basis`].
    pub fn traceless_coords(&self, x: &[S]) -> Option<Vec<S>> {
        if !self.trace(x).is_zero() {
            return None;
        }
        let mut c = Vec::with_capacity(self.dim - 1);
        c.push(x[0].clone());
        c.push(x[0].clone() + &x[1]);
        c.extend(x[3..].iter().cloned());
        Some(c)
    }

    /// `L(x)` as a matrix: column `j` holds `x ∘ e_j`.
    pub fn l_op(&self, x: &[S]) -> Mat<S> {
        let mut m = vec![vec![S::zero(); self.dim]; self.dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for j in 0..self.dim {
                for (k, c) in &self.table[i][j] {
                    m[*k][j] += &xi.mul_ref(c);
                }
            }
        }
        m
    }

    /// `U_x = 2 L(x)² − L(x∘x)`.
    pub fn quadratic_u(&self, x: &[S]) -> Mat<S> {
        let l = self.l_op(x);
        let l2 = linalg::mat_mul(&l, &l);
        let lxx = self.l_op(&self.mul(x, x));
        let two = S::from_int(2);
        combine(&l2, &two, &lxx, &-S::one())
    }

    /// `V_{x,y} = 2(L(x∘y) + [L(x), L(y)])`, the operator `z ↦ (U_{x+z} − U_x − U_z) y`.
    pub fn linearized_v(&self, x: &[S], y: &[S]) -> Mat<S> {
        let lx = self.l_op(x);
        let ly = self.l_op(y);
        let lxy = self.l_op(&self.mul(x, y));
        let c = crate::lie::commutator(&lx, &ly);
        let two = S::from_int(2);
        combine(&lxy, &two, &c, &two)
    }

    /// `U_x y = 2 x∘(x∘y) − (x∘x)∘y`.
    pub fn u_apply(&self, x: &[S], y: &[S]) -> Vec<S> {
        let a = self.mul(x, &self.mul(x, y));
        let b = self.mul(&self.mul(x, x), y);
        a.into_iter().zip(b).map(|(p, q)| p.clone() + &p - &q).collect()
    }

    /// `(U_{x+z} − U_x − U_z) y`, straight from the definition.
    pub fn v_apply_by_definition(&self, x: &[S], y: &[S], z: &[S]) -> Vec<S> {
        let xz: Vec<S> = x.iter().zip(z).map(|(a, b)| a.clone() + b).collect();
        let a = self.u_apply(&xz, y);
        let b = self.u_apply(x, y);
        let c = self.u_apply(z, y);
        a.into_iter().zip(b).zip(c).map(|((p, q), r)| p - &q - &r).collect()
    }

    pub fn random_element(&self, rng: &mut impl Rng) -> Vec<S> {
        crate::lie::random_small_vector(rng, self.dim, SAMPLE_BOUND)
    }
}

/// Sampled coefficients are integers with absolute value at most this bound.
pub const SAMPLE_BOUND: i64 = 5;

fn combine<S: Scalar>(a: &Mat<S>, fa: &S, b: &Mat<S>, fb: &S) -> Mat<S> {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x.mul_ref(fa) + &y.mul_ref(fb)).collect())
        .collect()
}

fn identity<S: Scalar>(n: usize) -> Mat<S> {
    (0..n).map(|i| (0..n).map(|j| if i == j { S::one() } else { S::zero() }).collect()).collect()
}

/// Outcome of a randomized identity suite.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

/// The Jordan algebra axioms `U_1 = Id`, `U_x V_{y,x} = V_{x,y} U_x`,
/// `U_{U_x y} = U_x U_y U_x`, plus the Jordan identity, commutativity and the
/// agreement of `V` with its defining formula.
pub fn check_algebra_axioms(n: usize, samples: usize, seed: u64) -> Result<AxiomReport, JordanError> {
    let j = JordanAlgebra::cached(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = AxiomReport::default();
    let d = j.dim();
    let one = j.unit();
    r.check(j.quadratic_u(&one) == identity(d), || "U_1 != Id".into());
    let two_id = combine(&identity(d), &Rational::int(2), &identity(d), &Rational::ZERO);
    r.check(j.linearized_v(&one, &one) == two_id, || "V_{1,1} != 2 Id".into());
    for s in 0..samples {
        let x = j.random_element(&mut rng);
        let y = j.random_element(&mut rng);
        let z = j.random_element(&mut rng);
        r.check(j.mul(&x, &y) == j.mul(&y, &x), || format!("sample {s}: x∘y != y∘x"));
        let x2 = j.mul(&x, &x);
        r.check(j.mul(&x2, &j.mul(&x, &y)) == j.mul(&x, &j.mul(&x2, &y)), || {
            format!("sample {s}: Jordan identity")
        });
        let ux = j.quadratic_u(&x);
        let uy = j.quadratic_u(&y);
        r.check(linalg::mat_vec(&ux, &y) == j.u_apply(&x, &y), || format!("sample {s}: U_x y mismatch"));
        r.check(
            linalg::mat_vec(&j.linearized_v(&x, &y), &z) == j.v_apply_by_definition(&x, &y, &z),
            || format!("sample {s}: V_(x,y) z mismatch"),
        );
        let lhs = linalg::mat_mul(&ux, &j.linearized_v(&y, &x));
        let rhs = linalg::mat_mul(&j.linearized_v(&x, &y), &ux);
        r.check(lhs == rhs, || format!("sample {s}: U_x V_(y,x) != V_(x,y) U_x"));
        let uxy = j.u_apply(&x, &y);
        let lhs = j.quadratic_u(&uxy);
        let rhs = linalg::mat_mul(&linalg::mat_mul(&ux, &uy), &ux);
        r.check(lhs == rhs, || format!("sample {s}: U_(U_x y) != U_x U_y U_x"));
    }
    Ok(r)
}

/// The triple-system axioms, with J viewed as a Jordan triple.
pub fn check_triple_axioms(n: usize, samples: usize, seed: u64) -> Result<AxiomReport, JordanError> {
    let j = JordanAlgebra::cached(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = AxiomReport::default();
    for s in 0..samples {
        let x = j.random_element(&mut rng);
        let y = j.random_element(&mut rng);
        let ux = j.quadratic_u(&x);
        let lhs = linalg::mat_mul(&ux, &j.linearized_v(&y, &x));
        let rhs = linalg::mat_mul(&j.linearized_v(&x, &y), &ux);
        r.check(lhs == rhs, || format!("sample {s}: U_x V_(y,x) != V_(x,y) U_x"));
        let uxy = j.u_apply(&x, &y);
        let uyx = j.u_apply(&y, &x);
        r.check(j.linearized_v(&uxy, &y) == j.linearized_v(&x, &uyx), || {
            format!("sample {s}: V_(U_x y, y) != V_(x, U_y x)")
        });
        let lhs = j.quadratic_u(&uxy);
        let rhs = linalg::mat_mul(&linalg::mat_mul(&ux, &j.quadratic_u(&y)), &ux);
        r.check(lhs == rhs, || format!("sample {s}: U_(U_x y) != U_x U_y U_x"));
    }
    Ok(r)
}

/// `Der(J) = [L(J), L(J)]` with a basis chosen greedily among the
/// commutators `[L(e_i), L(e_j)]`, `i < j`.
#[derive(Debug, Clone)]
pub struct JordanDerivations {
    pub n: usize,
    pub pairs: Vec<(usize, usize)>,
    pub ops: Vec<Mat<Rational>>,
    pub span: SpanMatrices<Rational>,
    pub lie: LieAlgebra<Rational>,
}

impl JordanDerivations {
    pub fn dim(&self) -> usize {
        self.ops.len()
    }

    /// Coordinates of an operator in the derivation basis.
    pub fn coordinates(&self, m: &Mat<Rational>) -> Option<Vec<Rational>> {
        self.span.coordinates(m)
    }
}

fn build_derivations(n: usize) -> Result<JordanDerivations, JordanError> {
    let j = JordanAlgebra::cached(n)?;
    let d = j.dim();
    let ls: Vec<Mat<Rational>> = (0..d).map(|k| j.l_op(&j.basis_vector(k))).collect();
    let mut candidates = Vec::new();
    for a in 0..d {
        for b in (a + 1)..d {
            candidates.push(((a, b), crate::lie::commutator(&ls[a], &ls[b])));
        }
    }
    let chosen = independent_matrices(candidates.iter().map(|(_, m)| m.clone()));
    let mut pairs = Vec::with_capacity(chosen.len());
    let mut cursor = 0;
    for m in &chosen {
        while candidates[cursor].1 != *m {
            cursor += 1;
        }
        pairs.push(candidates[cursor].0);
        cursor += 1;
    }
    let span = SpanMatrices::new(d, &chosen)?;
    let lie = LieAlgebra::from_matrices(format!("Der(J3^{n})"), &chosen)?
        .with_labels(pairs.iter().map(|(a, b)| format!("[L{a},L{b}]")).collect());
    Ok(JordanDerivations { n, pairs, ops: chosen, span, lie })
}

/// The derivation algebra of J3^n (cached).
pub fn derivations_of_j(n: usize) -> Result<Arc<JordanDerivations>, JordanError> {
    static CACHE: [OnceLock<Arc<JordanDerivations>>; 4] = [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    check_n(n)?;
    let slot = n.trailing_zeros() as usize;
    if let Some(d) = CACHE[slot].get() {
        return Ok(d.clone());
    }
    let built = Arc::new(build_derivations(n)?);
    Ok(CACHE[slot].get_or_init(|| built).clone())
}

/// `str0(J) = L(J0) ⊕ Der(J)` as a Lie algebra of operators.
pub fn reduced_structure_algebra(n: usize) -> Result<LieAlgebra<Rational>, JordanError> {
    let j = JordanAlgebra::cached(n)?;
    let der = derivations_of_j(n)?;
    let mut mats: Vec<Mat<Rational>> = j.traceless_basis().iter().map(|t| j.l_op(t)).collect();
    let nl = mats.len();
    mats.extend(der.ops.iter().cloned());
    let alg = LieAlgebra::from_matrices(format!("str0(J3^{n})"), &mats)?.with_blocks(vec![
        Block { name: "L(J0)".into(), start: 0, len: nl },
        Block { name: "Der(J)".into(), start: nl, len: der.dim() },
    ]);
    Ok(alg)
}

/// Which side of the Jordan pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn opposite(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// The TKK algebra `J ⊕ L(J) ⊕ Der(J) ⊕ J̄` with grading `+1, 0, 0, −1`.
#[derive(Debug, Clone)]
pub struct Tkk {
    pub n: usize,
    pub lie: LieAlgebra<Rational>,
    pub jordan: Arc<JordanAlgebra<Rational>>,
    pub derivations: Arc<JordanDerivations>,
}

/// Builds the TKK algebra of J3^n.
pub fn tkk(n: usize) -> Result<Tkk, JordanError> {
    let j = JordanAlgebra::cached(n)?;
    let der = derivations_of_j(n)?;
    let m = j.dim();
    let dd = der.dim();
    let (o_l, o_d, o_b) = (m, 2 * m, 2 * m + dd);
    let dim = 3 * m + dd;
    let ls: Vec<Mat<Rational>> = (0..m).map(|k| j.l_op(&j.basis_vector(k))).collect();
    let prod: Vec<Vec<Vec<Rational>>> =
        (0..m).map(|a| (0..m).map(|b| j.mul(&j.basis_vector(a), &j.basis_vector(b))).collect()).collect();
    let comm: Vec<Vec<Vec<Rational>>> = (0..m)
        .map(|a| {
            (0..m)
                .map(|b| der.coordinates(&crate::lie::commutator(&ls[a], &ls[b])).expect("[L,L] is a derivation"))
                .collect()
        })
        .collect();
    let column = |op: &Mat<Rational>, k: usize| -> Vec<Rational> { op.iter().map(|row| row[k].clone()).collect() };
    let shift = |v: Vec<Rational>, off: usize, f: &Rational| -> SparseVec<Rational> {
        v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k + off, c * f)).collect()
    };
    let one = Rational::ONE;
    let neg = -Rational::ONE;
    let two = Rational::int(2);
    #[derive(Clone, Copy)]
    enum Part {
        J(usize),
        L(usize),
        D(usize),
        B(usize),
    }
    let part = |k: usize| {
        if k < o_l {
            Part::J(k)
        } else if k < o_d {
            Part::L(k - o_l)
        } else if k < o_b {
            Part::D(k - o_d)
        } else {
            Part::B(k - o_b)
        }
    };
    let lie = LieAlgebra::from_brackets(format!("tkk(J3^{n})"), dim, |p, q| match (part(p), part(q)) {
        (Part::J(_), Part::J(_)) | (Part::B(_), Part::B(_)) => Vec::new(),
        (Part::J(a), Part::B(b)) => {
            let mut v = shift(prod[a][b].clone(), o_l, &two);
            v.extend(shift(comm[a][b].clone(), o_d, &two));
            v
        }
        // [x, T] = −T x
        (Part::J(a), Part::L(t)) => shift(prod[t][a].clone(), 0, &neg),
        (Part::J(a), Part::D(t)) => shift(column(&der.ops[t], a), 0, &neg),
        // [T, ȳ] = −T* y
        (Part::L(t), Part::B(b)) => shift(prod[t][b].clone(), o_b, &neg),
        (Part::D(t), Part::B(b)) => shift(column(&der.ops[t], b), o_b, &one),
        (Part::L(a), Part::L(b)) => shift(comm[a][b].clone(), o_d, &one),
        // [L_a, D] = −L_{D a}
        (Part::L(a), Part::D(t)) => shift(column(&der.ops[t], a), o_l, &neg),
        (Part::D(s), Part::D(t)) => der.lie.bracket_basis(s, t).into_iter().map(|(k, c)| (k + o_d, c)).collect(),
        _ => unreachable!("indices are visited with p < q"),
    });
    let mut grading = vec![1; m];
    grading.extend(vec![0; m + dd]);
    grading.extend(vec![-1; m]);
    let mut labels: Vec<String> = (0..m).map(|k| format!("x{k}")).collect();
    labels.extend((0..m).map(|k| format!("L{k}")));
    labels.extend(der.pairs.iter().map(|(a, b)| format!("[L{a},L{b}]")));
    labels.extend((0..m).map(|k| format!("xbar{k}")));
    let lie = lie
        .with_grading(grading)
        .with_labels(labels)
        .with_blocks(vec![
            Block { name: "J".into(), start: 0, len: m },
            Block { name: "L(J)".into(), start: o_l, len: m },
            Block { name: "Der(J)".into(), start: o_d, len: dd },
            Block { name: "Jbar".into(), start: o_b, len: m },
        ]);
    Ok(Tkk { n, lie, jordan: j, derivations: der })
}

impl Tkk {
    pub fn jordan_dim(&self) -> usize {
        self.jordan.dim()
    }

    fn offset(&self, s: Sign) -> usize {
        match s {
            Sign::Plus => 0,
            Sign::Minus => 2 * self.jordan.dim() + self.derivations.dim(),
        }
    }

    /// Embeds Jordan coordinates into `V^+` (= J) or `V^-` (= J̄).
    pub fn embed(&self, s: Sign, x: &[Rational]) -> Vec<Rational> {
        let mut v = vec![Rational::ZERO; self.lie.dim()];
        let o = self.offset(s);
        v[o..o + x.len()].clone_from_slice(x);
        v
    }

    fn block(&self, m: &Mat<Rational>, rows: Sign, cols: Sign) -> Mat<Rational> {
        let (ro, co, d) = (self.offset(rows), self.offset(cols), self.jordan.dim());
        (0..d).map(|r| m[ro + r][co..co + d].to_vec()).collect()
    }

    /// `V^σ_{x,y} z = [[x^σ, y^{−σ}], z^σ]` as an operator on `V^σ`.
    pub fn pair_v(&self, s: Sign, x: &[Rational], y: &[Rational]) -> Result<Mat<Rational>, JordanError> {
        let h = self.lie.bracket(&self.embed(s, x), &self.embed(s.opposite(), y))?;
        Ok(self.block(&self.lie.ad_matrix(&h)?, s, s))
    }

    /// `U^σ_x y = ½[[x^σ, y^{−σ}], x^σ]` as an operator `V^{−σ} → V^σ`.
    pub fn pair_u(&self, s: Sign, x: &[Rational]) -> Result<Mat<Rational>, JordanError> {
        let ad = self.lie.ad_matrix(&self.embed(s, x))?;
        let half = Rational::frac(1, 2);
        let d = self.lie.dim();
        // −½ ad(x)² restricted: [[x, y], x] = −ad(x)(ad(x) y).
        let (ro, co, m) = (self.offset(s), self.offset(s.opposite()), self.jordan.dim());
        let mut out = vec![vec![Rational::ZERO; m]; m];
        for r in 0..m {
            for c in 0..m {
                let mut acc = Rational::ZERO;
                for k in 0..d {
                    acc.add_product(&ad[ro + r][k], &ad[k][co + c]);
                }
                out[r][c] = -(acc * &half);
            }
        }
        Ok(out)
    }
}

/// The Jordan pair axioms for `(J, J̄)` with `U` and `V` computed from TKK
/// brackets, for both signs.
pub fn check_pair_axioms(n: usize, samples: usize, seed: u64) -> Result<AxiomReport, JordanError> {
    let t = tkk(n)?;
    let j = t.jordan.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = AxiomReport::default();
    for s in 0..samples {
        let x = j.random_element(&mut rng);
        let y = j.random_element(&mut rng);
        for sg in [Sign::Plus, Sign::Minus] {
            let ux = t.pair_u(sg, &x)?;
            let uy = t.pair_u(sg.opposite(), &y)?;
            let lhs = linalg::mat_mul(&ux, &t.pair_v(sg.opposite(), &y, &x)?);
            let rhs = linalg::mat_mul(&t.pair_v(sg, &x, &y)?, &ux);
            r.check(lhs == rhs, || format!("sample {s} {sg:?}: U_x V_(y,x) != V_(x,y) U_x"));
            let uxy = linalg::mat_vec(&ux, &y);
            let uyx = linalg::mat_vec(&uy, &x);
            r.check(t.pair_v(sg, &uxy, &y)? == t.pair_v(sg, &x, &uyx)?, || {
                format!("sample {s} {sg:?}: V_(U_x y, y) != V_(x, U_y x)")
            });
            let lhs = t.pair_u(sg, &uxy)?;
            let rhs = linalg::mat_mul(&linalg::mat_mul(&ux, &uy), &ux);
            r.check(lhs == rhs, || format!("sample {s} {sg:?}: U_(U_x y) != U_x U_y U_x"));
        }
    }
    Ok(r)
}

/// Compares `V_{x,y}` from the quadratic construction with the bracket form
/// `[[x, ȳ], ·]` and returns the scalar `c` with `V_bracket = c · V_quadratic`
/// when one exists on every sample.
pub fn v_normalization(n: usize, samples: usize, seed: u64) -> Result<Option<Rational>, JordanError> {
    let t = tkk(n)?;
    let j = t.jordan.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut constant: Option<Rational> = None;
    for _ in 0..samples {
        let x = j.random_element(&mut rng);
        let y = j.random_element(&mut rng);
        let q = j.linearized_v(&x, &y);
        let b = t.pair_v(Sign::Plus, &x, &y)?;
        for (rq, rb) in q.iter().zip(&b) {
            for (a, c) in rq.iter().zip(rb) {
                if a.is_zero() {
                    if !c.is_zero() {
                        return Ok(None);
                    }
                    continue;
                }
                let ratio = c / a;
                match &constant {
                    None => constant = Some(ratio),
                    Some(k) if *k != ratio => return Ok(None),
                    _ => {}
                }
            }
        }
    }
    Ok(constant)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_and_idempotents() {
        let j = JordanAlgebra::new(8).unwrap();
        let one = j.unit();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let x: Vec<Rational> = j.random_element(&mut rng);
        assert_eq!(j.mul(&one, &x), x);
        let (e11, e22) = (j.basis_vector(0), j.basis_vector(1));
        assert!(linalg::is_zero_vec(&j.mul(&e11, &e22)));
        assert_eq!(j.mul(&e11, &e11), e11);
    }

    #[test]
    fn trace_and_traceless() {
        let j = JordanAlgebra::new(8).unwrap();
        assert_eq!(j.trace(&j.unit()), Rational::int(3));
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let x: Vec<Rational> = j.random_element(&mut rng);
        assert!(j.trace(&j.traceless(&x)).is_zero());
        assert_eq!(j.traceless_basis().len(), 26);
    }

    #[test]
    fn hermiticity_is_enforced() {
        let n = 2;
        let x = JordanElement::<Rational>::unit(n).unwrap();
        let mut m = x.to_matrix();
        m[0][1] = HurwitzElement::unit(2, 1);
        assert!(JordanElement::from_matrix(&m).is_err());
    }
}
