//! The Tits construction `Der(H) ⊕ (H0 ⊗ J0) ⊕ Der(J)`, the magic square it
//! produces, and the Z3-graded form of e8 built on the Zorn basis of the
//! octonions.
//!
//! With `a ∗ b = ½[a, b]`, `⟨a, b⟩ = Re(a b̄)` on `H0` and
//! `x ∗ y = x∘y − ⅓ T(x∘y)`, `⟨x, y⟩ = T(x∘y)` on `J0`, the bracket of two
//! middle elements is
//!
//! ```text
//! [a⊗x, b⊗y] = λ ⟨x,y⟩ D_{a,b} + (a∗b)⊗(x∗y) + μ ⟨a,b⟩ [L_x, L_y]
//! ```
//!
//! where `D_{a,b} c = ⅓[[a,b],c] − (a,b,c)`. Derivations act naturally on the
//! middle summand. The constants [`TITS_LAMBDA`] and [`TITS_MU`] are the unique
//! values for which the Jacobi identity holds; [`fit_tits_constants`]
//! recovers them from Jacobi residuals.

use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::exactnum::{linalg, FieldScalar, Rational};
use crate::hurwitz::{derivation, derivation_algebra, epsilon, DerivationAlgebra, HurwitzElement, HurwitzError};
use crate::jordan::{derivations_of_j, JordanAlgebra, JordanDerivations, JordanError};
use crate::lie::{
    cartan_subalgebra, grading_decompose, jacobi_check, jacobi_residual, random_triples, Block, GradedDecomposition,
    GradingSource, JacobiMode, JacobiReport, LieAlgebra, LieError, SpanMatrices, SparseVec,
};

/// λ as a fraction `(numerator, denominator)`.
pub const TITS_LAMBDA: (i64, i64) = (1, 4);
/// μ as a fraction `(numerator, denominator)`.
pub const TITS_MU: (i64, i64) = (-1, 1);

pub fn tits_lambda() -> Rational {
    Rational::frac(TITS_LAMBDA.0, TITS_LAMBDA.1)
}

pub fn tits_mu() -> Rational {
    Rational::frac(TITS_MU.0, TITS_MU.1)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TitsError {
    #[error("Hurwitz dimension must be 1, 2, 4 or 8, not {0}")]
    UnsupportedHurwitz(usize),
    #[error(transparent)]
    Jordan(#[from] JordanError),
    #[error(transparent)]
    Hurwitz(#[from] HurwitzError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("chain step '{step}' sums to {got}, expected {expected}")]
    ChainMismatch { step: String, got: usize, expected: usize },
    #[error("{0} is not a derivation")]
    NotDerivation(String),
}

fn hurwitz_derivations(h: usize) -> Result<Option<Arc<DerivationAlgebra>>, TitsError> {
    static CACHE: [OnceLock<Arc<DerivationAlgebra>>; 2] = [OnceLock::new(), OnceLock::new()];
    let slot = match h {
        1 | 2 => return Ok(None),
        4 => 0,
        8 => 1,
        _ => return Err(TitsError::UnsupportedHurwitz(h)),
    };
    if let Some(d) = CACHE[slot].get() {
        return Ok(Some(d.clone()));
    }
    let built = Arc::new(derivation_algebra(h)?);
    Ok(Some(CACHE[slot].get_or_init(|| built).clone()))
}

/// Precomputed ingredients of the bracket, independent of λ and μ.
struct TitsData {
    h: usize,
    dh: usize,
    j0: usize,
    der_h: Option<Arc<DerivationAlgebra>>,
    der_j: Arc<JordanDerivations>,
    /// `D_s u_i` in imaginary-unit coordinates (index `i − 1`).
    h_action: Vec<Vec<SparseVec<Rational>>>,
    /// `E_t x_p` in `J0` coordinates.
    j_action: Vec<Vec<SparseVec<Rational>>>,
    /// `D_{u_i, u_k}` in `Der(H)` coordinates.
    h_der: Vec<Vec<SparseVec<Rational>>>,
    h_star: Vec<Vec<SparseVec<Rational>>>,
    h_form: Vec<Vec<Rational>>,
    j_star: Vec<Vec<SparseVec<Rational>>>,
    j_form: Vec<Vec<Rational>>,
    /// `[L_{x_p}, L_{x_q}]` in `Der(J)` coordinates.
    j_comm: Vec<Vec<SparseVec<Rational>>>,
}

fn sparse(v: Vec<Rational>) -> SparseVec<Rational> {
    v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

impl TitsData {
    fn new(h: usize, n: usize) -> Result<Self, TitsError> {
        if !matches!(h, 1 | 2 | 4 | 8) {
            return Err(TitsError::UnsupportedHurwitz(h));
        }
        let j = JordanAlgebra::cached(n)?;
        let der_j = derivations_of_j(n)?;
        let der_h = hurwitz_derivations(h)?;
        let dh = der_h.as_ref().map_or(0, |d| d.ops.len());
        let im = h - 1;
        let unit = |k: usize| HurwitzElement::<Rational>::unit(h, k);

        let h_action: Vec<Vec<SparseVec<Rational>>> = der_h
            .iter()
            .flat_map(|d| d.ops.iter())
            .map(|op| (1..h).map(|i| sparse((1..h).map(|r| op.matrix[r][i].clone()).collect())).collect())
            .collect();
        let h_span = match &der_h {
            Some(d) => Some(SpanMatrices::new(h, &d.ops.iter().map(|o| o.matrix.clone()).collect::<Vec<_>>())?),
            None => None,
        };
        let mut h_der = vec![vec![Vec::new(); im]; im];
        let mut h_star = vec![vec![Vec::new(); im]; im];
        let mut h_form = vec![vec![Rational::ZERO; im]; im];
        let half = Rational::frac(1, 2);
        for i in 1..h {
            for k in 1..h {
                if let Some(span) = &h_span {
                    let d = derivation(&unit(i), &unit(k))?;
                    h_der[i - 1][k - 1] = sparse(span.coordinates(&d.matrix).expect("D_{a,b} lies in Der(H)"));
                }
                let c = unit(i).commutator(&unit(k))?.scale(&half);
                h_star[i - 1][k - 1] = sparse(c.coords()[1..].to_vec());
                h_form[i - 1][k - 1] = unit(i).mul(&unit(k).conj_oct())?.real().clone();
            }
        }

        let basis = j.traceless_basis();
        let j0 = basis.len();
        let j_action = der_j
            .ops
            .iter()
            .map(|op| {
                basis
                    .iter()
                    .map(|x| sparse(j.traceless_coords(&linalg::mat_vec(op, x)).expect("derivations preserve trace")))
                    .collect()
            })
            .collect();
        let ls: Vec<Vec<Vec<Rational>>> = basis.iter().map(|x| j.l_op(x)).collect();
        let mut j_star = vec![vec![Vec::new(); j0]; j0];
        let mut j_form = vec![vec![Rational::ZERO; j0]; j0];
        let mut j_comm = vec![vec![Vec::new(); j0]; j0];
        for p in 0..j0 {
            for q in 0..j0 {
                let xy = j.mul(&basis[p], &basis[q]);
                j_form[p][q] = j.trace(&xy);
                j_star[p][q] = sparse(j.traceless_coords(&j.traceless(&xy)).expect("traceless"));
                if p < q {
                    let c = der_j
                        .coordinates(&crate::lie::commutator(&ls[p], &ls[q]))
                        .expect("[L_x, L_y] is a derivation");
                    j_comm[q][p] = sparse(c.iter().map(|v| -v.clone()).collect());
                    j_comm[p][q] = sparse(c);
                }
            }
        }
        Ok(TitsData { h, dh, j0, der_h, der_j, h_action, j_action, h_der, h_star, h_form, j_star, j_form, j_comm })
    }

    fn dim(&self) -> usize {
        self.dh + (self.h - 1) * self.j0 + self.der_j.dim()
    }

    fn algebra(&self, name: String, lambda: &Rational, mu: &Rational) -> LieAlgebra<Rational> {
        let (dh, j0) = (self.dh, self.j0);
        let mid = (self.h - 1) * j0;
        let o_j = dh + mid;
        enum Part {
            H(usize),
            M(usize, usize),
            J(usize),
        }
        let part = |k: usize| {
            if k < dh {
                Part::H(k)
            } else if k < o_j {
                let m = k - dh;
                Part::M(m / j0, m % j0)
            } else {
                Part::J(k - o_j)
            }
        };
        let lie = LieAlgebra::from_brackets(name, self.dim(), |a, b| match (part(a), part(b)) {
            (Part::H(s), Part::H(t)) => self.der_h.as_ref().expect("nonempty Der(H)").lie.bracket_basis(s, t),
            (Part::J(s), Part::J(t)) => {
                self.der_j.lie.bracket_basis(s, t).into_iter().map(|(k, c)| (k + o_j, c)).collect()
            }
            (Part::H(_), Part::J(_)) => Vec::new(),
            (Part::H(s), Part::M(i, p)) => {
                self.h_action[s][i].iter().map(|(r, c)| (dh + r * j0 + p, c.clone())).collect()
            }
            (Part::M(i, p), Part::J(t)) => {
                self.j_action[t][p].iter().map(|(q, c)| (dh + i * j0 + q, -c.clone())).collect()
            }
            (Part::M(i, p), Part::M(k, q)) => {
                let mut out: SparseVec<Rational> = Vec::new();
                let f = &self.j_form[p][q] * lambda;
                if !f.is_zero() {
                    out.extend(self.h_der[i][k].iter().map(|(s, c)| (*s, c * &f)));
                }
                for (r, c1) in &self.h_star[i][k] {
                    for (s, c2) in &self.j_star[p][q] {
                        out.push((dh + r * j0 + s, c1 * c2));
                    }
                }
                let g = &self.h_form[i][k] * mu;
                if !g.is_zero() {
                    out.extend(self.j_comm[p][q].iter().map(|(t, c)| (o_j + t, c * &g)));
                }
                out
            }
            _ => unreachable!("visited with a < b"),
        });
        let mut blocks = Vec::new();
        if dh > 0 {
            blocks.push(Block { name: "Der(H)".into(), start: 0, len: dh });
        }
        if mid > 0 {
            blocks.push(Block { name: "H0⊗J0".into(), start: dh, len: mid });
        }
        blocks.push(Block { name: "Der(J)".into(), start: o_j, len: self.der_j.dim() });
        let mut labels: Vec<String> = (0..dh).map(|s| format!("DH{s}")).collect();
        for i in 1..self.h {
            labels.extend((0..j0).map(|p| format!("u{i}⊗x{p}")));
        }
        labels.extend((0..self.der_j.dim()).map(|t| format!("DJ{t}")));
        lie.with_blocks(blocks).with_labels(labels)
    }
}

fn hurwitz_letter(h: usize) -> &'static str {
    match h {
        1 => "R",
        2 => "C",
        4 => "Q",
        _ => "O",
    }
}

/// The Tits construction with the standard constants.
pub fn tits_construct(h_dim: usize, n: usize) -> Result<LieAlgebra<Rational>, TitsError> {
    tits_construct_with(h_dim, n, &tits_lambda(), &tits_mu())
}

/// The Tits construction with arbitrary constants (Jacobi fails unless they
/// are the standard ones).
pub fn tits_construct_with(
    h_dim: usize,
    n: usize,
    lambda: &Rational,
    mu: &Rational,
) -> Result<LieAlgebra<Rational>, TitsError> {
    let data = TitsData::new(h_dim, n)?;
    Ok(data.algebra(format!("T({}, J3^{n})", hurwitz_letter(h_dim)), lambda, mu))
}

/// Constants recovered from Jacobi residuals. `None` means the constant does
/// not enter any bracket of this algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TitsFit {
    pub lambda: Option<Rational>,
    pub mu: Option<Rational>,
    /// Whether some value of the constants makes every sampled residual vanish.
    pub consistent: bool,
    pub triples: usize,
}

/// Solves for λ and μ from the Jacobi residuals of sampled triples in the
/// `H0 ⊗ J0` block, using that the residual is affine in (λ, μ).
pub fn fit_tits_constants(h_dim: usize, n: usize, triples: usize, seed: u64) -> Result<TitsFit, TitsError> {
    let data = TitsData::new(h_dim, n)?;
    let z = Rational::ZERO;
    let o = Rational::ONE;
    let l00 = data.algebra("fit".into(), &z, &z);
    let l10 = data.algebra("fit".into(), &o, &z);
    let l01 = data.algebra("fit".into(), &z, &o);
    let l11 = data.algebra("fit".into(), &o, &o);
    let mid = (data.h - 1) * data.j0;
    let ts: Vec<(usize, usize, usize)> = random_triples(mid, triples, seed)
        .into_iter()
        .map(|(a, b, c)| (a + data.dh, b + data.dh, c + data.dh))
        .collect();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for &(a, b, c) in &ts {
        let r0 = jacobi_residual(&l00, a, b, c);
        let r1 = jacobi_residual(&l10, a, b, c);
        let r2 = jacobi_residual(&l01, a, b, c);
        let r3 = jacobi_residual(&l11, a, b, c);
        for k in 0..r0.len() {
            let dl = &r1[k] - &r0[k];
            let dm = &r2[k] - &r0[k];
            assert_eq!(r3[k], &(&r0[k] + &dl) + &dm, "Jacobi residual is affine in the constants");
            if !dl.is_zero() || !dm.is_zero() || !r0[k].is_zero() {
                rows.push(vec![dl, dm]);
                rhs.push(-r0[k].clone());
            }
        }
    }
    let lambda_used = rows.iter().any(|r| !r[0].is_zero());
    let mu_used = rows.iter().any(|r| !r[1].is_zero());
    let sol = linalg::solve(&rows, &rhs);
    Ok(TitsFit {
        lambda: if lambda_used { sol.as_ref().map(|s| s[0].clone()) } else { None },
        mu: if mu_used { sol.as_ref().map(|s| s[1].clone()) } else { None },
        consistent: sol.is_some(),
        triples: ts.len(),
    })
}

pub const HURWITZ_DIMS: [usize; 4] = [1, 2, 4, 8];

/// Expected magic square dimensions, rows indexed by `H`, columns by `J3^n`.
pub const MAGIC_DIMS: [[usize; 4]; 4] = [[3, 8, 21, 52], [8, 16, 35, 78], [21, 35, 66, 133], [52, 78, 133, 248]];
pub const MAGIC_RANKS: [[usize; 4]; 4] = [[1, 2, 3, 4], [2, 4, 5, 6], [3, 5, 6, 7], [4, 6, 7, 8]];
pub const MAGIC_TYPES: [[&str; 4]; 4] =
    [["a1", "a2", "c3", "f4"], ["a2", "a2+a2", "a5", "e6"], ["c3", "a5", "d6", "e7"], ["f4", "e6", "e7", "e8"]];

/// Semisimple types of the given dimension and rank among the simple algebras
/// and `a2+a2`. Dimension and rank alone cannot separate `b_n` from `c_n`, or
/// `e6` from `b6`/`c6`, so those come back together.
pub fn types_with(dim: usize, rank: usize) -> Vec<String> {
    let r = rank;
    let mut out = Vec::new();
    if r >= 1 && dim == r * (r + 2) {
        out.push(format!("a{r}"));
    }
    if r >= 2 && dim == r * (2 * r + 1) {
        out.push(format!("b{r}"));
    }
    if r >= 3 && dim == r * (2 * r + 1) {
        out.push(format!("c{r}"));
    }
    if r >= 4 && dim == r * (2 * r - 1) {
        out.push(format!("d{r}"));
    }
    for (name, d, rk) in [("g2", 14, 2), ("f4", 52, 4), ("e6", 78, 6), ("e7", 133, 7), ("e8", 248, 8), ("a2+a2", 16, 4)] {
        if dim == d && rank == rk {
            out.push(name.to_string());
        }
    }
    out
}

/// One magic-square cell.
#[derive(Debug, Clone)]
pub struct MagicEntry {
    pub h_dim: usize,
    pub n: usize,
    pub dim: usize,
    pub rank: usize,
    pub candidates: Vec<String>,
    pub jacobi: JacobiReport,
    pub jacobi_mode: String,
}

impl MagicEntry {
    /// The expected type when it is among the candidates.
    pub fn identified_type(&self) -> Option<&'static str> {
        let (r, c) = (cell_index(self.h_dim), cell_index(self.n));
        let expected = MAGIC_TYPES[r][c];
        self.candidates.iter().any(|t| t == expected).then_some(expected)
    }
}

fn cell_index(d: usize) -> usize {
    d.trailing_zeros() as usize
}

#[derive(Debug, Clone)]
pub struct MagicSquareReport {
    pub entries: Vec<MagicEntry>,
}

impl MagicSquareReport {
    pub fn entry(&self, h_dim: usize, n: usize) -> Option<&MagicEntry> {
        self.entries.iter().find(|e| e.h_dim == h_dim && e.n == n)
    }

    pub fn dims(&self) -> [[usize; 4]; 4] {
        let mut g = [[0; 4]; 4];
        for e in &self.entries {
            g[cell_index(e.h_dim)][cell_index(e.n)] = e.dim;
        }
        g
    }

    pub fn ranks(&self) -> [[usize; 4]; 4] {
        let mut g = [[0; 4]; 4];
        for e in &self.entries {
            g[cell_index(e.h_dim)][cell_index(e.n)] = e.rank;
        }
        g
    }

    pub fn is_symmetric(&self) -> bool {
        let d = self.dims();
        (0..4).all(|i| (0..4).all(|j| d[i][j] == d[j][i]))
    }
}

/// How [`magic_square`] verifies Jacobi.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    /// Exhaustive up to dimension 35; sampled triples plus every triple within
    /// each block above that.
    Standard { triples: usize, seed: u64 },
    /// Every triple in every algebra.
    Exhaustive,
    /// Sampled triples only.
    Sampled { triples: usize, seed: u64 },
}

pub const EXHAUSTIVE_LIMIT: usize = 35;

/// Jacobi check of one algebra under the given policy.
pub fn verify_jacobi(l: &LieAlgebra<Rational>, mode: VerifyMode) -> (JacobiReport, String) {
    match mode {
        VerifyMode::Exhaustive => (jacobi_check(l, &JacobiMode::Exhaustive), "exhaustive".into()),
        VerifyMode::Standard { .. } if l.dim() <= EXHAUSTIVE_LIMIT => {
            (jacobi_check(l, &JacobiMode::Exhaustive), "exhaustive".into())
        }
        VerifyMode::Standard { triples, seed } => {
            let mut r = jacobi_check(l, &JacobiMode::Sampled { triples, seed });
            r.merge(jacobi_check(l, &JacobiMode::WithinBlocks));
            (r, format!("{triples} sampled + within blocks"))
        }
        VerifyMode::Sampled { triples, seed } => {
            (jacobi_check(l, &JacobiMode::Sampled { triples, seed }), format!("{triples} sampled"))
        }
    }
}

/// Builds one cell, verifies Jacobi and computes the rank.
pub fn magic_entry(h_dim: usize, n: usize, mode: VerifyMode, seed: u64) -> Result<MagicEntry, TitsError> {
    let l = tits_construct(h_dim, n)?;
    let (jacobi, jacobi_mode) = verify_jacobi(&l, mode);
    let rank = cartan_subalgebra(&l, seed)?.rank;
    Ok(MagicEntry { h_dim, n, dim: l.dim(), rank, candidates: types_with(l.dim(), rank), jacobi, jacobi_mode })
}

/// All sixteen cells.
pub fn magic_square(mode: VerifyMode, seed: u64) -> Result<MagicSquareReport, TitsError> {
    let mut entries = Vec::with_capacity(16);
    for h in HURWITZ_DIMS {
        for n in HURWITZ_DIMS {
            entries.push(magic_entry(h, n, mode, seed)?);
        }
    }
    Ok(MagicSquareReport { entries })
}

/// e8 rewritten in the Zorn basis: `Der(𝔠) = D7 ⊕ span{D_k^±}`,
/// `𝔠0 = i u7 ⊕ span{ε_k^±}`, with the Z3 charges attached.
#[derive(Debug, Clone)]
pub struct ZornE8 {
    pub lie: LieAlgebra<FieldScalar>,
    /// Charge mod 3 of each basis vector (0, 1 or 2).
    pub charges: Vec<i64>,
    /// Basis positions of the Cartan elements `H1`, `H2` of D7.
    pub cartan: [usize; 2],
}

fn fsr(q: Rational) -> FieldScalar {
    FieldScalar::from(q)
}

fn invert(m: &[Vec<FieldScalar>]) -> Option<Vec<Vec<FieldScalar>>> {
    let n = m.len();
    let mut cols = Vec::with_capacity(n);
    for k in 0..n {
        let e: Vec<FieldScalar> = (0..n).map(|i| if i == k { FieldScalar::one() } else { FieldScalar::zero() }).collect();
        cols.push(linalg::solve(m, &e)?);
    }
    if linalg::rank(m) != n {
        return None;
    }
    Some(linalg::transpose(&cols))
}

fn to_sparse_fs(v: &[FieldScalar]) -> SparseVec<FieldScalar> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect()
}

/// The e8 of the Tits construction over the octonions, rewritten in the Zorn
/// basis and checked to carry the Z3 grading.
pub fn zorn_graded_e8() -> Result<ZornE8, TitsError> {
    let e8 = tits_construct(8, 8)?.map_scalars(|c| fsr(c.clone()));
    let der_o = hurwitz_derivations(8)?.expect("octonions have derivations");
    let j0 = 26;

    // New basis of 𝔠: 1, i u7, ε_1^+, ε_2^+, ε_3^+, ε_1^-, ε_2^-, ε_3^-.
    let mut iu7 = vec![FieldScalar::zero(); 8];
    iu7[7] = FieldScalar::i();
    let mut cols: Vec<Vec<FieldScalar>> = vec![HurwitzElement::<FieldScalar>::one(8).into_coords(), iu7];
    for plus in [true, false] {
        for k in 1..=3 {
            cols.push(epsilon(plus, k).into_coords());
        }
    }
    let p8 = linalg::transpose(&cols);
    let q8 = invert(&p8).expect("Zorn basis is a basis");

    // D7 on the Zorn basis: H1, H2, then E_jk for j ≠ k.
    let mut actions: Vec<(String, Vec<Vec<FieldScalar>>)> = Vec::new();
    let diag_action = |h: [i64; 3]| {
        let mut a = vec![vec![FieldScalar::zero(); 8]; 8];
        for l in 0..3 {
            a[2 + l][2 + l] = FieldScalar::from(h[l]);
            a[5 + l][5 + l] = FieldScalar::from(-h[l]);
        }
        a
    };
    actions.push(("H1".into(), diag_action([1, -1, 0])));
    actions.push(("H2".into(), diag_action([0, 1, -1])));
    for j in 0..3 {
        for k in 0..3 {
            if j != k {
                let mut a = vec![vec![FieldScalar::zero(); 8]; 8];
                a[2 + j][2 + k] = FieldScalar::one();
                a[5 + k][5 + j] = -FieldScalar::one();
                actions.push((format!("E{}{}", j + 1, k + 1), a));
            }
        }
    }
    let mut der_mats: Vec<(String, Vec<Vec<FieldScalar>>)> = actions
        .into_iter()
        .map(|(name, a)| (name, linalg::mat_mul(&linalg::mat_mul(&p8, &a), &q8)))
        .collect();
    let iu7_el = HurwitzElement::new(cols[1].clone())?;
    for (plus, sign) in [(true, 1), (false, -1)] {
        for k in 1..=3 {
            let d = derivation(&iu7_el, &epsilon(plus, k))?;
            let f = fsr(Rational::frac(3 * sign, 2));
            let m = d.matrix.iter().map(|r| r.iter().map(|c| c * &f).collect()).collect();
            der_mats.push((format!("D{k}{}", if plus { "+" } else { "-" }), m));
        }
    }
    for (name, m) in &der_mats {
        let op = crate::hurwitz::DerivationOp { matrix: m.clone() };
        if !op.leibniz_failures().is_empty() {
            return Err(TitsError::NotDerivation(name.clone()));
        }
    }
    let old_ops: Vec<Vec<Vec<FieldScalar>>> =
        der_o.ops.iter().map(|o| o.matrix.iter().map(|r| r.iter().map(|c| fsr(c.clone())).collect()).collect()).collect();
    let span = SpanMatrices::new(8, &old_ops)?;
    let g: Vec<Vec<FieldScalar>> =
        der_mats.iter().map(|(_, m)| span.coordinates(m).expect("lies in Der(O)")).collect();
    let g_inv = invert(&linalg::transpose(&g)).ok_or(TitsError::NotDerivation("Zorn derivation basis".into()))?;

    let p7: Vec<Vec<FieldScalar>> = (1..8).map(|r| (1..8).map(|c| p8[r][c].clone()).collect()).collect();
    let q7: Vec<Vec<FieldScalar>> = (1..8).map(|r| (1..8).map(|c| q8[r][c].clone()).collect()).collect();

    let d = e8.dim();
    let o_j = 14 + 7 * j0;
    let mut new_in_old: Vec<SparseVec<FieldScalar>> = Vec::with_capacity(d);
    let mut old_in_new: Vec<SparseVec<FieldScalar>> = Vec::with_capacity(d);
    for row in &g {
        new_in_old.push(to_sparse_fs(row));
    }
    for r in 0..7 {
        for p in 0..j0 {
            new_in_old.push((0..7).filter(|&s| !p7[s][r].is_zero()).map(|s| (14 + s * j0 + p, p7[s][r].clone())).collect());
        }
    }
    for t in 0..52 {
        new_in_old.push(vec![(o_j + t, FieldScalar::one())]);
    }
    for s in 0..14 {
        old_in_new.push((0..14).filter(|&r| !g_inv[r][s].is_zero()).map(|r| (r, g_inv[r][s].clone())).collect());
    }
    for s in 0..7 {
        for p in 0..j0 {
            old_in_new.push((0..7).filter(|&r| !q7[r][s].is_zero()).map(|r| (14 + r * j0 + p, q7[r][s].clone())).collect());
        }
    }
    for t in 0..52 {
        old_in_new.push(vec![(o_j + t, FieldScalar::one())]);
    }
    let mut labels: Vec<String> = der_mats.iter().map(|(n, _)| n.clone()).collect();
    let names = ["iu7", "ε1+", "ε2+", "ε3+", "ε1-", "ε2-", "ε3-"];
    for nm in names {
        labels.extend((0..j0).map(|p| format!("{nm}⊗x{p}")));
    }
    labels.extend((0..52).map(|t| format!("DJ{t}")));
    let lie = e8.change_basis("e8 (Zorn basis)", &new_in_old, &old_in_new)?.with_labels(labels).with_blocks(vec![
        Block { name: "D7".into(), start: 0, len: 8 },
        Block { name: "D±".into(), start: 8, len: 6 },
        Block { name: "iu7⊗J0".into(), start: 14, len: j0 },
        Block { name: "ε+⊗J0".into(), start: 14 + j0, len: 3 * j0 },
        Block { name: "ε-⊗J0".into(), start: 14 + 4 * j0, len: 3 * j0 },
        Block { name: "Der(J)".into(), start: o_j, len: 52 },
    ]);
    let mut charges = vec![0; 8];
    charges.extend([1, 1, 1, 2, 2, 2]);
    charges.extend(vec![0; j0]);
    charges.extend(vec![1; 3 * j0]);
    charges.extend(vec![2; 3 * j0]);
    charges.extend(vec![0; 52]);
    Ok(ZornE8 { lie, charges, cartan: [0, 1] })
}

/// The Z3 grading of [`zorn_graded_e8`], refined by the weights of the D7
/// Cartan elements so that each `L_{±k}` is a separate part.
pub fn zorn_grading(z: &ZornE8) -> Result<(GradedDecomposition<FieldScalar>, GradedDecomposition<FieldScalar>), TitsError> {
    let coarse = grading_decompose(
        &z.lie,
        &[GradingSource::Labels { name: "Z3".into(), degrees: z.charges.clone(), modulus: Some(3) }],
    )?;
    let mut sources = vec![GradingSource::Labels { name: "Z3".into(), degrees: z.charges.clone(), modulus: Some(3) }];
    for (k, &c) in z.cartan.iter().enumerate() {
        let mut e = vec![FieldScalar::zero(); z.lie.dim()];
        e[c] = FieldScalar::one();
        sources.push(GradingSource::Element { name: format!("H{}", k + 1), element: e });
    }
    let fine = grading_decompose(&z.lie, &sources)?;
    Ok((coarse, fine))
}

/// A node of the dimension bookkeeping tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainNode {
    pub label: String,
    pub dim: usize,
    /// Number of roots carried by the node (leaves only; 0 for inner nodes).
    pub roots: usize,
    pub children: Vec<ChainNode>,
}

impl ChainNode {
    fn leaf(label: &str, dim: usize, roots: usize) -> Self {
        ChainNode { label: label.into(), dim, roots, children: Vec::new() }
    }

    fn node(label: &str, children: Vec<ChainNode>) -> Self {
        let dim = children.iter().map(|c| c.dim).sum();
        ChainNode { label: label.into(), dim, roots: 0, children }
    }

    pub fn leaves(&self) -> Vec<&ChainNode> {
        if self.children.is_empty() {
            vec![self]
        } else {
            self.children.iter().flat_map(ChainNode::leaves).collect()
        }
    }

    pub fn leaf_roots(&self) -> usize {
        self.leaves().iter().map(|l| l.roots).sum()
    }
}

/// The successive rewritings of e8, each a flat list of summands.
#[derive(Debug, Clone)]
pub struct Chain {
    pub steps: Vec<(String, Vec<(String, usize)>)>,
    pub tree: ChainNode,
}

impl Chain {
    pub fn totals(&self) -> Vec<usize> {
        self.steps.iter().map(|(_, parts)| parts.iter().map(|(_, d)| d).sum()).collect()
    }
}

/// Inputs to the chain that come from actual constructions.
#[derive(Debug, Clone)]
pub struct ChainInputs {
    /// Block sizes of the Tits e8: `Der(𝔠)`, `𝔠0 ⊗ J0`, `Der(J)`.
    pub tits_blocks: [usize; 3],
    /// `L0` and the six `L_{±k}` of the Z3 grading.
    pub l0: usize,
    pub l_k: [usize; 6],
    /// Part of `L0` spanned by `D7`.
    pub d7: usize,
    /// Root counts of the e6 decomposition `a2 ; 3×(J, J̄) ; g0` and its rank.
    pub e6_a2_roots: usize,
    pub e6_jordan_roots: [usize; 6],
    pub e6_g0_roots: usize,
    pub e6_rank: usize,
}

/// Machine-checked dimension bookkeeping of the rewriting
/// `e8 → Der(𝔠) ⊕ 𝔠0⊗J0 ⊕ Der(J) → D7 ⊕ 6×L_{±k} ⊕ e6 → … → 4×a2 ⊕ 3×(J^8, J̄^8) ⊕ 3×(J^2, J̄^2)`.
pub fn chain_decompose_e8(inp: &ChainInputs) -> Result<Chain, TitsError> {
    let total = 248;
    let [dh, mid, dj] = inp.tits_blocks;
    // the e6 inside L0 is iu7 ⊗ J0 ⊕ Der(J)
    let e6 = inp.l0 - inp.d7;
    let e6_a2 = inp.e6_a2_roots + 2;
    let e6_g0 = inp.e6_g0_roots + (inp.e6_rank - 2);
    let e6_j: usize = inp.e6_jordan_roots.iter().sum();
    let j8: usize = inp.l_k.iter().sum();
    let steps = vec![
        ("Der(𝔠) ⊕ 𝔠0⊗J0 ⊕ Der(J)".to_string(), vec![("Der(𝔠)".into(), dh), ("𝔠0⊗J0".into(), mid), ("Der(J)".into(), dj)]),
        (
            "D7 ⊕ ΣL±k ⊕ e6".to_string(),
            vec![("D7".into(), inp.d7), ("ΣL±k".into(), j8), ("iu7⊗J0 ⊕ Der(J)".into(), e6)],
        ),
        (
            "a2 ⊕ 3×(J8,J̄8) ⊕ (a2 ⊕ 3×(J2,J̄2) ⊕ g0)".to_string(),
            vec![
                ("a2^c".into(), inp.d7),
                ("3×(J8,J̄8)".into(), j8),
                ("a2^f".into(), e6_a2),
                ("3×(J2,J̄2)".into(), e6_j),
                ("g0 of e6".into(), e6_g0),
            ],
        ),
        (
            "4×a2 ⊕ 3×(J8,J̄8) ⊕ 3×(J2,J̄2)".to_string(),
            vec![
                ("a2^c".into(), inp.d7),
                ("a2^f".into(), e6_a2),
                ("a2^g1".into(), e6_g0 / 2),
                ("a2^g2".into(), e6_g0 - e6_g0 / 2),
                ("3×(J8,J̄8)".into(), j8),
                ("3×(J2,J̄2)".into(), e6_j),
            ],
        ),
    ];
    for (name, parts) in &steps {
        let got: usize = parts.iter().map(|(_, d)| d).sum();
        if got != total {
            return Err(TitsError::ChainMismatch { step: name.clone(), got, expected: total });
        }
    }
    let a2 = |l: &str, d: usize| ChainNode::leaf(l, d, d.saturating_sub(2));
    let jordan = |l: &str, parts: &[usize]| {
        ChainNode::node(l, parts.iter().enumerate().map(|(k, &d)| ChainNode::leaf(&format!("{l}[{k}]"), d, d)).collect())
    };
    let e6_node = ChainNode::node(
        "e6",
        vec![
            a2("a2^f", e6_a2),
            jordan("3×(J2,J̄2)", &inp.e6_jordan_roots),
            ChainNode::node("g0 of e6", vec![a2("a2^g1", e6_g0 / 2), a2("a2^g2", e6_g0 - e6_g0 / 2)]),
        ],
    );
    let tree = ChainNode::node("e8", vec![a2("a2^c", inp.d7), jordan("3×(J8,J̄8)", &inp.l_k), e6_node]);
    if tree.dim != total {
        return Err(TitsError::ChainMismatch { step: "tree".into(), got: tree.dim, expected: total });
    }
    Ok(Chain { steps, tree })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_lookup() {
        assert_eq!(types_with(35, 5), vec!["a5"]);
        assert_eq!(types_with(21, 3), vec!["b3", "c3"]);
        assert!(types_with(78, 6).contains(&"e6".to_string()));
        assert_eq!(types_with(16, 4), vec!["a2+a2"]);
    }

    #[test]
    fn small_cells() {
        let l = tits_construct(1, 1).unwrap();
        assert_eq!(l.dim(), 3);
        assert!(jacobi_check(&l, &JacobiMode::Exhaustive).is_ok());
        let l = tits_construct(2, 1).unwrap();
        assert_eq!(l.dim(), 8);
        assert!(jacobi_check(&l, &JacobiMode::Exhaustive).is_ok());
    }
}
