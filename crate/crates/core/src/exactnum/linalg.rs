//! Exact dense linear algebra over any [`Scalar`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Rational, Scalar};

/// `row -= f * other`, skipping zero entries of `other`.
pub fn sub_scaled<S: Scalar>(row: &mut [S], f: &S, other: &[S]) {
    if f.is_zero() {
        return;
    }
    for (r, o) in row.iter_mut().zip(other) {
        if !o.is_zero() {
            *r -= &f.mul_ref(o);
        }
    }
}

/// `row += f * other`, skipping zero entries of `other`.
pub fn add_scaled<S: Scalar>(row: &mut [S], f: &S, other: &[S]) {
    if f.is_zero() {
        return;
    }
    for (r, o) in row.iter_mut().zip(other) {
        if !o.is_zero() {
            *r += &f.mul_ref(o);
        }
    }
}

pub fn scale<S: Scalar>(row: &mut [S], f: &S) {
    for r in row.iter_mut() {
        if !r.is_zero() {
            *r = r.mul_ref(f);
        }
    }
}

pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    let mut acc = S::zero();
    for (x, y) in a.iter().zip(b) {
        acc.add_product(x, y);
    }
    acc
}

pub fn is_zero_vec<S: Scalar>(v: &[S]) -> bool {
    v.iter().all(S::is_zero)
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref<S: Scalar>(rows: &[Vec<S>]) -> (Vec<Vec<S>>, Vec<usize>) {
    let mut out: Vec<Vec<S>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for row in rows {
        let mut w = row.clone();
        for (r, &p) in out.iter().zip(&pivots) {
            let f = w[p].clone();
            sub_scaled(&mut w, &f, r);
        }
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let inv = w[p].inv().expect("pivot is nonzero");
        scale(&mut w, &inv);
        for r in out.iter_mut() {
            let f = r[p].clone();
            sub_scaled(r, &f, &w);
        }
        out.push(w);
        pivots.push(p);
    }
    let mut order: Vec<usize> = (0..out.len()).collect();
    order.sort_by_key(|&k| pivots[k]);
    let rows = order.iter().map(|&k| out[k].clone()).collect();
    let piv = order.iter().map(|&k| pivots[k]).collect();
    (rows, piv)
}

pub fn rank<S: Scalar>(rows: &[Vec<S>]) -> usize {
    rref(rows).0.len()
}

/// The prime `2^61 − 1` used by [`rank_mod_p`].
pub const MOD_P: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MOD_P as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    acc
}

fn residue(q: &Rational) -> Option<u64> {
    let (n, d) = match q.as_small() {
        Some((n, d)) => (n.rem_euclid(MOD_P as i64) as u64, d.rem_euclid(MOD_P as i64) as u64),
        None => {
            let p = BigInt::from(MOD_P);
            (q.numer().mod_floor(&p).to_u64()?, q.denom().mod_floor(&p).to_u64()?)
        }
    };
    (d != 0).then(|| mul_mod(n, pow_mod(d, MOD_P - 2)))
}

/// Rank of the reduction modulo [`MOD_P`], or `None` when a denominator is
/// divisible by it. Every minor that survives the reduction is nonzero, so
/// this is a lower bound for the rank over Q.
pub fn rank_mod_p(rows: &[Vec<Rational>]) -> Option<usize> {
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(residue).collect()).collect::<Option<_>>()?;
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let inv = pow_mod(m[rank][c], MOD_P - 2);
        let pivot = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            if row[c] == 0 {
                continue;
            }
            let f = MOD_P - mul_mod(row[c], inv);
            for (x, y) in row.iter_mut().zip(&pivot).skip(c) {
                if *y != 0 {
                    *x = (*x + mul_mod(f, *y)) % MOD_P;
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

/// Basis of `{x : A x = 0}` for the matrix with the given rows and `ncols` columns.
pub fn kernel<S: Scalar>(rows: &[Vec<S>], ncols: usize) -> Vec<Vec<S>> {
    let (r, pivots) = rref(rows);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![S::zero(); ncols];
        v[free] = S::one();
        for (row, &p) in r.iter().zip(&pivots) {
            if !row[free].is_zero() {
                v[p] = -row[free].clone();
            }
        }
        basis.push(v);
    }
    basis
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for b in BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mm = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    'bases: for b in BASES {
        let mut x = 1u64;
        let (mut base, mut e) = (b % n, d);
        while e > 0 {
            if e & 1 == 1 {
                x = mm(x, base);
            }
            base = mm(base, base);
            e >>= 1;
        }
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mm(x, x);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Reduced row echelon form modulo `p` of an integer matrix: pivot columns and
/// the canonical kernel basis (1 on its free column).
fn kernel_mod(rows: &[Vec<BigInt>], ncols: usize, p: u64) -> (Vec<usize>, Vec<Vec<u64>>) {
    let big_p = BigInt::from(p);
    let mm = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let inv = |a: u64| {
        let (mut acc, mut base, mut e) = (1u64, a, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                acc = mm(acc, base);
            }
            base = mm(base, base);
            e >>= 1;
        }
        acc
    };
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.mod_floor(&big_p).to_u64().expect("reduced")).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..m.len()).find(|&k| m[k][c] != 0) else {
            continue;
        };
        m.swap(r, k);
        let f = inv(m[r][c]);
        for x in m[r].iter_mut() {
            *x = mm(*x, f);
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let g = p - row[c];
            for (x, y) in row.iter_mut().zip(&pivot).skip(c) {
                if *y != 0 {
                    *x = (*x + mm(g, *y)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let basis = (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![0u64; ncols];
            v[free] = 1;
            for (row, &c) in m.iter().zip(&pivots) {
                v[c] = (p - row[free]) % p;
            }
            v
        })
        .collect();
    (pivots, basis)
}

/// `n/d` with `|n|, d ≤ √(m/2)` and `n ≡ a d (mod m)`, if it exists.
fn reconstruct(a: &BigInt, m: &BigInt) -> Option<(BigInt, BigInt)> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        (r0, r1, t0, t1) = (r1, r2, t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    Some(if t1.is_negative() { (-r1, -t1) } else { (r1, t1) })
}

fn integer_rows(rows: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| {
            let den = r.iter().fold(BigInt::one(), |acc, q| acc.lcm(&q.denom()));
            r.iter().map(|q| q.numer() * (&den / q.denom())).collect()
        })
        .collect()
}

/// Kernel of a rational matrix by elimination modulo word-sized primes,
/// Chinese remaindering and rational reconstruction.
///
/// Each reconstructed vector is checked exactly against the matrix. A modular
/// kernel is never smaller than the rational one, so a full set of verified
/// vectors is a basis; the result equals [`kernel`]. Falls back to [`kernel`]
/// when reconstruction does not settle.
pub fn kernel_multimodular(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    const MAX_PRIMES: usize = 48;
    let a = integer_rows(rows);
    let mut modulus = BigInt::one();
    let mut acc: Vec<Vec<BigInt>> = Vec::new();
    let mut pivots: Option<Vec<usize>> = None;
    let mut p = MOD_P;
    let mut used = 0;
    while used < MAX_PRIMES {
        while !is_prime(p) {
            p -= 2;
        }
        let (piv, basis) = kernel_mod(&a, ncols, p);
        p -= 2;
        used += 1;
        match &pivots {
            // a prime of lower rank is unlucky; one of higher rank makes the
            // earlier ones unlucky
            Some(old) if piv.len() < old.len() || (piv.len() == old.len() && piv != *old) => continue,
            Some(old) if piv.len() > old.len() => {
                modulus = BigInt::one();
                acc.clear();
            }
            _ => {}
        }
        let fresh = acc.is_empty();
        let big_p = BigInt::from(p + 2);
        if fresh {
            acc = basis.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect();
            modulus = big_p;
        } else {
            // x ≡ acc (mod modulus), x ≡ b (mod p)
            let inv = BigInt::from(modulus.mod_floor(&big_p).to_u64().expect("reduced")).modpow(&(&big_p - 2u32), &big_p);
            for (cur, v) in acc.iter_mut().zip(&basis) {
                for (c, &b) in cur.iter_mut().zip(v) {
                    let t = ((BigInt::from(b) - &*c) * &inv).mod_floor(&big_p);
                    *c += &modulus * t;
                }
            }
            modulus *= big_p;
        }
        pivots = Some(piv);
        if used < 2 {
            continue;
        }
        if let Some(out) = verified_reconstruction(&a, &acc, &modulus) {
            return out;
        }
    }
    kernel(rows, ncols)
}

fn verified_reconstruction(a: &[Vec<BigInt>], acc: &[Vec<BigInt>], modulus: &BigInt) -> Option<Vec<Vec<Rational>>> {
    let mut out = Vec::with_capacity(acc.len());
    for v in acc {
        let fracs: Vec<(BigInt, BigInt)> = v.iter().map(|x| reconstruct(x, modulus)).collect::<Option<_>>()?;
        let den = fracs.iter().fold(BigInt::one(), |l, (_, d)| l.lcm(d));
        let ints: Vec<BigInt> = fracs.iter().map(|(n, d)| n * (&den / d)).collect();
        for row in a {
            let mut s = BigInt::zero();
            for (x, y) in row.iter().zip(&ints) {
                if !x.is_zero() && !y.is_zero() {
                    s += x * y;
                }
            }
            if !s.is_zero() {
                return None;
            }
        }
        out.push(fracs.into_iter().map(|(n, d)| Rational::from_big(n, d)).collect());
    }
    Some(out)
}

/// Some solution of `A x = b`, or `None` when the system is inconsistent.
pub fn solve<S: Scalar>(a: &[Vec<S>], b: &[S]) -> Option<Vec<S>> {
    let ncols = a.first().map_or(0, Vec::len);
    let aug: Vec<Vec<S>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.contains(&ncols) {
        return None;
    }
    let mut x = vec![S::zero(); ncols];
    for (row, &p) in r.iter().zip(&pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}

/// Product of row-major matrices.
pub fn mat_mul<S: Scalar>(a: &[Vec<S>], b: &[Vec<S>]) -> Vec<Vec<S>> {
    let m = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = vec![S::zero(); m];
            for (k, x) in row.iter().enumerate() {
                add_scaled(&mut out, x, &b[k]);
            }
            out
        })
        .collect()
}

pub fn mat_vec<S: Scalar>(a: &[Vec<S>], v: &[S]) -> Vec<S> {
    a.iter().map(|row| dot(row, v)).collect()
}

pub fn transpose<S: Scalar>(a: &[Vec<S>]) -> Vec<Vec<S>> {
    let m = a.first().map_or(0, Vec::len);
    (0..m).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

#[derive(Debug, Clone)]
struct EchelonRow<S> {
    pivot: usize,
    row: Vec<S>,
    /// The row written in terms of the chosen basis vectors.
    combo: Vec<S>,
}

/// Incrementally grown span with exact coordinates.
///
/// Vectors offered to [`SpanBasis::insert`] are kept as basis vectors only when
/// independent of the earlier ones, so the basis is a subset of the inputs.
#[derive(Debug, Clone)]
pub struct SpanBasis<S> {
    dim: usize,
    basis: Vec<Vec<S>>,
    echelon: Vec<EchelonRow<S>>,
}

impl<S: Scalar> SpanBasis<S> {
    pub fn new(dim: usize) -> Self {
        SpanBasis { dim, basis: Vec::new(), echelon: Vec::new() }
    }

    pub fn from_vectors(dim: usize, vectors: impl IntoIterator<Item = Vec<S>>) -> Self {
        let mut s = Self::new(dim);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<S>] {
        &self.basis
    }

    fn reduce(&self, v: &[S]) -> (Vec<S>, Vec<S>) {
        let mut w = v.to_vec();
        let mut coords = vec![S::zero(); self.basis.len()];
        for e in &self.echelon {
            let f = w[e.pivot].clone();
            if f.is_zero() {
                continue;
            }
            sub_scaled(&mut w, &f, &e.row);
            add_scaled(&mut coords[..e.combo.len()], &f, &e.combo);
        }
        (w, coords)
    }

    /// Adds `v` to the basis if it is independent. Returns whether it was added.
    pub fn insert(&mut self, v: Vec<S>) -> bool {
        assert_eq!(v.len(), self.dim, "vector length must match the ambient dimension");
        let (mut w, coords) = self.reduce(&v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let n = self.basis.len();
        let mut combo: Vec<S> = coords.into_iter().map(|c| -c).collect();
        combo.push(S::one());
        let inv = w[p].inv().expect("pivot is nonzero");
        scale(&mut w, &inv);
        scale(&mut combo, &inv);
        for e in &mut self.echelon {
            let g = e.row[p].clone();
            if g.is_zero() {
                continue;
            }
            sub_scaled(&mut e.row, &g, &w);
            e.combo.resize(n + 1, S::zero());
            sub_scaled(&mut e.combo, &g, &combo);
        }
        self.echelon.push(EchelonRow { pivot: p, row: w, combo });
        self.basis.push(v);
        true
    }

    pub fn contains(&self, v: &[S]) -> bool {
        is_zero_vec(&self.reduce(v).0)
    }

    /// Coordinates of `v` in the chosen basis, or `None` outside the span.
    pub fn coordinates(&self, v: &[S]) -> Option<Vec<S>> {
        let (w, coords) = self.reduce(v);
        is_zero_vec(&w).then_some(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::int(x)).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let a = vec![v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[0, 1, 1])];
        assert_eq!(rank(&a), 2);
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 1);
        assert!(is_zero_vec(&mat_vec(&a, &k[0])));
    }

    #[test]
    fn modular_rank() {
        let a = vec![v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[0, 1, 1])];
        assert_eq!(rank_mod_p(&a), Some(2));
        let h = vec![
            vec![Rational::frac(1, 2), Rational::frac(1, 3)],
            vec![Rational::frac(1, 3), Rational::frac(1, 4)],
        ];
        assert_eq!(rank_mod_p(&h), Some(2));
        assert_eq!(rank_mod_p(&[vec![Rational::frac(1, MOD_P as i64)]]), None);
    }

    #[test]
    fn multimodular_kernel_matches_exact() {
        let a = vec![
            vec![Rational::frac(1, 3), Rational::frac(-7, 5), Rational::int(2), Rational::int(0)],
            vec![Rational::frac(2, 3), Rational::frac(-14, 5), Rational::int(4), Rational::int(0)],
            vec![Rational::int(1), Rational::frac(1, 11), Rational::int(0), Rational::frac(5, 2)],
        ];
        assert_eq!(kernel_multimodular(&a, 4), kernel(&a, 4));
        let big = Rational::frac(1 << 40, 3) * Rational::frac(1 << 40, 7);
        let b = vec![vec![big, Rational::int(1), Rational::int(-1)]];
        assert_eq!(kernel_multimodular(&b, 3), kernel(&b, 3));
        assert!(is_prime(MOD_P) && !is_prime(MOD_P - 2 * 3));
    }

    #[test]
    fn span_coordinates() {
        let mut s = SpanBasis::new(3);
        assert!(s.insert(v(&[1, 1, 0])));
        assert!(s.insert(v(&[0, 1, 1])));
        assert!(!s.insert(v(&[1, 2, 1])));
        let c = s.coordinates(&v(&[2, 5, 3])).unwrap();
        assert_eq!(c, v(&[2, 3]));
        assert!(s.coordinates(&v(&[1, 0, 0])).is_none());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = vec![v(&[2, 1]), v(&[1, 3])];
        let x = solve(&a, &v(&[3, 4])).unwrap();
        assert_eq!(x, v(&[1, 1]));
        let b = vec![v(&[1, 1]), v(&[2, 2])];
        assert!(solve(&b, &v(&[1, 3])).is_none());
    }
}
