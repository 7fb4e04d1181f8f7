//! The field Q(i, √2, √3).
//!
//! An element is stored as eight rationals
//! `a + b√2 + c√3 + d√6 + i(e + f√2 + g√3 + h√6)`.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use super::{NumError, Rational};

/// The real surds spanning Q(√2, √3) over Q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Surd {
    One,
    R2,
    R3,
    R6,
}

impl Surd {
    const ALL: [Surd; 4] = [Surd::One, Surd::R2, Surd::R3, Surd::R6];

    fn index(self) -> usize {
        self as usize
    }

    fn suffix(self) -> &'static str {
        match self {
            Surd::One => "",
            Surd::R2 => "r2",
            Surd::R3 => "r3",
            Surd::R6 => "r6",
        }
    }

    /// The squared value of the surd.
    pub fn square(self) -> i64 {
        [1, 2, 3, 6][self.index()]
    }
}

/// `SURD_PRODUCT[p][q] = (k, r)` means `s_p * s_q = k * s_r`.
const SURD_PRODUCT: [[(i64, usize); 4]; 4] = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (2, 0), (1, 3), (2, 2)],
    [(1, 2), (1, 3), (3, 0), (3, 1)],
    [(1, 3), (2, 2), (3, 1), (6, 0)],
];

/// An exact element of Q(i, √2, √3).
///
/// The derived ordering is lexicographic on the eight rational components. It
/// is a canonical total order for sorting, not the numeric order; use
/// [`FieldScalar::cmp_real`] to compare real values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldScalar {
    c: [Rational; 8],
}

impl FieldScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from(Rational::ONE)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        let mut x = Self::zero();
        x.c[4] = Rational::ONE;
        x
    }

    /// `q * s` for a rational `q` and a surd `s`.
    pub fn surd(q: Rational, s: Surd) -> Self {
        let mut x = Self::zero();
        x.c[s.index()] = q;
        x
    }

    /// Builds an element from its eight components in storage order.
    pub fn from_components(c: [Rational; 8]) -> Self {
        FieldScalar { c }
    }

    pub fn components(&self) -> &[Rational; 8] {
        &self.c
    }

    /// Real-part coefficient of the given surd.
    pub fn re(&self, s: Surd) -> &Rational {
        &self.c[s.index()]
    }

    /// Imaginary-part coefficient of the given surd.
    pub fn im(&self, s: Surd) -> &Rational {
        &self.c[4 + s.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rational::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.c[4..].iter().all(Rational::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.c[1..].iter().all(Rational::is_zero) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    /// The real part as an element of the field.
    pub fn real_part(&self) -> Self {
        let mut x = self.clone();
        for v in &mut x.c[4..] {
            *v = Rational::ZERO;
        }
        x
    }

    /// The imaginary part as a real element of the field.
    pub fn imag_part(&self) -> Self {
        let mut x = Self::zero();
        for k in 0..4 {
            x.c[k] = self.c[4 + k].clone();
        }
        x
    }

    /// Complex conjugation.
    pub fn conj(&self) -> Self {
        let mut x = self.clone();
        for v in &mut x.c[4..] {
            *v = -&*v;
        }
        x
    }

    /// The automorphism √2 ↦ -√2.
    pub fn flip_sqrt2(&self) -> Self {
        let mut x = self.clone();
        for k in [1, 3, 5, 7] {
            x.c[k] = -&x.c[k];
        }
        x
    }

    /// The automorphism √3 ↦ -√3.
    pub fn flip_sqrt3(&self) -> Self {
        let mut x = self.clone();
        for k in [2, 3, 6, 7] {
            x.c[k] = -&x.c[k];
        }
        x
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let mut x = self.clone();
        if q.is_zero() {
            return Self::zero();
        }
        for v in &mut x.c {
            if !v.is_zero() {
                *v = &*v * q;
            }
        }
        x
    }

    pub fn inv(&self) -> Result<Self, NumError> {
        if self.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        let xc = self.conj();
        let n = self * &xc;
        let n3 = n.flip_sqrt3();
        let m = &n * &n3;
        let m2 = m.flip_sqrt2();
        let r = (&m * &m2).to_rational().expect("norm down to Q is rational");
        Ok((&(&xc * &n3) * &m2).scale(&r.recip()?))
    }

    /// Exact sign of a real element.
    pub fn signum(&self) -> Result<Ordering, NumError> {
        if !self.is_real() {
            return Err(NumError::NotReal);
        }
        let [a, b, c, d] = [&self.c[0], &self.c[1], &self.c[2], &self.c[3]];
        let sa = sign_q2(a, b);
        let sb = sign_q2(c, d);
        if sb == Ordering::Equal || sa == sb {
            return Ok(if sa == Ordering::Equal { sb } else { sa });
        }
        if sa == Ordering::Equal {
            return Ok(sb);
        }
        // Opposite signs: compare A^2 with 3 B^2 where the value is A + √3 B.
        let two = Rational::int(2);
        let r0 = a * a + &(&two * &(b * b)) - Rational::int(3) * (c * c) - Rational::int(6) * (d * d);
        let r1 = &two * &(a * b) - Rational::int(6) * (c * d);
        Ok(match sign_q2(&r0, &r1) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        })
    }

    /// Numeric comparison of two real elements.
    pub fn cmp_real(&self, other: &Self) -> Result<Ordering, NumError> {
        (self - other).signum()
    }

    /// `√q` inside the field, when it lies there.
    pub fn sqrt_of_rational(q: &Rational) -> Option<Self> {
        let (q, imag) = if q.signum() == Ordering::Less { (-q, true) } else { (q.clone(), false) };
        for s in Surd::ALL {
            let m = Rational::int(s.square());
            if let Some(r) = (&q / &m).sqrt_exact() {
                let root = Self::surd(r, s);
                return Some(if imag { &root * &Self::i() } else { root });
            }
        }
        None
    }

    /// Square root of a rational element, when it lies in the field.
    pub fn sqrt_real(&self) -> Option<Self> {
        self.to_rational().and_then(|q| Self::sqrt_of_rational(&q))
    }

    /// Floating-point approximation as `(re, im)`.
    pub fn to_f64(&self) -> (f64, f64) {
        let roots = [1.0, 2f64.sqrt(), 3f64.sqrt(), 6f64.sqrt()];
        let mut re = 0.0;
        let mut im = 0.0;
        for k in 0..4 {
            re += self.c[k].to_f64() * roots[k];
            im += self.c[4 + k].to_f64() * roots[k];
        }
        (re, im)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (p, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (q, y) in rhs.c.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let (k, r) = SURD_PRODUCT[p % 4][q % 4];
                let both_imag = p >= 4 && q >= 4;
                let target = r + 4 * ((p / 4) ^ (q / 4));
                let mut term = x * y;
                if k != 1 {
                    term = term * Rational::int(k);
                }
                if both_imag {
                    out.c[target] -= &term;
                } else {
                    out.c[target] += &term;
                }
            }
        }
        out
    }
}

fn sign_q2(a: &Rational, b: &Rational) -> Ordering {
    let (sa, sb) = (a.signum(), b.signum());
    if sb == Ordering::Equal || sa == sb {
        return if sa == Ordering::Equal { sb } else { sa };
    }
    if sa == Ordering::Equal {
        return sb;
    }
    match (a * a).cmp(&(Rational::int(2) * (b * b))) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => Ordering::Equal,
    }
}

impl From<Rational> for FieldScalar {
    fn from(q: Rational) -> Self {
        Self::surd(q, Surd::One)
    }
}

impl From<i64> for FieldScalar {
    fn from(n: i64) -> Self {
        Self::from(Rational::int(n))
    }
}

fn write_real_part(f: &mut fmt::Formatter<'_>, parts: &[Rational]) -> fmt::Result {
    let mut first = true;
    for (q, s) in parts.iter().zip(Surd::ALL) {
        if q.is_zero() {
            continue;
        }
        let body = if s == Surd::One { q.to_string() } else { format!("{q}*{}", s.suffix()) };
        if !first && !body.starts_with('-') {
            f.write_str("+")?;
        }
        f.write_str(&body)?;
        first = false;
    }
    Ok(())
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let re_zero = self.c[..4].iter().all(Rational::is_zero);
        write_real_part(f, &self.c[..4])?;
        if !self.is_real() {
            if !re_zero {
                f.write_str("+")?;
            }
            f.write_str("i*(")?;
            write_real_part(f, &self.c[4..])?;
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_real_part(s: &str, out: &mut [Rational]) -> Result<(), NumError> {
    let bad = || NumError::Parse(s.to_string());
    let s = s.trim();
    if s.is_empty() {
        return Err(bad());
    }
    let mut terms = Vec::new();
    let mut start = 0;
    for (k, ch) in s.char_indices() {
        if (ch == '+' || ch == '-') && k > 0 {
            terms.push(&s[start..k]);
            start = k;
        }
    }
    terms.push(&s[start..]);
    for term in terms {
        let term = term.strip_prefix('+').unwrap_or(term);
        let (sign, body) = match term.strip_prefix('-') {
            Some(rest) => ("-", rest),
            None => ("", term),
        };
        if let Some(surd) = Surd::ALL.into_iter().find(|s| *s != Surd::One && s.suffix() == body) {
            out[surd.index()] += &Rational::int(if sign == "-" { -1 } else { 1 });
            continue;
        }
        let (coef, surd) = match term.split_once('*') {
            Some((c, r)) => {
                let surd = Surd::ALL
                    .into_iter()
                    .find(|s| *s != Surd::One && s.suffix() == r.trim())
                    .ok_or_else(bad)?;
                (c, surd)
            }
            None => (term, Surd::One),
        };
        let q: Rational = coef.parse().map_err(|_| bad())?;
        out[surd.index()] += &q;
    }
    Ok(())
}

impl FromStr for FieldScalar {
    type Err = NumError;

    /// Parses the textual format produced by `Display`, such as
    /// `1/2+3*r2-1*r6+i*(1)`. A bare surd like `-r3` is also accepted.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut x = FieldScalar::zero();
        if s == "0" {
            return Ok(x);
        }
        let (re, im) = match s.find("i*(") {
            Some(pos) => {
                let inner = s[pos + 3..].strip_suffix(')').ok_or_else(|| NumError::Parse(s.clone()))?;
                let re = s[..pos].strip_suffix('+').unwrap_or(&s[..pos]);
                (re.to_string(), Some(inner.to_string()))
            }
            None => (s.clone(), None),
        };
        if !re.is_empty() {
            parse_real_part(&re, &mut x.c[..4])?;
        }
        if let Some(im) = im {
            parse_real_part(&im, &mut x.c[4..])?;
        }
        Ok(x)
    }
}

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        -&self
    }
}

impl Neg for &FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        let mut x = self.clone();
        for v in &mut x.c {
            if !v.is_zero() {
                *v = -&*v;
            }
        }
        x
    }
}

impl AddAssign<&FieldScalar> for FieldScalar {
    fn add_assign(&mut self, rhs: &FieldScalar) {
        for (a, b) in self.c.iter_mut().zip(&rhs.c) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&FieldScalar> for FieldScalar {
    fn sub_assign(&mut self, rhs: &FieldScalar) {
        for (a, b) in self.c.iter_mut().zip(&rhs.c) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl AddAssign<FieldScalar> for FieldScalar {
    fn add_assign(&mut self, rhs: FieldScalar) {
        *self += &rhs;
    }
}

impl SubAssign<FieldScalar> for FieldScalar {
    fn sub_assign(&mut self, rhs: FieldScalar) {
        *self -= &rhs;
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&FieldScalar> for &FieldScalar {
            type Output = FieldScalar;
            fn $m(self, rhs: &FieldScalar) -> FieldScalar {
                let f: fn(&FieldScalar, &FieldScalar) -> FieldScalar = $body;
                f(self, rhs)
            }
        }
        impl $tr<FieldScalar> for FieldScalar {
            type Output = FieldScalar;
            fn $m(self, rhs: FieldScalar) -> FieldScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FieldScalar> for FieldScalar {
            type Output = FieldScalar;
            fn $m(self, rhs: &FieldScalar) -> FieldScalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<FieldScalar> for &FieldScalar {
            type Output = FieldScalar;
            fn $m(self, rhs: FieldScalar) -> FieldScalar {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| {
    let mut x = a.clone();
    x += b;
    x
});
binop!(Sub, sub, |a, b| {
    let mut x = a.clone();
    x -= b;
    x
});
binop!(Mul, mul, |a, b| a.mul_impl(b));
binop!(Div, div, |a, b| a.mul_impl(&b.inv().expect("division by zero")));

impl Sum for FieldScalar {
    fn sum<I: Iterator<Item = FieldScalar>>(iter: I) -> Self {
        iter.fold(FieldScalar::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn surd_products() {
        let r2 = FieldScalar::surd(q(1, 1), Surd::R2);
        let r3 = FieldScalar::surd(q(1, 1), Surd::R3);
        let r6 = FieldScalar::surd(q(1, 1), Surd::R6);
        assert_eq!(&r2 * &r3, r6);
        assert_eq!(&r2 * &r6, FieldScalar::surd(q(2, 1), Surd::R3));
        assert_eq!(&r3 * &r6, FieldScalar::surd(q(3, 1), Surd::R2));
        assert_eq!(&r6 * &r6, FieldScalar::from(6));
        assert_eq!(&FieldScalar::i() * &FieldScalar::i(), FieldScalar::from(-1));
    }

    #[test]
    fn display_format() {
        let x: FieldScalar = "1/2-3*r2+i*(1*r6)".parse().unwrap();
        assert_eq!(x.to_string(), "1/2-3*r2+i*(1*r6)");
        assert_eq!(FieldScalar::zero().to_string(), "0");
        assert_eq!(FieldScalar::i().to_string(), "i*(1)");
        assert_eq!("-2/3*r3".parse::<FieldScalar>().unwrap(), FieldScalar::surd(q(-2, 3), Surd::R3));
    }

    #[test]
    fn signs_of_nested_surds() {
        let x: FieldScalar = "-7/5+1*r2".parse().unwrap();
        assert_eq!(x.signum().unwrap(), Ordering::Greater);
        let y: FieldScalar = "5-2*r6".parse().unwrap();
        assert_eq!(y.signum().unwrap(), Ordering::Greater);
        let z: FieldScalar = "1*r2+1*r3-1*r6-1/2".parse().unwrap();
        let f = z.to_f64().0;
        assert_eq!(z.signum().unwrap(), if f > 0.0 { Ordering::Greater } else { Ordering::Less });
        assert!(FieldScalar::i().signum().is_err());
    }

    #[test]
    fn square_roots() {
        let s = FieldScalar::sqrt_of_rational(&q(2, 3)).unwrap();
        assert_eq!(&s * &s, FieldScalar::from(q(2, 3)));
        assert_eq!(s, FieldScalar::surd(q(1, 3), Surd::R6));
        assert!(FieldScalar::sqrt_of_rational(&q(5, 1)).is_none());
        let t = FieldScalar::sqrt_of_rational(&q(-3, 1)).unwrap();
        assert_eq!(&t * &t, FieldScalar::from(-3));
    }
}
