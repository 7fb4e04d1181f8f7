//! Arbitrary-precision rationals with an `i64` fast path.
//!
//! Values whose reduced numerator and denominator fit in an `i64` are kept
//! inline; everything else spills to a pair of [`BigInt`]s. The representation
//! is canonical, so derived equality and hashing are value equality.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::NumError;

/// An exact rational number in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Numerator is never `i64::MIN`, denominator is positive.
    Small(i64, i64),
    Big(Box<(BigInt, BigInt)>),
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    a.gcd(&b)
}

impl Rational {
    pub const ZERO: Rational = Rational(Repr::Small(0, 1));
    pub const ONE: Rational = Rational(Repr::Small(1, 1));

    /// Builds `n / d`, failing when `d` is zero.
    pub fn new(n: i64, d: i64) -> Result<Self, NumError> {
        if d == 0 {
            return Err(NumError::DivisionByZero);
        }
        Ok(Self::from_i128(n as i128, d as i128))
    }

    /// Builds the integer `n`.
    pub fn int(n: i64) -> Self {
        if n == i64::MIN {
            Self::from_big(BigInt::from(n), BigInt::one())
        } else {
            Rational(Repr::Small(n, 1))
        }
    }

    /// Shorthand for `n / d` with a nonzero literal denominator.
    ///
    /// # Panics
    /// Panics when `d == 0`.
    pub fn frac(n: i64, d: i64) -> Self {
        Self::new(n, d).expect("nonzero denominator")
    }

    fn from_i128(n: i128, d: i128) -> Self {
        debug_assert!(d != 0);
        let g = gcd_i128(n, d);
        let (mut n, mut d) = (n / g, d / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(a), Ok(b)) if a != i64::MIN => Rational(Repr::Small(a, b)),
            _ => Rational(Repr::Big(Box::new((BigInt::from(n), BigInt::from(d))))),
        }
    }

    pub(crate) fn from_big(n: BigInt, d: BigInt) -> Self {
        debug_assert!(!d.is_zero());
        let g = n.gcd(&d);
        let (mut n, mut d) = (n / &g, d / g);
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        match (n.to_i64(), d.to_i64()) {
            (Some(a), Some(b)) if a != i64::MIN => Rational(Repr::Small(a, b)),
            _ => Rational(Repr::Big(Box::new((n, d)))),
        }
    }

    fn to_big(&self) -> (BigInt, BigInt) {
        match &self.0 {
            Repr::Small(n, d) => (BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (b.0.clone(), b.1.clone()),
        }
    }

    /// Returns the numerator and denominator when both fit in `i64`.
    pub fn as_small(&self) -> Option<(i64, i64)> {
        match self.0 {
            Repr::Small(n, d) => Some((n, d)),
            Repr::Big(_) => None,
        }
    }

    pub fn numer(&self) -> BigInt {
        self.to_big().0
    }

    pub fn denom(&self) -> BigInt {
        self.to_big().1
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_integer(&self) -> bool {
        matches!(self.0, Repr::Small(_, 1))
    }

    pub fn signum(&self) -> Ordering {
        match &self.0 {
            Repr::Small(n, _) => n.cmp(&0),
            Repr::Big(b) => b.0.sign().cmp(&num_bigint::Sign::NoSign),
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse.
    pub fn recip(&self) -> Result<Self, NumError> {
        match &self.0 {
            Repr::Small(0, _) => Err(NumError::DivisionByZero),
            Repr::Small(n, d) => Ok(Self::from_i128(*d as i128, *n as i128)),
            Repr::Big(b) => Ok(Self::from_big(b.1.clone(), b.0.clone())),
        }
    }

    /// Exact square root when `self` is the square of a rational.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.signum() == Ordering::Less {
            return None;
        }
        let (n, d) = self.to_big();
        let (rn, rd) = (n.sqrt(), d.sqrt());
        if &rn * &rn == n && &rd * &rd == d {
            Some(Self::from_big(rn, rd))
        } else {
            None
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Rational::ONE;
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small(n, d) => *n as f64 / *d as f64,
            Repr::Big(b) => {
                let n = b.0.to_f64().unwrap_or(f64::NAN);
                let d = b.1.to_f64().unwrap_or(f64::NAN);
                if n.is_finite() && d.is_finite() {
                    n / d
                } else {
                    let shift = b.0.bits().max(b.1.bits()).saturating_sub(900) as usize;
                    let n = (&b.0 >> shift).to_f64().unwrap_or(0.0);
                    let d = (&b.1 >> shift).to_f64().unwrap_or(1.0);
                    n / d
                }
            }
        }
    }

    fn add_impl(&self, rhs: &Self, negate_rhs: bool) -> Self {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &rhs.0) {
            let c = if negate_rhs { -*c } else { *c };
            if *b == 1 && *d == 1 {
                return Self::from_i128(*a as i128 + c as i128, 1);
            }
            let g = gcd_i128(*b as i128, *d as i128);
            let (b1, d1) = (*b as i128 / g, *d as i128 / g);
            let num = (*a as i128)
                .checked_mul(d1)
                .and_then(|x| (c as i128).checked_mul(b1).and_then(|y| x.checked_add(y)));
            let den = (*b as i128).checked_mul(d1);
            if let (Some(n), Some(den)) = (num, den) {
                return Self::from_i128(n, den);
            }
        }
        let (a, b) = self.to_big();
        let (mut c, d) = rhs.to_big();
        if negate_rhs {
            c = -c;
        }
        Self::from_big(a * &d + c * &b, b * d)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &rhs.0) {
            if *a == 0 || *c == 0 {
                return Rational::ZERO;
            }
            let g1 = gcd_i128(*a as i128, *d as i128);
            let g2 = gcd_i128(*c as i128, *b as i128);
            let n = (*a as i128 / g1) * (*c as i128 / g2);
            let den = (*b as i128 / g2) * (*d as i128 / g1);
            let mut n = n;
            let mut den = den;
            if den < 0 {
                n = -n;
                den = -den;
            }
            return match (i64::try_from(n), i64::try_from(den)) {
                (Ok(x), Ok(y)) if x != i64::MIN => Rational(Repr::Small(x, y)),
                _ => Rational(Repr::Big(Box::new((BigInt::from(n), BigInt::from(den))))),
            };
        }
        let (a, b) = self.to_big();
        let (c, d) = rhs.to_big();
        Self::from_big(a * c, b * d)
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::int(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::int(n as i64)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_big(n, BigInt::one())
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &other.0) {
            return (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128));
        }
        let (a, b) = self.to_big();
        let (c, d) = other.to_big();
        (a * d).cmp(&(c * b))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) if b.1.is_one() => write!(f, "{}", b.0),
            Repr::Big(b) => write!(f, "{}/{}", b.0, b.1),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = NumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || NumError::Parse(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        Ok(Rational::from_big(n, d))
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small(n, d) => Rational(Repr::Small(-n, *d)),
            Repr::Big(b) => Rational::from_big(-b.0.clone(), b.1.clone()),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                let f: fn(&Rational, &Rational) -> Rational = $body;
                f(self, rhs)
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                (&self).$m(rhs)
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.add_impl(b, false));
binop!(Sub, sub, |a, b| a.add_impl(b, true));
binop!(Mul, mul, |a, b| a.mul_impl(b));
binop!(Div, div, |a, b| a.mul_impl(&b.recip().expect("division by zero")));

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        *self = self.add_impl(rhs, false);
    }
}

impl AddAssign<Rational> for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        *self = self.add_impl(&rhs, false);
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        *self = self.add_impl(rhs, true);
    }
}

impl SubAssign<Rational> for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        *self = self.add_impl(&rhs, true);
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        *self = self.mul_impl(rhs);
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::ZERO, |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::ONE, |acc, x| acc * x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_normalizes_sign() {
        assert_eq!(Rational::frac(6, -4), Rational::frac(-3, 2));
        assert_eq!(Rational::frac(0, -7), Rational::ZERO);
        assert_eq!(Rational::frac(-3, 2).to_string(), "-3/2");
    }

    #[test]
    fn overflow_spills_to_big_and_back() {
        let big = Rational::int(i64::MAX) * Rational::int(i64::MAX);
        assert!(big.as_small().is_none());
        let back = &big / &Rational::int(i64::MAX);
        assert_eq!(back, Rational::int(i64::MAX));
        assert!(back.as_small().is_some());
        let min = Rational::int(i64::MIN);
        assert_eq!(-(-&min), min);
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-5", "7/3", "-12345678901234567890123/7"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn exact_sqrt() {
        assert_eq!(Rational::frac(9, 4).sqrt_exact(), Some(Rational::frac(3, 2)));
        assert_eq!(Rational::int(2).sqrt_exact(), None);
        assert_eq!(Rational::int(-4).sqrt_exact(), None);
    }
}
