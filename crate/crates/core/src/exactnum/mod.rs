//! Exact scalars: rationals and the field Q(i, √2, √3).
//!
//! Every coordinate that appears in the root systems, the projections and the
//! octonion/Zorn bridge lives in [`FieldScalar`]. Algebras whose structure
//! constants are rational use [`Rational`] directly; both implement [`Scalar`],
//! which is what the generic algebra code is written against.

mod field;
pub mod linalg;
mod rational;

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use thiserror::Error;

pub use field::{FieldScalar, Surd};
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar from {0:?}")]
    Parse(String),
    #[error("value is not real")]
    NotReal,
}

/// Common interface of the exact scalar types.
pub trait Scalar:
    Clone
    + Eq
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(q: Rational) -> Self;
    fn inv(&self) -> Result<Self, NumError>;
    /// Complex conjugation; the identity on real scalars.
    fn conj(&self) -> Self;
    /// Returns the value as a rational when it is one.
    fn to_rational(&self) -> Option<Rational>;
    fn mul_ref(&self, rhs: &Self) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::int(n))
    }

    /// `self += a * b`.
    fn add_product(&mut self, a: &Self, b: &Self) {
        if !a.is_zero() && !b.is_zero() {
            *self += &a.mul_ref(b);
        }
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational::ZERO
    }
    fn one() -> Self {
        Rational::ONE
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn from_rational(q: Rational) -> Self {
        q
    }
    fn inv(&self) -> Result<Self, NumError> {
        self.recip()
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Scalar for FieldScalar {
    fn zero() -> Self {
        FieldScalar::zero()
    }
    fn one() -> Self {
        FieldScalar::one()
    }
    fn is_zero(&self) -> bool {
        FieldScalar::is_zero(self)
    }
    fn from_rational(q: Rational) -> Self {
        FieldScalar::from(q)
    }
    fn inv(&self) -> Result<Self, NumError> {
        FieldScalar::inv(self)
    }
    fn conj(&self) -> Self {
        FieldScalar::conj(self)
    }
    fn to_rational(&self) -> Option<Rational> {
        FieldScalar::to_rational(self)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}
