//! Exact-arithmetic toolkit for the exceptional Lie algebras.
//!
//! The crate is organized bottom-up:
//!
//! - [`exactnum`]: rationals, the field Q(i, √2, √3) and exact linear algebra.
//! - [`rootspace`]: the root systems g2, f4, e6, e7, e8 in R^8 and their checks.
//! - [`projection`]: the a2-plane decomposition, the quantum-number planes,
//!   embeddings of subsystems and the nested e8 decomposition.
//! - [`hurwitz`]: the four Hurwitz algebras, the Zorn bridge and derivations.
//! - [`jordan`]: exceptional and lower Jordan algebras, pairs, and TKK.
//! - [`lie`]: Lie algebras from structure constants, Jacobi checks and ranks.
//! - [`titslie`]: the Tits construction and the magic square.

pub mod exactnum;
pub mod rootspace;
pub mod projection;
pub mod lie;
pub mod hurwitz;
pub mod jordan;
pub mod titslie;

pub use exactnum::{FieldScalar, NumError, Rational, Scalar};
