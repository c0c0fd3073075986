//! Exact invariants of monomial ideals in a standard-graded polynomial ring
//! `A = K[x_1, ..., x_n]`.
//!
//! The crate computes Hilbert series, multiplicities, minimal graded Betti
//! numbers, the Betti bounds `U(I)` and `L(I)`, regularity, minimal primes and
//! localized multiplicities, and sweeps over powers `I^k` to study how
//! `e(A/I^k)` compares with `U(I^k)` as `k` grows.
//!
//! Linear algebra is generic over the scalar type (see [`linalg`]); the
//! concrete aliases below fix the choices the rest of the crate uses.

pub mod asymptotics;
pub mod corpus;
pub mod decomposition;
pub mod error;
pub mod hilbert;
pub mod io;
pub mod linalg;
pub mod monomial;
pub mod resolution;
pub mod sample;

pub use error::{Error, Result};
pub use linalg::FieldChar;
pub use monomial::{Monomial, MonomialIdeal, Ring};

/// Exact rationals used for `U(I)`, `L(I)`, ratios and limits.
pub type Rational = num_rational::BigRational;

/// Arbitrary precision integers backing fraction-free elimination.
pub type Integer = num_bigint::BigInt;

/// Exponent of a single variable in a monomial.
pub type Exponent = u32;

/// Integer coefficients of Hilbert numerators.
pub type Coeff = i64;

#[cfg(test)]
pub(crate) fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
