//! Exact univariate and Laurent polynomial arithmetic.
//!
//! Polynomials are generic over a [`Ring`] context: GF(q) via
//! [`FieldSpec`](crate::gf::FieldSpec), the integers, the rationals, or a
//! polynomial ring over one of those when a parameter must stay symbolic.

mod decompose;
mod dense;
mod dickson;
mod laurent;
mod lucas;
mod ring;
pub mod difference;

use thiserror::Error;

pub use decompose::decompose_tame;
pub use dense::DensePoly;
pub use dickson::{dickson, is_function_of_dickson};
pub use laurent::LaurentPoly;
pub use lucas::binom_mod_p;
pub use ring::{binomial, Field, Integers, PolyRing, Rationals, Ring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials live over different coefficient rings")]
    RingMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("wild decomposition unsupported: characteristic {p} divides the outer degree {outer}")]
    WildDecomposition { p: u64, outer: usize },
    #[error("right-component degree {d} does not divide {n}")]
    DegreeNotDivisor { n: usize, d: usize },
    #[error("cannot decompose the zero or a constant polynomial")]
    NotDecomposable,
    #[error("2 is not invertible in characteristic 2")]
    EvenCharacteristic,
    #[error("exponent must be even and at least 2, got {0}")]
    BadExponent(u64),
}
