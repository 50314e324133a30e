//! Free graded-commutative algebra over the rationals.
//!
//! Even generators are polynomial, odd generators exterior. Products carry
//! the Koszul sign `uv = (-1)^{|u||v|} vu`.

mod matrix;
mod parse;
mod polynomial;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub use matrix::{rank_and_kernel, RationalMatrix};
pub use parse::parse_polynomial;
pub use polynomial::{FreeAlgebra, Generator, Monomial, Polynomial};

/// Exact rational number with arbitrary-precision numerator and denominator.
pub type Rational = BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("generator context mismatch: {left} vs {right} generators")]
    ContextMismatch { left: usize, right: usize },
    #[error("generator {name:?} has degree {degree}; degrees must be at least 2")]
    BadDegree { name: String, degree: u32 },
    #[error("duplicate generator name {0:?}")]
    DuplicateGenerator(String),
    #[error("invalid generator name {0:?}")]
    BadName(String),
    #[error("unknown generator {name:?} at byte {position}")]
    UnknownGenerator { name: String, position: usize },
    #[error("odd generator {name:?} raised to power {exponent} at byte {position}")]
    OddPower {
        name: String,
        exponent: u32,
        position: usize,
    },
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
}
