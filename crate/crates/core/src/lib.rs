//! Exact matrix factorizations of multivariate polynomials.
//!
//! A matrix factorization of `f` is a pair of square polynomial matrices
//! `(phi, psi)` with `phi * psi = psi * phi = f * I`. This crate builds them
//! with the standard doubling method, combines them with the Yoshino sum
//! product, the multiplicative tensor product and the reduced multiplicative
//! tensor product, and runs the size-reducing pipeline for summand-reduced
//! polynomials.
//!
//! Everything here is `no_std` + `alloc`; IO, file formats and the CLI live
//! in the `mfact` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod catalog;
pub mod error;
pub mod factorization;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod random;
pub mod refined;
pub mod standard;
pub mod tensor;

pub use crate::error::{FactorizationError, MatrixError, ParseError, PipelineError, PolyError};
pub use crate::factorization::{
    MatrixFactorization, Morphism, VerifyPolicy, VerifyReport, DEFAULT_TRIALS, EXACT_SIZE_LIMIT,
};
pub use crate::matrix::{PolyMatrix, RationalMatrix, ShuffleMatrix};
pub use crate::parse::{parse_expanded, parse_polynomial, ExpandedForm};
pub use crate::poly::{EvalPoint, Monomial, Polynomial, Rational, VarId};
pub use crate::refined::{ProductGroup, SizeReport, SummandReducedPoly, ValidationReport};
pub use crate::standard::{StandardVariant, SummandList};
pub use crate::tensor::YoshinoVariant;
