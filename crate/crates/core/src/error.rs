use alloc::string::String;

use crate::factorization::VerifyFailure;
use crate::poly::VarId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("monomial coefficient must be nonzero")]
    ZeroCoefficient,
    #[error("invalid variable name {0:?}")]
    InvalidVariable(String),
    #[error("no value assigned to variable {0}")]
    MissingAssignment(VarId),
    #[error("expected a single monomial, found {0} terms")]
    NotAMonomial(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("negative exponent at byte {offset}")]
    NegativeExponent { offset: usize },
    #[error("unknown token {found:?} at byte {offset}")]
    UnknownToken { offset: usize, found: char },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::NegativeExponent { offset }
            | ParseError::UnknownToken { offset, .. } => *offset,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("{op}: incompatible shapes {left:?} and {right:?}")]
    Shape {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("ragged rows: row {row} has {found} entries, expected {expected}")]
    Ragged {
        row: usize,
        found: usize,
        expected: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FactorizationError {
    #[error("{which} is {rows}x{cols}, expected a square matrix")]
    NotSquare {
        which: &'static str,
        rows: usize,
        cols: usize,
    },
    #[error("phi has size {phi} but psi has size {psi}")]
    SizeMismatch { phi: usize, psi: usize },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("verification failed: {0}")]
    Verification(VerifyFailure),
    #[error("factorizations target different polynomials")]
    TargetMismatch,
    #[error("morphism codomain does not match the next domain")]
    NotComposable,
    #[error("alpha and beta do not intertwine the two factorizations")]
    NotAMorphism,
    #[error("summand list is empty")]
    EmptySummands,
    #[error("summand {index} has a zero factor")]
    ZeroSummand { index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PipelineError {
    #[error("input has no summands")]
    Empty,
    #[error("product group {group} is empty")]
    EmptyGroup { group: usize },
    #[error("factor {factor} of product group {group} is zero")]
    ZeroFactor { group: usize, factor: usize },
    #[error("monomial term {index} is zero")]
    ZeroTerm { index: usize },
    #[error("standard method would need {monomials} monomials (size 2^{exponent}); cap is {cap}")]
    CapExceeded {
        monomials: usize,
        cap: usize,
        exponent: u32,
    },
    #[error("predicted size does not fit in the supported range")]
    SizeOverflow,
    #[error(transparent)]
    Factorization(#[from] FactorizationError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
