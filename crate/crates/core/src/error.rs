use thiserror::Error;

use crate::verdict::Verdict;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u32),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("space mismatch: expected basis [{expected}], found [{found}]")]
    SpaceMismatch { expected: String, found: String },
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(crate::Field, crate::Field),
    #[error("a zero-dimensional algebra has no unit")]
    ZeroDimensional,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("matrix is singular")]
    Singular,
    #[error("the bialgebra admits no antipode")]
    NoAntipode,
    #[error("image escapes the end space E(H,B)")]
    ImageEscapesEndSpace,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("unknown example {0:?}")]
    UnknownExample(String),
    #[error("{context}: {verdict}")]
    AxiomFailed { context: String, verdict: Verdict },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn failed(context: impl Into<String>, verdict: Verdict) -> Error {
        Error::AxiomFailed { context: context.into(), verdict }
    }
}
