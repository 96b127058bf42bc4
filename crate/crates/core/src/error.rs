use thiserror::Error;

/// Errors raised by the algebra constructions and certification pipelines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("{what} is not in the required subspace {space}")]
    NotInSubspace { what: String, space: String },

    #[error("non-split semisimple quotient: {0}")]
    NonSplitQuotient(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("bracket identity {identity} failed: {detail}")]
    BracketIdentity { identity: String, detail: String },

    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
