//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("element does not lie in the subfield F_{{{p}^{degree}}}")]
    NotInSubfield { p: u64, degree: u32 },

    #[error("multiplicative character is undefined at 0")]
    ZeroArgument,

    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,

    #[error("partition sizes differ: |{0:?}| != |{1:?}|")]
    SizeMismatch(Vec<u32>, Vec<u32>),

    #[error("X-partition is not self-conjugate")]
    NotSelfConjugate,

    #[error("need at least {needed} variables, got {got}")]
    TooFewVariables { needed: usize, got: usize },

    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),

    #[error("class matching failed: {0}")]
    MatchFailure(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
