use thiserror::Error;

/// Errors raised by the partition, cumulant and operator-model routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what}: size {requested} exceeds the limit of {limit}")]
    SizeLimit {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("wrong partition kind: {0}")]
    Kind(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{what} of order {order} requested but only {available} available")]
    Truncation {
        what: &'static str,
        order: usize,
        available: usize,
    },

    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),

    #[error("value is not real: {0}")]
    NotReal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
