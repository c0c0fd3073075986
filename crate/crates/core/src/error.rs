use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("resource limit exceeded: {what} is {actual}, cap is {cap}")]
    Resource {
        what: &'static str,
        actual: usize,
        cap: usize,
    },

    #[error("exponent overflow")]
    Overflow,

    #[error("local multiplicity did not stabilize by k = {k_max}; lengths {lengths:?}")]
    NonStabilization { k_max: usize, lengths: Vec<u64> },

    #[error("no exact-linear tail of length >= 3 in {values:?}")]
    FitFailure { values: Vec<i64> },

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// Resource exhaustion, as opposed to a bad input or a bug.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::Resource { .. } | Error::NonStabilization { .. } | Error::FitFailure { .. }
        )
    }
}
