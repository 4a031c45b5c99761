use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {family}")]
    InvalidRank { family: char, rank: usize },

    #[error("cannot parse Cartan type {0:?}")]
    ParseType(String),

    #[error("Weyl group of order {order} exceeds the configured cap {cap}")]
    WeylCapExceeded { order: u128, cap: usize },

    #[error("representation of dimension {dim} exceeds the configured cap {cap}")]
    WeightCapExceeded { dim: u128, cap: usize },

    #[error("non-integral value: {0}")]
    NonIntegral(String),

    #[error("invalid grading element: {0}")]
    InvalidGrading(String),

    #[error("invalid highest weight: {0}")]
    InvalidWeight(String),

    #[error("invalid subsystem: {0}")]
    InvalidSubsystem(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by configured size limits rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::WeylCapExceeded { .. } | Error::WeightCapExceeded { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
