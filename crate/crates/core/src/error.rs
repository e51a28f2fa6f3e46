use thiserror::Error;

/// Failure modes shared by every module.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    /// A value violates the invariant of the type it was meant to become.
    #[error("invalid {what}: {reason}")]
    Invalid { what: &'static str, reason: String },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("generator s_{index} does not exist in rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("no element found within depth {0}")]
    ExceedsDepth(u32),

    #[error("polynomials live in different spaces")]
    SpaceMismatch,

    #[error("not divisible")]
    NotDivisible,

    #[error("{0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn invalid(what: &'static str, reason: impl Into<String>) -> Self {
        Error::Invalid {
            what,
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
