use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("exponent overflow")]
    Overflow,

    #[error("invalid input: {0}")]
    Invalid(String),

    /// A configured resource cap was exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// The input does not satisfy the hypotheses of the requested mode.
    #[error("mode error: {0}")]
    Mode(String),

    /// A mathematical invariant that must hold for the input failed.
    #[error("invariant violated: {0}")]
    Violation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
