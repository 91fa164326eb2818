//! Shared error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An input violates a stated precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// A comparison or digit extraction cannot be settled at the available
    /// precision.  Raised instead of silently rounding.
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),

    /// The requested construction is outside the scope of the underlying
    /// theorem (e.g. `q|q*theta - p| >= 1`, or spectral check at rho <= 1).
    #[error("out of scope: {0}")]
    Scope(String),

    /// Two operands have incompatible sizes/moduli.
    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    /// A series truncation failed to meet the requested tolerance.
    #[error("truncation failure: {0}")]
    Truncation(String),

    /// An exact congruence that the construction guarantees did not hold;
    /// indicates an implementation bug or corrupted phase data.
    #[error("congruence violation: {0}")]
    Congruence(String),

    /// A brute-force oracle found zero or multiple solutions where exactly
    /// one was required.
    #[error("oracle failure: {0}")]
    Oracle(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn precision(msg: impl Into<String>) -> Self {
        Error::PrecisionExhausted(msg.into())
    }
    pub fn scope(msg: impl Into<String>) -> Self {
        Error::Scope(msg.into())
    }
}
