//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by signature validation, branching rules, character
/// evaluation and the fusion routes.
#[derive(Debug, Error)]
pub enum Error {
    /// Input is not a valid signature (wrong length, not weakly decreasing,
    /// negative parts where forbidden, mixed integrality, unparseable text).
    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    /// A structurally valid signature violates the level constraint of the
    /// requested operation.
    #[error("not permissible at this level: {0}")]
    NotPermissible(String),

    /// A numeric argument is outside its documented range.
    #[error("argument out of range: {0}")]
    OutOfRange(String),

    /// The evaluation-point matrix is numerically singular, or the evaluation
    /// set and the twisted basis disagree in size.
    #[error("basis failure: {0}")]
    BasisFailure(String),

    /// The character-evaluation route produced entries that do not round to
    /// nonnegative integers within tolerance.
    #[error("route failure: {0}")]
    RouteFailure(String),

    /// An internal invariant was violated; indicates a bug, not bad input.
    #[error("internal error: {0}")]
    Internal(String),

    /// A cached table file exists but cannot be used.
    #[error("invalid table file: {0}")]
    InvalidTable(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Whether this error is the caller's fault (bad arguments) as opposed to
    /// a failed computation. Callers mapping errors to process exit codes
    /// treat usage errors differently.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::InvalidSignature(_) | Error::NotPermissible(_) | Error::OutOfRange(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
