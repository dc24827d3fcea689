use std::time::Duration;

use thiserror::Error;

/// Errors reported by the solvers and the equation front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("equation side `{0}` has no coefficients")]
    EmptySide(&'static str),

    #[error("coefficient {value} at position {position} is out of range [1, {max}]")]
    CoefficientOutOfRange {
        position: usize,
        value: u64,
        max: u64,
    },

    #[error("malformed equation at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("vector length {found} does not match {expected} unknowns")]
    LengthMismatch { expected: usize, found: usize },

    #[error("oracle search box has {size} candidates, cap is {cap}")]
    OracleCapExceeded { size: u128, cap: u128 },

    #[error("frontier grew to {size} walks, cap is {cap}")]
    FrontierCapExceeded { size: usize, cap: usize },

    #[error("solver exceeded its time budget of {0:?}")]
    Timeout(Duration),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
