use thiserror::Error;

/// Error type shared by the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("interval endpoints out of order: {lo} > {hi}")]
    InvalidInterval { lo: String, hi: String },
    #[error("operation requires a nonempty set")]
    EmptySet,
    #[error("operation requires a set of positive measure")]
    ZeroMeasure,
    #[error("period must be positive")]
    NonpositivePeriod,
    #[error("torus sets have different periods")]
    PeriodMismatch,
    #[error("set must have infimum 0 (normalize first)")]
    NotAnchoredAtZero,
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error("family constraint violated: {0}")]
    Constraint(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
