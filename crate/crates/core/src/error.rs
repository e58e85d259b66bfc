use thiserror::Error;

/// Errors raised by the set algebra.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum InsError {
    #[error("invalid interval [{lo}, {hi}]: expected 0 <= lo <= hi <= 1")]
    InvalidInterval { lo: f64, hi: f64 },
    #[error("universe mismatch: {0}")]
    UniverseMismatch(String),
    #[error("scalar must be a finite positive number, got {0}")]
    NonPositiveScalar(f64),
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
}
