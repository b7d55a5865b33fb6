use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, Error)]
pub enum GwError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("matrix is not symmetric positive definite: {0}")]
    NotPositiveDefinite(String),
    #[error("pole encountered: {0}")]
    Pole(String),
    #[error("series did not converge within caps: {0}")]
    NonConvergence(String),
    #[error("unsupported structure: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, GwError>;
