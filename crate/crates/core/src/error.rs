use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("probability {0} is outside the open interval (0, 1)")]
    Domain(f64),

    #[error("insufficient class data: {0}")]
    InsufficientClassData(String),

    #[error("legacy estimator is degenerate for feature {feature}: no negative-class point falls inside the Winsorization band")]
    LegacyDegenerate { feature: usize },

    #[error("dimension mismatch: expected {expected} columns, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("degenerate projection: (mu_plus - mu_minus)^T beta is zero")]
    DegenerateProjection,

    #[error("usage: {0}")]
    Usage(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("fold construction failed: {0}")]
    FoldConstruction(String),

    #[error("coordinate descent did not converge within {sweeps} sweeps")]
    Convergence { sweeps: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("model format error: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}
