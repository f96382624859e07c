use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("not found: {0}")]
    NotFound(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("capacity exceeded: n = {n} is above the cap of {cap} vertices")]
    Capacity { n: usize, cap: usize },

    #[error("resource budget exceeded: {0}")]
    Resource(String),

    #[error("numeric failure: residual {residual:e} exceeds tolerance {tol:e}")]
    NumericFailure { residual: f64, tol: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
