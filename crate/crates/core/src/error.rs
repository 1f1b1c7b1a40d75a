use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {op} expects compatible shapes, got {lhs} and {rhs}")]
    DimensionMismatch {
        op: &'static str,
        lhs: String,
        rhs: String,
    },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("arity mismatch at {path}: {detail}")]
    ArityMismatch { path: String, detail: String },

    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    #[error("unsupported in this scalar mode: {0}")]
    UnsupportedMode(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn dims(op: &'static str, lhs: (usize, usize), rhs: (usize, usize)) -> Self {
        Error::DimensionMismatch {
            op,
            lhs: format!("{}x{}", lhs.0, lhs.1),
            rhs: format!("{}x{}", rhs.0, rhs.1),
        }
    }
}
