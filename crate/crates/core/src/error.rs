use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    Singular,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("not a member of {space}: {detail}")]
    NotMember { space: String, detail: String },
    #[error("index {index} out of range for arity {arity}")]
    ComponentOutOfRange { index: usize, arity: usize },
    #[error("negative twist power {0}")]
    NegativePower(i64),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
