use thiserror::Error;

/// Errors raised by the algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("direction index {dir} out of range for n = {n}")]
    DirectionOutOfRange { dir: usize, n: usize },

    #[error("generator {0} does not lie in L+")]
    NotInLplus(String),

    #[error("cannot multiply an L+ element with a V element")]
    RestrictionMismatch,

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("variable index {index} exceeds dimension {n}")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("{0}")]
    Unsupported(String),

    #[error("malformed gauge spec: {0}")]
    MalformedSpec(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;

pub(crate) fn check_dim(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(AlgebraError::DimensionMismatch { left, right })
    }
}
