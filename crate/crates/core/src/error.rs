use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    Dimension {
        context: String,
        expected: usize,
        found: usize,
    },
    #[error("target cochain is not closed (d(target) != 0)")]
    NotACocycle,
    #[error("invalid pairing: {0}")]
    InvalidPairing(String),
    #[error("invalid representation up to homotopy: {0}")]
    InvalidRep(String),
    #[error("2-term L-infinity algebra is not skeletal (d != 0)")]
    NotSkeletal,
    #[error("invalid quadratic Lie algebra: {0}")]
    InvalidQuadratic(String),
    #[error("invalid skeletal quadruple: {0}")]
    InvalidQuadruple(String),
    #[error("invalid Lie algebra: {0}")]
    InvalidLieAlgebra(String),
    #[error("unknown catalog algebra {0:?}")]
    UnknownAlgebra(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl AlgebraError {
    pub fn dim(context: impl Into<String>, expected: usize, found: usize) -> Self {
        AlgebraError::Dimension {
            context: context.into(),
            expected,
            found,
        }
    }
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
