use lie2::AlgebraError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("Lie algebra is not nilpotent")]
    NotNilpotent,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("cocycle equation has no polynomial solution at degree {degree}")]
    NoSolution { degree: u32 },
    #[error("F1 is not a group morphism: {0}")]
    NotMorphism(String),
    #[error("F1 is not an associative action: {0}")]
    NotAssociative(String),
    #[error("invalid representation: {0}")]
    InvalidRep(String),
    #[error("mode unsupported: {0}")]
    ModeUnsupported(String),
    #[error("dimension mismatch in {what}: expected {expected}, found {found}")]
    Dimension {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub type Result<T> = std::result::Result<T, GroupError>;

pub(crate) fn dim(what: &'static str, expected: usize, found: usize) -> GroupError {
    GroupError::Dimension { what, expected, found }
}
