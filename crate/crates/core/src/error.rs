use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },

    #[error("{0} requires a nonzero argument")]
    ZeroArgument(&'static str),

    #[error("exterior power of grade {grade} exceeds the {nvars} available differentials")]
    GradeTooLarge { grade: usize, nvars: usize },

    #[error("weight vector has inconsistent group ranks")]
    InconsistentRank,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("ideal is not principal")]
    NonPrincipal,

    #[error("the zero ideal has no principal generator")]
    ZeroIdeal,

    #[error("basis is not a reduced Groebner basis for the given order")]
    NotInterreduced,

    #[error("singular matrix")]
    Singular,

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// Two routes that must agree did not. Indicates a bug or a theorem violation.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}
