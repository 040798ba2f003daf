use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("scale factor must be positive")]
    ZeroScale,
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("unguarded recursive definition: degree {degree} depends on itself")]
    UnguardedRecursion { degree: usize },
    #[error("recursive series forced before a definition was attached")]
    Undefined,
    #[error("recursive series already has a definition")]
    AlreadyDefined,
    #[error("inner series of a composition has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("compositional inverse needs zero constant term and degree-1 part exactly p[1]")]
    NotInvertible,
    #[error("group mismatch between Γ-cycle indices")]
    GroupMismatch,
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("count at degree {degree} is not an integer: {value}")]
    NonIntegral { degree: usize, value: String },
    #[error("{family}: degree {degree} exceeds the enumeration budget of {budget}")]
    OverBudget {
        family: String,
        degree: usize,
        budget: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
