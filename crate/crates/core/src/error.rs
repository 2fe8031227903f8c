use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("element is not in the parabolic subalgebra: {0}")]
    NotInParabolic(String),
    #[error("action of a degree-{degree} element on a degree-{vector_degree} vector exceeds truncation level {level}")]
    TruncationOverflow {
        degree: u32,
        vector_degree: u32,
        level: u32,
    },
    #[error("missing prerequisite: {0}")]
    Dependency(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
