use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    InvalidField(u32),
    #[error("structural mismatch: {0}")]
    Structure(String),
    #[error("zero ring not supported")]
    ZeroRing,
    #[error("localizing at zero yields the zero ring")]
    LocalizeAtZero,
    #[error("objects live over different rings")]
    DifferentRings,
    #[error("parse error at {line}:{column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("homomorphism is not well defined: {0}")]
    IllDefinedHom(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid glueing data: {0}")]
    Glueing(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn structure(msg: impl Into<String>) -> Self {
        Error::Structure(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
