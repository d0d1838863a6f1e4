use thiserror::Error;

/// Errors raised by the library. Verification failures are not errors; they
/// are reported through certificates.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{0}")]
    Usage(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid embedding: {0}")]
    Embedding(String),

    #[error("integer overflow while counting")]
    Overflow,
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
