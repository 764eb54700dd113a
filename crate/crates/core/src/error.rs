use thiserror::Error;

/// Errors raised by graph construction, certificate handling, constructions
/// and the solver front ends.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    /// A named hypothesis of a construction does not hold for the inputs.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// The certificate refers to vertices or pairs that do not exist. This is
    /// distinct from a verification flag being false.
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),

    /// A construction produced a certificate that fails its own check. This
    /// signals a bug in the construction, never bad input.
    #[error("self-verification failed: {0}")]
    SelfCheck(String),

    #[error("graph format error at line {line}: {message}")]
    GraphFormat { line: usize, message: String },

    #[error("certificate schema error at {path}: {message}")]
    Schema { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
