use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SerpError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("degree {degree} exceeds the workspace bound {bound}")]
    DegreeOverflow { degree: u32, bound: u32 },

    #[error("verification failed in {check}: {detail}")]
    VerificationFailed { check: String, detail: String },
}

pub type Result<T> = std::result::Result<T, SerpError>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(SerpError::InvalidArgument(msg.into()))
}
