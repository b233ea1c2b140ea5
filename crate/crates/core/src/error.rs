use thiserror::Error;

/// Errors raised by the core library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid measure: {0}")]
    InvalidMeasure(String),
    #[error("invalid diagram: {}", .0.join("; "))]
    InvalidDiagram(Vec<String>),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("contradiction: {0}")]
    Contradiction(String),
    #[error("unknown: {0}")]
    Unknown(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
