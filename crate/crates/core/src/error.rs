use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan data: {0}")]
    InvalidCartan(String),

    #[error("invalid KR crystal parameters: {0}")]
    InvalidKr(String),

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("spin node {0} is not supported")]
    SpinWeight(usize),

    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("malformed ±-diagram: {0}")]
    MalformedDiagram(String),

    #[error("parity violation: {0}")]
    Parity(String),

    #[error("element count exceeded cap of {cap}")]
    CapExceeded { cap: usize },

    #[error("element is not highest: {0}")]
    NotHighest(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
