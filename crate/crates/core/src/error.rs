use thiserror::Error;

/// Errors raised by group construction, fusion-system queries and the CLI.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    #[error("order cap exceeded: {what} exceeds the cap of {cap}")]
    OrderCapExceeded { what: String, cap: usize },

    #[error("subgroup mismatch: {0}")]
    SubgroupMismatch(String),

    #[error("external data required: {0}")]
    ExternalDataRequired(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("relation check failed: {0}")]
    RelationCheckFailed(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn cap(what: impl Into<String>, cap: usize) -> Self {
        Error::OrderCapExceeded {
            what: what.into(),
            cap,
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
