use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed path: {0}")]
    MalformedPath(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("maps live on different graphs")]
    GraphMismatch,

    #[error("index {index} out of range (expected 1..={len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("{line}:{col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },

    #[error("search exhausted at stratum {stratum} (bound {bound})")]
    SearchExhausted { stratum: String, bound: usize },

    #[error("group is not abelian: {0}")]
    NotAbelian(String),

    #[error("property violated: {message} (witness: {witness})")]
    PropertyViolation { message: String, witness: String },

    #[error("internal error: {message} (witness: {witness})")]
    Internal { message: String, witness: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
