use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid GF(9) token `{0}`")]
    InvalidToken(String),

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("generator matrix has no rows")]
    EmptyInput,

    #[error("length {0} is outside the supported range 1..=64")]
    UnsupportedLength(usize),

    #[error("code is not self-dual: {0}")]
    NotSelfDual(String),

    #[error("generator matrix is not in standard form")]
    NotStandardForm,

    #[error("parse error at line {line}, column {column}: {message} (token `{token}`)")]
    Parse {
        line: usize,
        column: usize,
        token: String,
        message: String,
    },

    #[error("malformed database {path}: {message}")]
    MalformedDb { path: PathBuf, message: String },

    #[error("graph with {0} vertices is too large for brute-force canonization")]
    TooLarge(usize),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("enumerator families exist only for n in 9..=12, got {0}")]
    UnsupportedFamily(usize),

    #[error("non-integral value: {0}")]
    NonIntegral(String),

    #[error("incomplete input: {0}")]
    Incomplete(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
