use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A resource or configuration file could not be used. Always fatal.
    #[error("config error: {0}")]
    Config(String),

    #[error("{path}:{line}: {message}")]
    RuleFile {
        path: String,
        line: usize,
        message: String,
    },

    #[error("i/o failure on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("schema error at line {line}: {message}")]
    Schema { line: usize, message: String },

    #[error("unknown key {0:?}")]
    UnknownKey(String),

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("frequency table is empty")]
    EmptyTable,

    #[error("zero count for pair ({lhs:?} of {rhs:?})")]
    ZeroCount { lhs: String, rhs: String },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True for errors caused by the data or environment rather than by how
    /// the program was invoked.
    pub fn is_data_error(&self) -> bool {
        !matches!(self, Error::UnknownKey(_) | Error::InvalidQuery(_))
    }
}
