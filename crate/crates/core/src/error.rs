use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed graph6 or edge-list input. `at` is a byte offset (graph6) or
    /// a 1-based line number (edge list), see `location`.
    #[error("parse error at {location} {at}: {message}")]
    Parse {
        location: &'static str,
        at: usize,
        message: String,
    },

    /// A size limit was exceeded. `limit` is the configured bound, `got` the
    /// value that was reached when the computation stopped.
    #[error("capacity exceeded: {what} is {got}, limit {limit}")]
    Capacity {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    /// An internal consistency check failed. Never expected to fire.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    pub(crate) fn capacity(what: &'static str, limit: usize, got: usize) -> Self {
        Error::Capacity { what, limit, got }
    }

    pub(crate) fn at_byte(at: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            location: "byte",
            at,
            message: message.into(),
        }
    }

    pub(crate) fn at_line(at: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            location: "line",
            at,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
