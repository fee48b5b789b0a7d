use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A parameter is outside the documented validity range.
    #[error("invalid parameter `{field}`: {reason}")]
    InvalidParameter { field: &'static str, reason: String },

    /// A color index does not fit the coloring or problem it is used with.
    #[error("color {color} out of range 1..={colors}")]
    ColorOutOfRange { color: usize, colors: usize },

    /// A precondition of an algorithm does not hold for the given input.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An exhaustive routine was asked for an instance beyond its size envelope.
    #[error("instance exceeds the supported envelope: {0}")]
    Envelope(String),

    /// Malformed text input.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Filesystem failure, carried as text so the error stays `Clone + Eq`.
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn invalid(field: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            field,
            reason: reason.into(),
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
