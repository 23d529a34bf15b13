use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("format error{}: {message}", offset.map(|o| format!(" at byte {o}")).unwrap_or_default())]
    Format {
        message: String,
        offset: Option<usize>,
    },

    #[error("pixel count mismatch: header declares {expected} pixels, found {found}")]
    PixelCountMismatch { expected: usize, found: usize },

    #[error("unsupported image: {0}")]
    Unsupported(String),

    #[error("value out of range: {0}")]
    Range(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn format(msg: impl Into<String>, offset: Option<usize>) -> Self {
        Error::Format {
            message: msg.into(),
            offset,
        }
    }
}
