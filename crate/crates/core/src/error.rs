use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input violates a structural rule (empty toplex, empty column, ...).
    #[error("malformed input: {0}")]
    Malformed(String),

    /// Caller passed arguments outside an operation's domain.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Simplex enumeration would exceed the configured cap.
    #[error("simplex count exceeds cap of {cap}")]
    SizeCap { cap: usize },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
