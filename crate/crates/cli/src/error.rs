use thiserror::Error;

pub const EXIT_GAP_SAFE: u8 = 0;
pub const EXIT_NOT_EXTENDABLE: u8 = 1;
pub const EXIT_INVALID_INPUT: u8 = 2;
/// The formula variants disagreed beyond tolerance; a bug, not bad input.
pub const EXIT_INTERNAL: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed document; `message` carries the parser's line/column.
    #[error("{origin}: {message}")]
    Parse { origin: String, message: String },
    /// Well-formed document with invalid content at `location`.
    #[error("{origin}: {location}: {message}")]
    Invalid {
        origin: String,
        location: String,
        message: String,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Core(#[from] monoext::Error),
}

impl CliError {
    pub fn invalid(origin: &str, location: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Invalid {
            origin: origin.to_string(),
            location: location.into(),
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(monoext::Error::FormulaDisagreement { .. }) => EXIT_INTERNAL,
            _ => EXIT_INVALID_INPUT,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
