use thiserror::Error;

/// Failures that end a command before it can report a result. All of them
/// map to exit code 2; a completed check that fails exits with 1 instead.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] syt_core::Error),
    #[error("no closed form is known for {0}")]
    NoFormulaAvailable(String),
    #[error("`{identity}` needs --{param}")]
    MissingParameter { identity: &'static str, param: &'static str },
    #[error("{0}")]
    BadArgument(String),
    #[error("range too large: {0}")]
    RangeTooLarge(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

pub type CliResult<T> = Result<T, CliError>;
