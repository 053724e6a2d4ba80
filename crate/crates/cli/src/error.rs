use std::process::ExitCode;

use thiserror::Error;

/// Failures, each mapped to a documented exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("oracle mismatch: {0}")]
    OracleMismatch(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::BadParams(_) => 2,
            CliError::Malformed(_) | CliError::Io(_) => 3,
            CliError::OracleMismatch(_) => 4,
        }
    }
}

impl From<codezeta::Error> for CliError {
    fn from(e: codezeta::Error) -> Self {
        CliError::BadParams(e.to_string())
    }
}

pub fn malformed(e: impl std::fmt::Display) -> CliError {
    CliError::Malformed(e.to_string())
}

pub const EXIT_NUMERIC_FAIL: u8 = 5;
pub const EXIT_INCONCLUSIVE: u8 = 6;

pub fn exit(code: u8) -> ExitCode {
    ExitCode::from(code)
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::BadParams(String::new()).exit_code(), 2);
        assert_eq!(malformed("x").exit_code(), 3);
        assert_eq!(CliError::OracleMismatch(String::new()).exit_code(), 4);
        let io = std::io::Error::new(std::io::ErrorKind::NotFound, "gone");
        assert_eq!(CliError::from(io).exit_code(), 3);
        assert_eq!(CliError::from(codezeta::Error::InvalidBase(1)).exit_code(), 2);
    }
}
