//! CLI-level errors and their exit codes.

use std::fmt;

use tdc_core::Error;

/// Exit codes: 2 malformed input, 3 bounds, 4 enumeration cap, 5 failed
/// verification, 1 anything else.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Parse(String),
    Bounds(String),
    TooLarge(String),
    VerificationFailed,
    Io(String),
    Internal(String),
}

impl CliError {
    /// Classifies a core error, prefixing the message with where it arose.
    pub fn from_core(context: &str, e: Error) -> CliError {
        let msg = format!("{context}: {e}");
        match e {
            Error::FieldTooLarge { .. } | Error::BadShape { .. } => CliError::Bounds(msg),
            Error::TooLarge { .. } => CliError::TooLarge(msg),
            Error::NotPrime(_)
            | Error::ZeroDegree
            | Error::BadModulus(_)
            | Error::ReducibleModulus
            | Error::ElementOutOfRange { .. }
            | Error::DimensionMismatch { .. }
            | Error::IndexOutOfRange { .. } => CliError::Parse(msg),
            _ => CliError::Internal(msg),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Bounds(_) => 3,
            CliError::TooLarge(_) => 4,
            CliError::VerificationFailed => 5,
            CliError::Io(_) | CliError::Internal(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "malformed input: {m}"),
            CliError::Bounds(m) => write!(f, "out of bounds: {m}"),
            CliError::TooLarge(m) => write!(f, "too large: {m}"),
            CliError::VerificationFailed => write!(f, "verification failed"),
            CliError::Io(m) => write!(f, "io error: {m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}
