use std::fmt;

use interp_core::Error;

/// Process exit codes.
pub mod exit {
    pub const VERIFY_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const ORDER: i32 = 3;
    pub const NUMERIC: i32 = 4;
}

/// An error reported on stderr as `error:<category>: <message>`.
#[derive(Debug)]
pub struct CliError {
    pub category: &'static str,
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            category: "usage",
            code: exit::USAGE,
            message: message.into(),
        }
    }

    pub fn parse(message: impl Into<String>) -> Self {
        CliError {
            category: "parse",
            code: exit::USAGE,
            message: message.into(),
        }
    }

    pub fn io(message: impl Into<String>) -> Self {
        CliError {
            category: "io",
            code: exit::USAGE,
            message: message.into(),
        }
    }

    pub fn numeric(message: impl Into<String>) -> Self {
        CliError {
            category: "numeric",
            code: exit::NUMERIC,
            message: message.into(),
        }
    }

    pub fn verify(message: impl Into<String>) -> Self {
        CliError {
            category: "verify",
            code: exit::VERIFY_FAILED,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error:{}: {}", self.category, self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let (category, code) = match e {
            Error::InvalidPermutation(_) | Error::InvalidTolerance(_) => ("parse", exit::USAGE),
            Error::InvalidArgument(_)
            | Error::LandauCap { .. }
            | Error::EnumerationCap { .. }
            | Error::UnknownGate(_) => ("usage", exit::USAGE),
            Error::NotUnitary { .. }
            | Error::OrderNotDetected { .. }
            | Error::AmbiguousOrder { .. } => ("order", exit::ORDER),
            Error::DimensionMismatch { .. }
            | Error::NotSquare { .. }
            | Error::NonFinite { .. }
            | Error::LengthMismatch { .. } => ("numeric", exit::NUMERIC),
        };
        CliError {
            category,
            code,
            message: e.to_string(),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
