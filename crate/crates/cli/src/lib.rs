//! Job parsing, task dispatch and reports for the `lqt` binary.

pub mod job;
pub mod report;
pub mod run;

use serde::Serialize;
use thiserror::Error;

/// Process exit status.
pub mod exit {
    pub const OK: i32 = 0;
    pub const MISMATCH: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const INTERNAL: i32 = 3;
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    #[error("cannot read job: {0}")]
    Io(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid job: {}", .0.join("; "))]
    Validation(Vec<String>),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] lqt_core::Error),
}

/// Structured form of an error inside a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErrorEntry {
    pub kind: String,
    pub message: String,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use lqt_core::Error as E;
        match self {
            CliError::Io(_) | CliError::Parse { .. } | CliError::Validation(_) | CliError::Usage(_) => exit::INPUT,
            CliError::Core(e) => match e {
                E::CompositionNonzero { .. } | E::ActionNotChainMap { .. } | E::InsufficientTruncation { .. } | E::Internal(_) => {
                    exit::INTERNAL
                }
                _ => exit::INPUT,
            },
        }
    }

    pub fn entry(&self) -> ErrorEntry {
        use lqt_core::Error as E;
        let kind = match self {
            CliError::Io(_) => "io",
            CliError::Parse { .. } => "parse",
            CliError::Validation(_) => "validation",
            CliError::Usage(_) => "usage",
            CliError::Core(e) => match e {
                E::DivisionByZero => "division_by_zero",
                E::NotInvertibleModP(..) => "not_invertible_mod_p",
                E::CompositionNonzero { .. } => "composition_nonzero",
                E::InsufficientTruncation { .. } => "insufficient_truncation",
                E::ActionNotChainMap { .. } => "action_not_chain_map",
                E::DimensionMismatch(_) => "dimension_mismatch",
                E::EndpointMismatch { .. } => "endpoint_mismatch",
                E::SideMismatch { .. } => "side_mismatch",
                E::SizeMismatch(_) => "size_mismatch",
                E::CharP => "char_p",
                E::Validation(_) => "validation",
                E::Unbounded(_) => "unbounded",
                E::UnknownName(_) => "unknown_name",
                E::Internal(_) => "internal",
            },
        };
        ErrorEntry { kind: kind.into(), message: self.to_string() }
    }
}
