use std::io;

use thiserror::Error;

/// Failures of a command, each mapped to a process exit status.
#[derive(Debug, Error)]
pub enum CliError {
    /// The input is not in the expected format.
    #[error("{source_name}:{line}:{column}: {message}")]
    Malformed {
        source_name: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{0}")]
    Usage(String),
    /// The input is well formed but the computation rejects it.
    #[error("{0}")]
    Domain(#[from] singular_forms_core::Error),
    /// Some self-test criteria failed.
    #[error("{failed} of {total} checks failed")]
    ChecksFailed { failed: usize, total: usize },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) | CliError::ChecksFailed { .. } => 1,
            CliError::Malformed { .. } | CliError::Io { .. } | CliError::Usage(_) => 2,
        }
    }
}
