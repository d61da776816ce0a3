//! File formats, table rendering and the `aqjl` command-line front end for
//! [`aqjl_core`].

use std::fmt::Display;
use std::io::Write;

pub mod commands;
pub mod descriptor;
pub mod format;
pub mod render;

pub use commands::run;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad flags, unreadable files or inputs outside a command's domain.
    #[error("{0}")]
    Input(String),
    /// A `check` whose predicate came out false; carries a JSON reason.
    #[error("check failed: {0}")]
    CheckFailed(serde_json::Value),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn input(what: &str, e: impl Display) -> Self {
        CliError::Input(format!("{what}: {e}"))
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::CheckFailed(_) => 1,
            CliError::Input(_) | CliError::Io(_) => 2,
        }
    }

    pub fn report(&self, err: &mut dyn Write) {
        let _ = match self {
            CliError::CheckFailed(reason) => writeln!(err, "check failed: {reason}"),
            other => writeln!(err, "error: {other}"),
        };
    }
}
