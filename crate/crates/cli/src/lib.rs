//! Command-line front end for `burnside-core`.
//!
//! Every command produces a [`CommandResult`], which is rendered either as
//! plain text or as pretty-printed JSON (`--format structured`).

pub mod commands;
pub mod groupfile;
pub mod output;

use burnside_core::engine::Limits;
use burnside_core::Error;

pub use output::{CommandResult, Payload, SchurJson, Status, TermJson};

/// Overrides the default group-order cap.
pub const GROUP_CAP_VAR: &str = "BURNSIDE_GROUP_CAP";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn parse(line: usize, message: impl Into<String>) -> CliError {
        CliError::Parse { line, message: message.into() }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Parse { .. } => "parse",
            CliError::Core(Error::GroupCapExceeded { .. } | Error::PointCapExceeded { .. }) => "resource_cap",
            CliError::Core(Error::IdentityViolated(_)) => "identity_violated",
            CliError::Core(Error::Overflow(_)) => "overflow",
            CliError::Core(_) => "invalid_input",
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self.kind() {
            "resource_cap" | "overflow" => 3,
            "identity_violated" => 1,
            _ => 2,
        }
    }
}

/// Default limits, with the group cap taken from [`GROUP_CAP_VAR`] when set.
pub fn limits_from_env() -> Result<Limits, CliError> {
    let mut limits = Limits::default();
    if let Ok(v) = std::env::var(GROUP_CAP_VAR) {
        limits.group_order = v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{} must be a positive integer, got {:?}", GROUP_CAP_VAR, v)))?;
    }
    Ok(limits)
}
