//! File formats and command implementations behind the `so21` binary.

pub mod commands;
pub mod input;
pub mod output;

use std::fmt;

/// Failure of a command, mapped onto the process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments, unparsable or non-group input, unwritable output.
    Input(String),
    /// The boundary solver found nothing within the gate.
    Solver(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Solver(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "invalid input: {msg}"),
            CliError::Solver(msg) => write!(f, "solver failure: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<so21::Error> for CliError {
    fn from(e: so21::Error) -> Self {
        match e {
            so21::Error::SolverFailure { .. } => CliError::Solver(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}
