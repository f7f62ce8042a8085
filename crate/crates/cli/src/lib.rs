//! Library side of the `bnd` command-line tool: flag parsing, the
//! subcommand implementations, the shipped Coxeter degree tables and the
//! verification suites. The binary in `main.rs` is a thin dispatcher so the
//! test suites can drive everything in-process.

pub mod commands;
pub mod config;
pub mod degrees;
pub mod verify;

use std::fmt;

/// Errors carrying their process exit code: parse errors exit 2, domain
/// errors exit 3, verification failures exit 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Parse(String),
    Domain(String),
    VerifyFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::VerifyFailed(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "error: {msg}"),
            CliError::Domain(msg) => write!(f, "error: {msg}"),
            CliError::VerifyFailed(msg) => write!(f, "verification failed: {msg}"),
        }
    }
}

impl From<bnd::Error> for CliError {
    fn from(err: bnd::Error) -> CliError {
        match err {
            bnd::Error::Parse(msg) => CliError::Parse(msg),
            other => CliError::Domain(other.to_string()),
        }
    }
}

/// Output of a subcommand: the byte-stable stdout payload, plus optional
/// stderr notes (used by formats whose stdout must stay bare, like TSV).
pub struct CommandOutput {
    pub stdout: String,
    pub stderr: Option<String>,
}

impl CommandOutput {
    pub fn stdout(text: String) -> CommandOutput {
        CommandOutput {
            stdout: text,
            stderr: None,
        }
    }
}

/// Run one command line (without the program name) and produce its output.
pub fn run(args: &[String]) -> Result<CommandOutput, CliError> {
    let raw = config::RawArgs::parse(args)?;
    commands::dispatch(raw)
}
