//! Command-line front end for the `qmc` binary.
//!
//! [`run`] executes a parsed command and returns its report; the binary only
//! handles thread setup, printing and exit codes.

pub mod args;
pub mod commands;
pub mod schema;
pub mod verify;

pub use commands::{run, CliError, Report};

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "QMC_THREADS";

/// Checks a command's JSON report against its bundled schema.
pub fn check_schema(command: &str, value: &serde_json::Value) -> Result<(), Vec<String>> {
    match schema::schema_for(command) {
        Some(schema) => schema::validate(value, &schema),
        None => Err(vec![format!("no schema for command {command:?}")]),
    }
}
