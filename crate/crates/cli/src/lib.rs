//! Command-line front end: argument parsing, the matrix file format and
//! command execution, shared by the `infmod` binary and its tests.

pub mod args;
pub mod error;
pub mod format;
pub mod run;

pub use args::Cli;
pub use error::{CliError, EXIT_PARSE, EXIT_PRECONDITION, EXIT_VERIFICATION};
pub use run::{execute, Report};
