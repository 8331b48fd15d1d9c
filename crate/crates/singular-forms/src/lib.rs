//! File formats, text reports and the command-line front end for
//! `singular-forms-core`.

pub mod cli;
pub mod error;
pub mod json;
pub mod selftest;
pub mod table;

pub use cli::{run, Cli, JobSpec, OutputFormat};
pub use error::CliError;
