//! Command-line front end for `wgrade`: argument handling, JSON reports
//! and seeded verification campaigns.

pub mod args;
pub mod campaign;
pub mod commands;
pub mod error;
pub mod gen;
pub mod input;
pub mod invariants;
pub mod report;

pub use error::{CliError, ExitCode};
pub use report::Report;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
