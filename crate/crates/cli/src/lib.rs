//! Command-line front end for `qonsager-core`: spec files, JSON reports
//! and the command implementations behind the `qonsager` binary.

pub mod commands;
pub mod error;
pub mod report;
pub mod spec_file;

pub use error::{CliError, CliResult};
pub use spec_file::SpecFile;
