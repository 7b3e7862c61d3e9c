//! Command-line driver for `monostab`: instance files, subcommands and
//! canonical JSON/text reports.

pub mod commands;
pub mod error;
pub mod instance;
pub mod report;

pub use commands::{reproduce, run, search, Cli, Command, GlobalOpts};
pub use error::{exit, CliError};
pub use instance::{parse_instance, render_instance, Instance};
pub use report::{Format, Report};
