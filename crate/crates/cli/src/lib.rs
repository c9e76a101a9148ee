//! Command-line front end: instance files, subcommands and reports.

pub mod commands;
pub mod instance_file;
pub mod report;
