//! File formats, reports and subcommands of the `crossmod` command-line tool.

pub mod commands;
pub mod format;
pub mod report;
