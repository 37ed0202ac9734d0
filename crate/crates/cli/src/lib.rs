//! Command-line frontend: argument parsing, JSON reports and the LR cache file.

pub mod args;
pub mod cache;
pub mod commands;
pub mod report;
