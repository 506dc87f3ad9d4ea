//! Batch front-end for the `fuzzycover` library: CSV ingestion, run
//! configuration, the six commands and their JSON/CSV reports.

pub mod commands;
pub mod config;
pub mod error;
pub mod input;
pub mod report;

pub use commands::{execute, Command, CommandOutcome};
pub use config::{Format, ModelSpec, RunConfig, Settings};
pub use error::{exit, CliError, Result};
pub use report::Report;
