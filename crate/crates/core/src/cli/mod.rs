//! Library side of the `fieldpos` command-line tool.

pub mod commands;
pub mod config;
pub mod suite;

pub use commands::{format_reports, run_sim, run_verify, Outcome, SimKind, Status};
pub use config::RunConfig;
pub use suite::{run_suite, SuiteSettings};
