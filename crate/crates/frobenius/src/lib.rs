//! Std companion to `frobenius-core`: parallel sweeps, census config files,
//! CSV/JSON output and the error-to-exit-status mapping used by the binary.

pub mod config;
pub mod error;
pub mod output;
pub mod parallel;

pub use error::CliError;
