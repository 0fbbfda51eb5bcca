//! Command-line front end: JSON measure, sequence and polynomial files in,
//! reports, tables and CSV traces out.

pub mod args;
pub mod commands;
pub mod error;
pub mod files;

pub use error::{CliError, Status};
