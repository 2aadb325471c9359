//! Document formats and command implementations for the `egpkit` binary.

pub mod commands;
pub mod doc;
pub mod error;
pub mod family;
pub mod inline;
pub mod oracle;

pub use error::{CliError, Result};
