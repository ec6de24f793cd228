//! Command-line surface and file formats for `ars-core`.

pub mod command;
pub mod counterexample;
pub mod format;

pub use command::{run, CommandResult, Payload, Status};
