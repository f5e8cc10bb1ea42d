//! File formats and subcommand implementations behind the `daisy` binary.

pub mod commands;
pub mod graphfile;

pub use commands::Outcome;
pub use graphfile::GraphFile;
