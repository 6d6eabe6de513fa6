//! Command-line front end: FieldFile I/O, example presets and the
//! `cylharm` subcommands.

pub mod args;
pub mod commands;
pub mod fieldfile;
pub mod presets;

pub use commands::{run, CliError};
pub use fieldfile::{FieldFile, FieldFileError};
