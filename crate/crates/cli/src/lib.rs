//! Problem files, commands, and DOT export on top of `norphism-core`.

pub mod commands;
pub mod dot;
pub mod error;
pub mod problem;

pub use commands::{run_command, Command, CommandResult, Options, Suite};
pub use error::{CliError, Result};
pub use problem::ProblemFile;
