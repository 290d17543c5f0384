//! Command-line front end for `jetline`: an expression parser for Laurent
//! polynomial matrices, JSON result documents and command dispatch.

pub mod commands;
pub mod document;
pub mod error;
pub mod json;
pub mod parse;

pub use commands::{run, Cli, Outcome};
pub use document::ResultDocument;
pub use error::CliError;
