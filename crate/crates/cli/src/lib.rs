//! Expression language, output formats and command layer for the
//! `ultrafield` binary.

pub mod command;
pub mod format;
pub mod parse;
pub mod repl;

pub use command::{CliError, Command};
pub use format::{format, format_human, format_json, Mode};
pub use parse::{eval, parse, Ast, EvalError, ParseError};
