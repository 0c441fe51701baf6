//! Line-oriented session. A line is either a bare expression, which is
//! evaluated, or `<command> <arg>; <arg>; ...`. `ww` and `filters` take a
//! second word (`ww rel 0; 1; 0; eps`, `filters enum 3`).

use std::io::{BufRead, Write};

use crate::command::{CliError, Command, COMMANDS};
use crate::format::Mode;

/// Splits a line into a command name and its `;`-separated arguments.
pub fn split_line(line: &str) -> (String, Vec<String>) {
    let line = line.trim();
    let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
    let (mut name, mut rest) = (head.to_string(), rest.trim());
    if head == "ww" || head == "filters" {
        let (sub, tail) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
        name = format!("{head}-{sub}");
        rest = tail.trim();
    }
    let args = if rest.is_empty() {
        Vec::new()
    } else {
        rest.split(';').map(|a| a.trim().to_string()).collect()
    };
    (name, args)
}

pub fn run_line(line: &str, mode: Mode) -> Result<String, CliError> {
    let (name, args) = split_line(line);
    if !COMMANDS.iter().any(|(n, _, _)| *n == name) && !is_command_word(&name) {
        return Command::build("eval", &[line.trim()])?.run(mode);
    }
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    Command::build(&name, &args)?.run(mode)
}

fn is_command_word(name: &str) -> bool {
    name.starts_with("ww-") || name.starts_with("filters-")
}

fn help() -> String {
    let mut out = String::from("commands (arguments separated by ';'):");
    for (_, _, usage) in COMMANDS {
        out.push_str("\n  ");
        out.push_str(
            &usage
                .replacen("ww-", "ww ", 1)
                .replacen("filters-", "filters ", 1),
        );
    }
    out.push_str("\n  <expr>            evaluate\n  help | quit");
    out
}

/// Runs until end of input or `quit`; errors are reported and the
/// session continues.
pub fn run(input: impl BufRead, mut output: impl Write, mode: Mode) -> std::io::Result<()> {
    for line in input.lines() {
        let line = line?;
        let trimmed = line.trim();
        match trimmed {
            "" => continue,
            "quit" | "exit" => break,
            "help" => writeln!(output, "{}", help())?,
            _ => match run_line(trimmed, mode) {
                Ok(text) => writeln!(output, "{text}")?,
                Err(e) => writeln!(output, "error: {e}")?,
            },
        }
        output.flush()?;
    }
    Ok(())
}
