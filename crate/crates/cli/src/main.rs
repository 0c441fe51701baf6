use std::io::{self, IsTerminal, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ultrafield_cli::command::{CliError, Command};
use ultrafield_cli::format::Mode;
use ultrafield_cli::repl;

/// Exact arithmetic with infinitesimals and infinitely large numbers.
///
/// Expressions use `w` for the infinite unit and `eps` for 1/w, e.g.
/// "(2*w^2 + w)/(w^2 - 1)" or "w^(1/2) - 7*eps".
#[derive(Parser)]
#[command(name = "ultrafield", version)]
struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate to canonical form with classification.
    Eval {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// infinitesimal, appreciable or infinite.
    Classify {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Standard part of a finite element.
    St {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Split into infinite, standard and infinitesimal parts.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Whether x and y lie in the same monad.
    Monad {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Whether x and y lie in the same galaxy.
    Gal {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Walkable worlds WW(t, u).
    #[command(subcommand)]
    Ww(WwCmd),
    /// Classify the interval [t0 - 1/u, t0 + 1/u] minus its center.
    Cases {
        #[arg(allow_hyphen_values = true)]
        t0: String,
        #[arg(allow_hyphen_values = true)]
        u: String,
    },
    /// The nine canonical interval cases.
    CasesTable,
    /// Limit of the sequence n -> x(n).
    Limit {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Least m with |x(n) - L| <= eps for all n >= m.
    EpsIndex {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        l: String,
        #[arg(allow_hyphen_values = true)]
        eps: String,
    },
    /// Least k with |x(n) - x(m)| <= eps for all n, m >= k.
    CauchyIndex {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        eps: String,
    },
    /// The map t -> 1/t + t0 on |t| >= u.
    Selfsim {
        #[arg(allow_hyphen_values = true)]
        t: String,
        #[arg(allow_hyphen_values = true)]
        t0: String,
        #[arg(allow_hyphen_values = true)]
        u: String,
    },
    /// Filters on a finite index set {0, ..., N-1}.
    #[command(subcommand)]
    Filters(FiltersCmd),
    /// Interactive session reading commands from stdin.
    Repl,
}

#[derive(Subcommand)]
enum WwCmd {
    /// Relation between WW(t, u) and WW(s, v).
    Rel {
        #[arg(allow_hyphen_values = true)]
        t: String,
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        s: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Whether s belongs to WW(t, u).
    Member {
        #[arg(allow_hyphen_values = true)]
        t: String,
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        s: String,
    },
    /// Magnitude situation (1..6) of steps v <= u.
    Situation {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Image of s under WW(t, u) -> WW(0, 1).
    Map {
        #[arg(allow_hyphen_values = true)]
        t: String,
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        s: String,
    },
}

#[derive(Subcommand)]
enum FiltersCmd {
    /// Enumerate every filter for N <= 4.
    Enum {
        #[arg(allow_hyphen_values = true)]
        n: String,
    },
    /// Check a family such as "{0},{0,1},{0,2},{0,1,2}".
    Check {
        #[arg(allow_hyphen_values = true)]
        family: String,
    },
    /// Whether the reduced power modulo the filter is a field.
    Quotient {
        #[arg(allow_hyphen_values = true)]
        family: String,
    },
}

fn words(cmd: &Cmd) -> (&'static str, Vec<&str>) {
    match cmd {
        Cmd::Eval { x } => ("eval", vec![x]),
        Cmd::Classify { x } => ("classify", vec![x]),
        Cmd::St { x } => ("st", vec![x]),
        Cmd::Decompose { x } => ("decompose", vec![x]),
        Cmd::Monad { x, y } => ("monad", vec![x, y]),
        Cmd::Gal { x, y } => ("gal", vec![x, y]),
        Cmd::Ww(WwCmd::Rel { t, u, s, v }) => ("ww-rel", vec![t, u, s, v]),
        Cmd::Ww(WwCmd::Member { t, u, s }) => ("ww-member", vec![t, u, s]),
        Cmd::Ww(WwCmd::Situation { u, v }) => ("ww-situation", vec![u, v]),
        Cmd::Ww(WwCmd::Map { t, u, s }) => ("ww-map", vec![t, u, s]),
        Cmd::Cases { t0, u } => ("cases", vec![t0, u]),
        Cmd::CasesTable => ("cases-table", vec![]),
        Cmd::Limit { x } => ("limit", vec![x]),
        Cmd::EpsIndex { x, l, eps } => ("eps-index", vec![x, l, eps]),
        Cmd::CauchyIndex { x, eps } => ("cauchy-index", vec![x, eps]),
        Cmd::Selfsim { t, t0, u } => ("selfsim", vec![t, t0, u]),
        Cmd::Filters(FiltersCmd::Enum { n }) => ("filters-enum", vec![n]),
        Cmd::Filters(FiltersCmd::Check { family }) => ("filters-check", vec![family]),
        Cmd::Filters(FiltersCmd::Quotient { family }) => ("filters-quotient", vec![family]),
        Cmd::Repl => ("repl", vec![]),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let mode = if cli.json { Mode::Json } else { Mode::Human };
    if let Cmd::Repl = cli.command {
        if io::stdin().is_terminal() {
            eprintln!("type 'help' for commands, 'quit' to leave");
        }
        return match repl::run(io::stdin().lock(), io::stdout().lock(), mode) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        };
    }
    let (name, args) = words(&cli.command);
    match Command::build(name, &args).and_then(|c| c.run(mode)) {
        Ok(text) => {
            // a closed pipe (e.g. `| head`) is not an error
            let _ = writeln!(io::stdout(), "{text}");
            ExitCode::SUCCESS
        }
        Err(e) => report(e),
    }
}

fn report(e: CliError) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(e.exit_code() as u8)
}
