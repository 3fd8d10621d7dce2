//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when verification finds a failing check,
//! 2 on usage or parse errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::diagram::{Rank, RawRows};
use crate::error::Error;
use crate::potential::{potential_json, potential_latex, potential_text, superpotential};
use crate::torus::PluckerRestrictions;
use crate::verify::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest rank `verify` accepts.
pub const MAX_VERIFY_RANK: u32 = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Latex,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "ogmirror",
    about = "Canonical mirror superpotentials for OG(n+1, 2n+2)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List all valid diagrams in lexicographic order.
    Diagrams {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Print the superpotential terms W_0 … W_{n+1}.
    Potential {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Restrict one Plücker coordinate to the torus chart.
    Restrict {
        #[arg(long)]
        n: u32,
        /// Comma-separated row lengths, top row first; may be truncated.
        #[arg(long)]
        diagram: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Run the check suite for one rank or a range of ranks.
    Verify {
        #[arg(long, conflicts_with_all = ["from", "to"])]
        n: Option<u32>,
        #[arg(long, requires = "to")]
        from: Option<u32>,
        #[arg(long, requires = "from")]
        to: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Emit the Hasse diagram of the weight poset.
    Hasse {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "dot")]
        format: OutputFormat,
    },
}

struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(cli.command) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn require_format(
    command: &str,
    format: OutputFormat,
    allowed: &[OutputFormat],
) -> Result<(), Usage> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Usage(format!(
            "format {format:?} is not supported by `{command}`"
        )))
    }
}

fn execute(command: Command) -> Result<(String, i32), Usage> {
    use OutputFormat::*;
    match command {
        Command::Diagrams { n, format } => {
            require_format("diagrams", format, &[Text, Json])?;
            let diagrams = Rank::new(n)?.enumerate_diagrams();
            let text = match format {
                Json => {
                    let rows: Vec<&[u32]> = diagrams.iter().map(|d| d.rows()).collect();
                    format!("{}\n", json!(rows))
                }
                _ => diagrams.iter().map(|d| format!("{d}\n")).collect(),
            };
            Ok((text, EXIT_OK))
        }
        Command::Potential { n, format } => {
            require_format("potential", format, &[Text, Json, Latex])?;
            let rank = Rank::new(n)?;
            let terms = superpotential(rank)?;
            let text = match format {
                Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&potential_json(rank, &terms)).unwrap()
                ),
                Latex => potential_latex(&terms),
                _ => potential_text(&terms),
            };
            Ok((text, EXIT_OK))
        }
        Command::Restrict { n, diagram, format } => {
            require_format("restrict", format, &[Text, Json, Latex])?;
            let rank = Rank::new(n)?;
            let raw: RawRows = diagram.parse()?;
            let d = crate::diagram::Diagram::new(rank, &raw.0)?;
            let table = PluckerRestrictions::compute(rank)?;
            let p = table.plucker(&d)?;
            let text = match format {
                Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&json!({
                        "n": n,
                        "diagram": d.rows(),
                        "restriction": p.to_json(),
                    }))
                    .unwrap()
                ),
                Latex => format!("{}\n", p.to_latex()),
                _ => format!("{p}\n"),
            };
            Ok((text, EXIT_OK))
        }
        Command::Verify {
            n,
            from,
            to,
            format,
        } => {
            require_format("verify", format, &[Text, Json])?;
            let (lo, hi) = match (n, from, to) {
                (Some(n), None, None) => (n, n),
                (None, Some(a), Some(b)) => (a, b),
                _ => return Err(Usage("give either --n or both --from and --to".into())),
            };
            Rank::new(lo)?;
            if hi < lo {
                return Err(Usage(format!("empty range {lo}..{hi}")));
            }
            if hi > MAX_VERIFY_RANK {
                return Err(Usage(format!("verify supports n <= {MAX_VERIFY_RANK}")));
            }
            let report = Report::run(lo, hi)?;
            let text = match format {
                Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&report.to_json()).unwrap()
                ),
                _ => report.to_text(),
            };
            let code = if report.passed() {
                EXIT_OK
            } else {
                EXIT_FAILED
            };
            Ok((text, code))
        }
        Command::Hasse { n, format } => {
            require_format("hasse", format, &[Dot])?;
            Ok((hasse_dot(Rank::new(n)?)?, EXIT_OK))
        }
    }
}

/// The weight poset as a DOT digraph. Nodes are listed in lexicographic
/// order, edges by source then target.
pub fn hasse_dot(rank: Rank) -> Result<String, Error> {
    let mut s = String::new();
    writeln!(s, "digraph hasse_n{} {{", rank.get()).unwrap();
    for d in rank.enumerate_diagrams() {
        writeln!(s, "  \"{d}\";").unwrap();
    }
    for e in rank.hasse_edges()? {
        writeln!(
            s,
            "  \"{}\" -> \"{}\" [label=\"{}\"];",
            e.lower, e.upper, e.label
        )
        .unwrap();
    }
    s.push_str("}\n");
    Ok(s)
}
