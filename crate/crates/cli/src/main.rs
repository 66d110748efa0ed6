//! `spreadlab` command-line front end over `spreadlab_core`.
//!
//! Exit code 1 means a bound was violated or a closed form deviated. Exit
//! code 2 covers every error that stops a command before it can report.

mod analyze;
mod family;
mod input;
mod oracle;
mod render;
mod verify;

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

/// Schema version of every `--json` document.
pub const JSON_SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "spreadlab", version, about = "Spectral spreads of graphs, line graphs and total graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full spectral report with bound evaluations for one or more graphs.
    Analyze {
        /// A graph6 string, a path to a graph6 or edge-list file, or `-` for stdin.
        input: String,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Comma-separated bound ids, or `all`.
        #[arg(long, default_value = "all")]
        bounds: String,
    },
    /// Sweep every labeled graph in an order range and write a ledger.
    Verify {
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        /// Only connected graphs.
        #[arg(long)]
        connected: bool,
        /// Comma-separated bound ids, or `all`.
        #[arg(long, default_value = "all")]
        bounds: String,
        /// Quarantine file; overrides the SPREADLAB_QUARANTINE variable and the shipped default.
        #[arg(long)]
        quarantine: Option<PathBuf>,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Directory receiving ledger.json, ledger.txt, timings.json and details.csv.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Skip most isomorphic duplicates (best effort).
        #[arg(long)]
        dedup: bool,
        /// Also write one CSV row per report (requires --out).
        #[arg(long, requires = "out")]
        csv: bool,
        /// Maximum witnesses kept per list.
        #[arg(long, default_value_t = 64)]
        witness_cap: usize,
        /// Print the ledger as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Build a named graph family.
    Family {
        /// complete, cycle, path, complete_bipartite or join_family.
        name: String,
        /// Integer parameters of the family.
        params: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Emit::Graph6)]
        emit: Emit,
        /// Emit JSON (with --emit analysis).
        #[arg(long)]
        json: bool,
    },
    /// Compare closed-form spectra against full eigensolves.
    Oracle {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        json: bool,
        /// Offset added to every closed-form value, used to test failure paths.
        #[arg(long, hide = true, default_value_t = 0.0)]
        perturb: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Graph6,
    Analysis,
}

/// A failed command: message plus exit status.
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<spreadlab_core::Error> for Failure {
    fn from(e: spreadlab_core::Error) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

pub type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { input, json, bounds } => analyze::run(&input, json, &bounds),
        Command::Verify { n_min, n_max, connected, bounds, quarantine, jobs, out, dedup, csv, witness_cap, json } => {
            verify::run(verify::Args {
                n_min,
                n_max,
                connected,
                bounds,
                quarantine,
                jobs,
                out,
                dedup,
                csv,
                witness_cap,
                json,
            })
        }
        Command::Family { name, params, emit, json } => {
            family::run(&name, &params, matches!(emit, Emit::Analysis), json)
        }
        Command::Oracle { suite, json, perturb } => oracle::run(&suite, json, perturb),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
