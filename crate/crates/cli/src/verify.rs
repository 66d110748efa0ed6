use crate::{Failure, Outcome};
use spreadlab_core::harness::{details_to_csv, run_sweep, Quarantine, QUARANTINE_ENV};
use spreadlab_core::{BoundId, Error, SweepConfig};
use std::fs;
use std::path::{Path, PathBuf};

const DEFAULT_QUARANTINE: &str = include_str!("../../../quarantine.tsv");

pub struct Args {
    pub n_min: usize,
    pub n_max: usize,
    pub connected: bool,
    pub bounds: String,
    pub quarantine: Option<PathBuf>,
    pub jobs: usize,
    pub out: Option<PathBuf>,
    pub dedup: bool,
    pub csv: bool,
    pub witness_cap: usize,
    pub json: bool,
}

/// `--quarantine` wins over the environment variable, which wins over the shipped list.
fn load_quarantine(flag: Option<&Path>) -> Result<Quarantine, Error> {
    if let Some(path) = flag {
        return Quarantine::load(path);
    }
    match std::env::var_os(QUARANTINE_ENV) {
        Some(path) if !path.is_empty() => Quarantine::load(Path::new(&path)),
        _ => Quarantine::parse(DEFAULT_QUARANTINE),
    }
}

fn write(dir: &Path, name: &str, contents: &str) -> Result<(), Error> {
    fs::write(dir.join(name), contents).map_err(|e| Error::Io(format!("{}: {e}", dir.join(name).display())))
}

pub fn run(args: Args) -> Outcome {
    let cfg = SweepConfig {
        n_min: args.n_min,
        n_max: args.n_max,
        connected_only: args.connected,
        bounds: BoundId::parse_list(&args.bounds)?,
        dedup: args.dedup,
        jobs: args.jobs,
        witness_cap: args.witness_cap,
        quarantine: load_quarantine(args.quarantine.as_deref())?,
        collect_details: args.csv,
    };
    let outcome = run_sweep(&cfg)?;
    let ledger = &outcome.ledger;
    if let Some(dir) = &args.out {
        fs::create_dir_all(dir).map_err(|e| Failure { code: 2, message: format!("{}: {e}", dir.display()) })?;
        write(dir, "ledger.json", &ledger.to_json())?;
        write(dir, "ledger.txt", &ledger.to_text())?;
        write(dir, "timings.json", &outcome.timings_json())?;
        if args.csv {
            write(dir, "details.csv", &details_to_csv(&outcome.details))?;
        }
    }
    if args.json {
        print!("{}", ledger.to_json());
    } else {
        print!("{}", ledger.to_text());
    }
    if let Some(wall) = outcome.timings.get("wall_clock") {
        eprintln!("wall clock {wall:.3}s");
    }
    Ok(if ledger.passed { 0 } else { 1 })
}
