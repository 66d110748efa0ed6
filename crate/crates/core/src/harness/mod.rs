//! Exhaustive sweeps over small graphs and closed-form cross-checks.

mod enumerate;
mod ledger;
mod oracle;
mod quarantine;

pub use enumerate::{connected_regular_graphs, enumerate_graphs, regular_graphs, GraphStream, MAX_ENUMERATION_ORDER};
pub use ledger::{BoundStats, LedgerConfig, VerificationLedger, Witnesses, LEDGER_SCHEMA_VERSION};
pub use oracle::{oracle_crosscheck, OracleReport, OracleRow, OracleSuite, ORACLE_TOL};
pub use quarantine::{Quarantine, QUARANTINE_ENV};

use crate::bounds::{Analysis, BoundId, BoundReport};
use crate::error::{Error, Result};
use crate::format::sig10;
use crate::graph::Graph;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

/// Largest order for sweeps that include total-graph or per-edge statements.
pub const MAX_HEAVY_SWEEP_ORDER: usize = 6;

/// Graphs handed to the worker pool at a time.
const CHUNK: usize = 4096;

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub connected_only: bool,
    pub bounds: Vec<BoundId>,
    pub dedup: bool,
    pub jobs: usize,
    /// Witness lists keep the lexicographically smallest entries up to this many.
    pub witness_cap: usize,
    pub quarantine: Quarantine,
    /// Keep one row per report for CSV output.
    pub collect_details: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            n_min: 1,
            n_max: 5,
            connected_only: true,
            bounds: BoundId::ALL.to_vec(),
            dedup: false,
            jobs: 1,
            witness_cap: 64,
            quarantine: Quarantine::default(),
            collect_details: false,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_min == 0 || self.n_min > self.n_max {
            return Err(Error::Parameter(format!("invalid order range {}..={}", self.n_min, self.n_max)));
        }
        if self.n_max > MAX_ENUMERATION_ORDER {
            return Err(Error::Capacity(format!(
                "sweeps are limited to n ≤ {MAX_ENUMERATION_ORDER}, got {}",
                self.n_max
            )));
        }
        if self.n_max > MAX_HEAVY_SWEEP_ORDER {
            let heavy: Vec<&str> = self.bounds.iter().filter(|b| b.is_heavy()).map(|b| b.name()).collect();
            if !heavy.is_empty() {
                return Err(Error::Capacity(format!(
                    "{} need n ≤ {MAX_HEAVY_SWEEP_ORDER}, got {}",
                    heavy.join(", "),
                    self.n_max
                )));
            }
        }
        if self.jobs == 0 || self.witness_cap == 0 {
            return Err(Error::Parameter("jobs and witness cap must be positive".into()));
        }
        Ok(())
    }

    fn ledger_config(&self) -> LedgerConfig {
        let mut bounds = self.bounds.clone();
        bounds.sort();
        bounds.dedup();
        LedgerConfig {
            n_min: self.n_min,
            n_max: self.n_max,
            connected_only: self.connected_only,
            dedup: self.dedup,
            witness_cap: self.witness_cap,
            quarantine_entries: self.quarantine.len(),
            bounds,
        }
    }
}

/// One report flattened for CSV output.
#[derive(Debug, Clone, PartialEq, PartialOrd)]
pub struct DetailRow {
    pub graph6: String,
    pub bound_id: BoundId,
    pub param: String,
    pub hypothesis_met: bool,
    pub bound_value: f64,
    pub actual_value: f64,
    pub slack: f64,
    pub tight: bool,
    pub equality_predicted: Option<bool>,
    pub holds: bool,
}

impl DetailRow {
    fn from_report(graph6: &str, r: &BoundReport) -> Self {
        DetailRow {
            graph6: graph6.to_string(),
            bound_id: r.bound_id,
            param: r.param.clone().unwrap_or_default(),
            hypothesis_met: r.hypothesis_met,
            bound_value: r.bound_value,
            actual_value: r.actual_value,
            slack: r.slack,
            tight: r.tight,
            equality_predicted: r.equality_predicted,
            holds: r.holds(),
        }
    }
}

pub fn details_to_csv(rows: &[DetailRow]) -> String {
    let mut out = String::from(
        "graph6,bound_id,param,hypothesis_met,bound_value,actual_value,slack,tight,equality_predicted,holds\n",
    );
    let num = |x: f64| if x.is_finite() { sig10(x) } else { String::new() };
    for r in rows {
        let predicted = r.equality_predicted.map_or(String::new(), |p| p.to_string());
        // graph6 can contain commas and quotes, so it is always quoted
        out.push_str(&format!(
            "\"{}\",{},{},{},{},{},{},{},{},{}\n",
            r.graph6.replace('"', "\"\""),
            r.bound_id,
            r.param,
            r.hypothesis_met,
            num(r.bound_value),
            num(r.actual_value),
            num(r.slack),
            r.tight,
            predicted,
            r.holds
        ));
    }
    out
}

pub struct SweepOutcome {
    pub ledger: VerificationLedger,
    /// Summed evaluation time per statement plus the overall wall clock.
    /// Kept out of the ledger because it varies between runs.
    pub timings: BTreeMap<String, f64>,
    pub details: Vec<DetailRow>,
}

impl SweepOutcome {
    pub fn timings_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.timings).expect("timings serialize");
        s.push('\n');
        s
    }
}

struct Partial {
    stats: BTreeMap<BoundId, BoundStats>,
    time: BTreeMap<BoundId, Duration>,
    details: Vec<DetailRow>,
}

impl Partial {
    fn empty() -> Self {
        Partial { stats: BTreeMap::new(), time: BTreeMap::new(), details: Vec::new() }
    }

    fn merge(mut self, other: Partial, cap: usize) -> Partial {
        for (id, s) in other.stats {
            match self.stats.get_mut(&id) {
                Some(mine) => mine.merge(s, cap),
                None => {
                    self.stats.insert(id, s);
                }
            }
        }
        for (id, t) in other.time {
            *self.time.entry(id).or_default() += t;
        }
        self.details.extend(other.details);
        self
    }
}

fn evaluate_graph(g: &Graph, cfg: &SweepConfig, bounds: &[BoundId]) -> Result<Partial> {
    let graph6 = g.to_graph6();
    let analysis = Analysis::new(g);
    let mut partial = Partial::empty();
    for &id in bounds {
        let start = Instant::now();
        let reports = analysis.evaluate(id)?;
        *partial.time.entry(id).or_default() += start.elapsed();
        let stats = partial.stats.entry(id).or_insert_with(|| BoundStats::new(id));
        let quarantined = cfg.quarantine.contains(id, &graph6);
        for r in &reports {
            stats.record(r, &graph6, quarantined, cfg.witness_cap);
            if cfg.collect_details {
                partial.details.push(DetailRow::from_report(&graph6, r));
            }
        }
    }
    Ok(partial)
}

/// Enumerates every graph in range on one producer thread and evaluates the
/// enabled statements on a pool of `jobs` workers.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepOutcome> {
    cfg.validate()?;
    let ledger_config = cfg.ledger_config();
    let bounds = ledger_config.bounds.clone();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::Parameter(format!("cannot start worker pool: {e}")))?;
    let started = Instant::now();
    let mut total = Partial::empty();
    let mut graphs = BTreeMap::new();
    for n in cfg.n_min..=cfg.n_max {
        let mut stream = enumerate_graphs(n, cfg.connected_only, cfg.dedup)?;
        let mut count = 0u64;
        loop {
            let chunk: Vec<Graph> = stream.by_ref().take(CHUNK).collect::<Result<_>>()?;
            if chunk.is_empty() {
                break;
            }
            count += chunk.len() as u64;
            let partial = pool.install(|| {
                chunk
                    .par_iter()
                    .map(|g| evaluate_graph(g, cfg, &bounds))
                    .try_reduce(Partial::empty, |a, b| Ok(a.merge(b, cfg.witness_cap)))
            })?;
            total = total.merge(partial, cfg.witness_cap);
        }
        graphs.insert(n, count);
    }
    let stats = bounds.iter().map(|&id| total.stats.remove(&id).unwrap_or_else(|| BoundStats::new(id))).collect();
    let mut timings: BTreeMap<String, f64> =
        total.time.iter().map(|(id, t)| (id.name().to_string(), t.as_secs_f64())).collect();
    timings.insert("wall_clock".into(), started.elapsed().as_secs_f64());
    let mut details = total.details;
    details.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    Ok(SweepOutcome { ledger: VerificationLedger::new(ledger_config, graphs, stats), timings, details })
}
