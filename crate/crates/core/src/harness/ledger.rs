//! Aggregated sweep results. Every field is merged by a commutative,
//! associative reduction so the ledger does not depend on scheduling.

use crate::bounds::{BoundId, BoundReport};
use crate::format::sig10;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

pub const LEDGER_SCHEMA_VERSION: u32 = 1;

/// Sorted, deduplicated witness strings, truncated to the smallest `cap`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Witnesses(BTreeSet<String>);

impl Witnesses {
    fn push(&mut self, w: String, cap: usize) {
        self.0.insert(w);
        while self.0.len() > cap {
            self.0.pop_last();
        }
    }

    fn merge(&mut self, other: Witnesses, cap: usize) {
        for w in other.0 {
            self.push(w, cap);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, w: &str) -> bool {
        self.0.contains(w)
    }
}

/// Counts for one statement across a sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundStats {
    pub bound_id: BoundId,
    pub asserted: bool,
    pub checked: u64,
    pub hypothesis_met: u64,
    pub gated_out: u64,
    pub tight: u64,
    pub violations: u64,
    pub quarantined: u64,
    /// Failures of statements that are recorded rather than asserted.
    pub recorded_failures: u64,
    /// Reports whose tightness disagreed with the predicted equality case.
    pub iff_mismatches: u64,
    pub min_slack: Option<f64>,
    pub tight_witnesses: Witnesses,
    pub violation_witnesses: Witnesses,
    pub quarantined_witnesses: Witnesses,
    pub recorded_failure_witnesses: Witnesses,
}

impl BoundStats {
    pub fn new(bound_id: BoundId) -> Self {
        BoundStats {
            bound_id,
            asserted: bound_id.is_asserted(),
            checked: 0,
            hypothesis_met: 0,
            gated_out: 0,
            tight: 0,
            violations: 0,
            quarantined: 0,
            recorded_failures: 0,
            iff_mismatches: 0,
            min_slack: None,
            tight_witnesses: Witnesses::default(),
            violation_witnesses: Witnesses::default(),
            quarantined_witnesses: Witnesses::default(),
            recorded_failure_witnesses: Witnesses::default(),
        }
    }

    pub(crate) fn record(&mut self, r: &BoundReport, graph6: &str, quarantined: bool, cap: usize) {
        let witness = match &r.param {
            Some(p) => format!("{graph6} [{p}]"),
            None => graph6.to_string(),
        };
        self.checked += 1;
        if !r.hypothesis_met {
            self.gated_out += 1;
            return;
        }
        self.hypothesis_met += 1;
        self.min_slack = Some(self.min_slack.map_or(r.slack, |s| s.min(r.slack)));
        if r.tight {
            self.tight += 1;
            self.tight_witnesses.push(witness.clone(), cap);
        }
        if !r.iff_consistent() {
            self.iff_mismatches += 1;
        }
        if r.holds() {
            return;
        }
        if !self.asserted {
            self.recorded_failures += 1;
            self.recorded_failure_witnesses.push(witness, cap);
        } else if quarantined {
            self.quarantined += 1;
            self.quarantined_witnesses.push(witness, cap);
        } else {
            self.violations += 1;
            self.violation_witnesses.push(witness, cap);
        }
    }

    pub(crate) fn merge(&mut self, other: BoundStats, cap: usize) {
        self.checked += other.checked;
        self.hypothesis_met += other.hypothesis_met;
        self.gated_out += other.gated_out;
        self.tight += other.tight;
        self.violations += other.violations;
        self.quarantined += other.quarantined;
        self.recorded_failures += other.recorded_failures;
        self.iff_mismatches += other.iff_mismatches;
        self.min_slack = match (self.min_slack, other.min_slack) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.tight_witnesses.merge(other.tight_witnesses, cap);
        self.violation_witnesses.merge(other.violation_witnesses, cap);
        self.quarantined_witnesses.merge(other.quarantined_witnesses, cap);
        self.recorded_failure_witnesses.merge(other.recorded_failure_witnesses, cap);
    }
}

/// The sweep parameters echoed into the ledger.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LedgerConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub connected_only: bool,
    pub dedup: bool,
    pub witness_cap: usize,
    pub quarantine_entries: usize,
    pub bounds: Vec<BoundId>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationLedger {
    pub schema_version: u32,
    pub config: LedgerConfig,
    /// Graphs evaluated, by order.
    pub graphs: BTreeMap<usize, u64>,
    pub bounds: Vec<BoundStats>,
    pub violation_count: u64,
    pub passed: bool,
}

impl VerificationLedger {
    pub(crate) fn new(config: LedgerConfig, graphs: BTreeMap<usize, u64>, bounds: Vec<BoundStats>) -> Self {
        let violation_count = bounds.iter().map(|b| b.violations).sum();
        VerificationLedger {
            schema_version: LEDGER_SCHEMA_VERSION,
            config,
            graphs,
            bounds,
            violation_count,
            passed: violation_count == 0,
        }
    }

    pub fn stats(&self, id: BoundId) -> Option<&BoundStats> {
        self.bounds.iter().find(|b| b.bound_id == id)
    }

    pub fn total_checks(&self) -> u64 {
        self.bounds.iter().map(|b| b.checked).sum()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("ledger serializes");
        s.push('\n');
        s
    }

    /// Aligned-column summary followed by the witness lists.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let c = &self.config;
        let _ = writeln!(
            out,
            "sweep n={}..{} connected_only={} dedup={} quarantine_entries={}",
            c.n_min, c.n_max, c.connected_only, c.dedup, c.quarantine_entries
        );
        let graphs: Vec<String> = self.graphs.iter().map(|(n, k)| format!("n={n}:{k}")).collect();
        let _ = writeln!(out, "graphs {}", graphs.join(" "));
        let header =
            ["bound", "checked", "hyp_met", "gated", "tight", "viol", "quar", "recorded", "iff_miss", "min_slack"];
        let mut rows: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
        for b in &self.bounds {
            rows.push(vec![
                b.bound_id.name().to_string(),
                b.checked.to_string(),
                b.hypothesis_met.to_string(),
                b.gated_out.to_string(),
                b.tight.to_string(),
                b.violations.to_string(),
                b.quarantined.to_string(),
                b.recorded_failures.to_string(),
                b.iff_mismatches.to_string(),
                b.min_slack.map_or("-".to_string(), sig10),
            ]);
        }
        let widths: Vec<usize> =
            (0..header.len()).map(|j| rows.iter().map(|r| r[j].chars().count()).max().unwrap_or(0)).collect();
        for row in &rows {
            let cells: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(j, cell)| {
                    let pad = widths[j] - cell.chars().count();
                    if j == 0 {
                        format!("{cell}{}", " ".repeat(pad))
                    } else {
                        format!("{}{cell}", " ".repeat(pad))
                    }
                })
                .collect();
            let _ = writeln!(out, "{}", cells.join("  ").trim_end());
        }
        for b in &self.bounds {
            for (label, list) in [
                ("violations", &b.violation_witnesses),
                ("quarantined", &b.quarantined_witnesses),
                ("recorded", &b.recorded_failure_witnesses),
                ("tight", &b.tight_witnesses),
            ] {
                if !list.is_empty() {
                    let _ = writeln!(out, "{} {label}: {}", b.bound_id, list.iter().collect::<Vec<_>>().join(", "));
                }
            }
        }
        let _ = writeln!(out, "violations {} => {}", self.violation_count, if self.passed { "PASS" } else { "FAIL" });
        out
    }
}
