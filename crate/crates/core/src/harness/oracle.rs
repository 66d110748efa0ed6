//! Closed forms against brute-force eigensolves.

use super::enumerate::connected_regular_graphs;
use crate::bounds::{
    join_family_line_spectrum, join_family_line_spread, regular_total_min_eig, regular_total_spectrum,
};
use crate::error::{Error, Result};
use crate::graph::{Family, Graph};
use crate::spectra::{adjacency_spectrum, Spectrum};
use crate::transforms::{line_graph, total_graph};
use serde::Serialize;
use std::str::FromStr;

/// Largest deviation a gating row may show.
pub const ORACLE_TOL: f64 = 1e-6;

/// Join-family checks cover all parameters with `n + m` up to this.
const JOIN_ORDER_CAP: usize = 60;
const REGULAR_MAX_N: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleSuite {
    Join,
    Total,
    All,
}

impl FromStr for OracleSuite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "join" => Ok(OracleSuite::Join),
            "total" => Ok(OracleSuite::Total),
            "all" => Ok(OracleSuite::All),
            other => Err(Error::Input(format!("unknown oracle suite `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleRow {
    pub name: String,
    /// Whether this row decides the overall verdict.
    pub gating: bool,
    pub cases: usize,
    /// Cases deviating by more than [`ORACLE_TOL`].
    pub failures: usize,
    pub max_deviation: f64,
    /// The case with the largest deviation.
    pub worst_case: String,
}

impl OracleRow {
    fn new(name: &str, gating: bool) -> Self {
        OracleRow {
            name: name.to_string(),
            gating,
            cases: 0,
            failures: 0,
            max_deviation: 0.0,
            worst_case: String::new(),
        }
    }

    fn add(&mut self, case: impl FnOnce() -> String, deviation: f64) {
        self.cases += 1;
        if deviation > ORACLE_TOL {
            self.failures += 1;
        }
        if deviation > self.max_deviation || self.worst_case.is_empty() {
            self.max_deviation = self.max_deviation.max(deviation);
            self.worst_case = case();
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    pub suite: OracleSuite,
    pub tolerance: f64,
    pub rows: Vec<OracleRow>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().filter(|r| r.gating).all(|r| r.failures == 0)
    }
}

/// Deviation between sorted spectra; infinite when the sizes differ.
fn deviation(a: &Spectrum, b: &Spectrum) -> f64 {
    if a.len() == b.len() {
        a.max_deviation(b)
    } else {
        f64::INFINITY
    }
}

fn shifted(s: Spectrum, by: f64) -> Spectrum {
    if by == 0.0 {
        return s;
    }
    Spectrum::from_unsorted(s.values().iter().map(|x| x + by).collect())
}

fn line_spectrum_of(f: Family) -> Result<Spectrum> {
    adjacency_spectrum(&line_graph(&f.build()?).0)
}

fn join_rows(perturb: f64) -> Result<Vec<OracleRow>> {
    let mut spectrum = OracleRow::new("join_spectrum", true);
    let mut spread = OracleRow::new("join_spread", true);
    let mut as_stated = OracleRow::new("join_spectrum_as_stated", false);
    for n in 3.. {
        let mut any = false;
        for k in 1..n - 1 {
            for i in 1..n - k {
                // the multiset describes K_k ∨ (K_i ∪ K_{n−k−i})
                let described = Family::JoinFamily { n, k: i, i: k };
                let stated = Family::JoinFamily { n, k, i };
                let case = || format!("(n={n}, k={k}, i={i})");
                let m = described.build()?.size();
                if n + m <= JOIN_ORDER_CAP && m >= n {
                    any = true;
                    let closed = shifted(join_family_line_spectrum(n, k, i)?, perturb);
                    let solved = line_spectrum_of(described)?;
                    spectrum.add(case, deviation(&closed, &solved));
                    if m > n {
                        let formula = join_family_line_spread(n, k, i)? + perturb;
                        spread.add(case, (formula - solved.spread()).abs());
                    }
                }
                let m_stated = stated.build()?.size();
                if n + m_stated <= JOIN_ORDER_CAP && m >= n {
                    any = true;
                    let closed = join_family_line_spectrum(n, k, i)?;
                    as_stated.add(case, deviation(&closed, &line_spectrum_of(stated)?));
                }
            }
        }
        if !any && n > 4 {
            break;
        }
    }
    Ok(vec![spectrum, spread, as_stated])
}

fn total_rows(perturb: f64) -> Result<Vec<OracleRow>> {
    let mut spectrum = OracleRow::new("regular_total_spectrum", true);
    let mut spread = OracleRow::new("regular_total_spread", true);
    // the exact spread relies on the smallest-eigenvalue lemma, which needs r ≥ 3;
    // degree 2 is recorded separately because cycles such as C₈ break it
    let mut spread_r2 = OracleRow::new("regular_total_spread_r2", false);
    let mut min_eig = OracleRow::new("regular_total_min_eig", true);
    for g in connected_regular_graphs(3, REGULAR_MAX_N)? {
        let case = |g: &Graph| format!("{} (r={})", g.to_graph6(), g.regular_degree().unwrap_or(0));
        let solved = adjacency_spectrum(&total_graph(&g))?;
        let closed = shifted(regular_total_spectrum(&g)?, perturb);
        spectrum.add(|| case(&g), deviation(&closed, &solved));

        let adj = adjacency_spectrum(&g)?;
        let (r, ln) = (g.regular_degree().unwrap_or(0) as f64, adj.min().unwrap_or(0.0));
        let exact = (2.0 * adj.spread() + r + 2.0 + (4.0 * ln + r * r + 4.0).max(0.0).sqrt()) / 2.0;
        let row = if r >= 3.0 { &mut spread } else { &mut spread_r2 };
        row.add(|| case(&g), (exact + perturb - solved.spread()).abs());
        if r >= 3.0 {
            let formula = regular_total_min_eig(&g)? + perturb;
            min_eig.add(|| case(&g), (formula - solved.min().unwrap_or(0.0)).abs());
        }
    }
    Ok(vec![spectrum, spread, spread_r2, min_eig])
}

/// Runs the requested suite. `perturb` is added to every closed-form value;
/// it is zero except when deliberately corrupting the formulas in tests.
pub fn oracle_crosscheck(suite: OracleSuite, perturb: f64) -> Result<OracleReport> {
    let mut rows = Vec::new();
    if matches!(suite, OracleSuite::Join | OracleSuite::All) {
        rows.extend(join_rows(perturb)?);
    }
    if matches!(suite, OracleSuite::Total | OracleSuite::All) {
        rows.extend(total_rows(perturb)?);
    }
    Ok(OracleReport { suite, tolerance: ORACLE_TOL, rows })
}
