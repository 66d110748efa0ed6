//! Acceptance suite: one line per criterion.
//!
//! Three criteria cannot hold as literally stated. Each of them prints a
//! `FAIL` line for the literal reading next to a line for the corrected
//! reading (see the README). The process exits nonzero when any outcome
//! differs from that analysis: a corrected or ordinary criterion failing, or
//! a literal reading that unexpectedly passes.

use spreadlab_core::bounds::unicyclic_details;
use spreadlab_core::bounds::{join_family_line_spectrum, regular_total_spectrum};
use spreadlab_core::graph::{cycle_with_pendant_path, edge_connectivity, vertex_connectivity, Family, Graph};
use spreadlab_core::harness::{connected_regular_graphs, enumerate_graphs, run_sweep, Quarantine};
use spreadlab_core::linalg::jacobi_eigenvalues;
use spreadlab_core::spectra::{adjacency_spectrum, lemma1_check, signless_spectrum};
use spreadlab_core::transforms::line_graph;
use spreadlab_core::{BoundId, SweepConfig, SymMatrix, VerificationLedger};
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::Instant;

const TOL: f64 = 1e-7;
const SLACK: f64 = 1e-6;

enum Expect {
    Pass,
    /// Literal reading known to be unattainable.
    LiteralFail,
}

struct Outcome {
    label: &'static str,
    passed: bool,
    expect: Expect,
    detail: String,
    secs: f64,
}

fn timed(label: &'static str, expect: Expect, f: impl FnOnce() -> (bool, String)) -> Outcome {
    let start = Instant::now();
    let (passed, detail) = f();
    Outcome { label, passed, expect, detail, secs: start.elapsed().as_secs_f64() }
}

// ---- independent constructions used as oracles -------------------------

fn own_line_graph(g: &Graph) -> Graph {
    let edges = g.edges();
    let mut out = Vec::new();
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            let (p, q) = (edges[a], edges[b]);
            if p.0 == q.0 || p.0 == q.1 || p.1 == q.0 || p.1 == q.1 {
                out.push((a, b));
            }
        }
    }
    Graph::from_edges(edges.len(), &out).unwrap()
}

fn own_total_graph(g: &Graph) -> Graph {
    let n = g.order();
    let edges = g.edges();
    let mut out = edges.clone();
    for (e, &(u, v)) in edges.iter().enumerate() {
        out.push((u, n + e));
        out.push((v, n + e));
    }
    for (a, b) in own_line_graph(g).edges() {
        out.push((n + a, n + b));
    }
    Graph::from_edges(n + edges.len(), &out).unwrap()
}

fn jacobi_adjacency(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let rows: Vec<Vec<f64>> =
        (0..n).map(|u| (0..n).map(|v| if g.has_edge(u, v) { 1.0 } else { 0.0 }).collect()).collect();
    jacobi_eigenvalues(&SymMatrix::from_rows(&rows).unwrap()).unwrap().values().to_vec()
}

fn max_dev(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn bipartite(g: &Graph) -> bool {
    let n = g.order();
    let mut color = vec![u8::MAX; n];
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if g.has_edge(u, v) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        stack.push(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// True when `g` is `K_a ∨ (K_b ∪ K_c)` with `b, c ≥ 1`: the complement is
/// `K_{b,c}` plus `a` isolated vertices.
fn is_join_of_cliques(g: &Graph, a: usize, b: usize, c: usize) -> bool {
    let n = g.order();
    if n != a + b + c {
        return false;
    }
    let universal: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 1).collect();
    let rest: Vec<usize> = (0..n).filter(|v| !universal.contains(v)).collect();
    if universal.len() != a || rest.is_empty() {
        return false;
    }
    // among the rest, adjacency must be an equivalence relation with two classes of sizes {b, c}
    let class: Vec<usize> = rest.iter().filter(|&&v| g.has_edge(rest[0], v) || v == rest[0]).copied().collect();
    let other: Vec<usize> = rest.iter().filter(|v| !class.contains(v)).copied().collect();
    let clique = |s: &[usize]| s.iter().all(|&x| s.iter().all(|&y| x == y || g.has_edge(x, y)));
    let apart = class.iter().all(|&x| other.iter().all(|&y| !g.has_edge(x, y)));
    let mut sizes = [class.len(), other.len()];
    sizes.sort_unstable();
    let mut want = [b, c];
    want.sort_unstable();
    clique(&class) && clique(&other) && apart && sizes == want
}

fn sweep(bounds: &[BoundId], n_min: usize, n_max: usize, connected: bool) -> VerificationLedger {
    let cfg =
        SweepConfig { n_min, n_max, connected_only: connected, bounds: bounds.to_vec(), ..SweepConfig::default() };
    run_sweep(&cfg).unwrap().ledger
}

// ---- criteria ------------------------------------------------------------

fn pendant_cycle_example() -> (bool, String) {
    let start = Instant::now();
    let g = cycle_with_pendant_path(5, 4).unwrap();
    let d = unicyclic_details(&g).unwrap();
    let secs = start.elapsed().as_secs_f64();
    let near = |x: f64, y: f64| (x - y).abs() <= 0.01;
    let ok = near(d.lambda_1, 2.17)
        && near(d.lambda_n, -2.0)
        && d.d0 == 7
        && near(d.spread, 4.17)
        && near(d.line_spread, 4.47)
        && near(d.q_spread, 4.47)
        && near(d.condition_rhs, -2.0939)
        && d.condition_met
        && secs < 1.0;
    let detail = format!(
        "C₅ with a pendant P₅: λ₁={:.4} λ₉={:.4} D₀={} S={:.4} S_line={:.4} S_Q={:.4} condition {:.4} ≥ {:.4}",
        d.lambda_1, d.lambda_n, d.d0, d.spread, d.line_spread, d.q_spread, d.lambda_n, d.condition_rhs
    );
    (ok, detail)
}

fn lemma_one() -> (bool, String) {
    let start = Instant::now();
    let (mut worst, mut worst_lib, mut graphs) = (0.0f64, 0.0f64, 0u64);
    for n in 2..=6 {
        for g in enumerate_graphs(n, true, false).unwrap() {
            let g = g.unwrap();
            let q = signless_spectrum(&g).unwrap();
            let line = jacobi_adjacency(&own_line_graph(&g));
            let (q, m) = (q.values(), g.size());
            let common = n.min(m);
            let mut dev = (0..common).map(|i| (q[i] - line[i] - 2.0).abs()).fold(0.0, f64::max);
            // tail: extra −2 eigenvalues of the line graph, or extra zeros of Q
            dev = line[common..].iter().map(|x| (x + 2.0).abs()).fold(dev, f64::max);
            dev = q[common..].iter().map(|x| x.abs()).fold(dev, f64::max);
            worst = worst.max(dev);
            worst_lib = worst_lib.max(lemma1_check(&g).unwrap().max_deviation);
            graphs += 1;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    let ok = worst < TOL && worst_lib < TOL && secs < 120.0;
    (ok, format!("lemma-1 q_i = λ_i(L)+2 on {graphs} connected graphs n ≤ 6: max deviation {worst:.2e} (library {worst_lib:.2e})"))
}

fn theta() -> (bool, String) {
    let mut graphs = 0u64;
    let mut bad = 0u64;
    for n in 1..=6 {
        for g in enumerate_graphs(n, false, false).unwrap() {
            let g = g.unwrap();
            let z: usize = g.degrees().iter().map(|d| d * d).sum();
            let theta = z / 2 - g.size();
            if line_graph(&g).0.size() != theta || own_line_graph(&g).size() != theta {
                bad += 1;
            }
            graphs += 1;
        }
    }
    (bad == 0, format!("θ = Z/2 − m exact on all {graphs} labeled graphs n ≤ 6, {bad} mismatches"))
}

fn proposition(n_min: usize, n_max: usize) -> (bool, String) {
    let id = BoundId::SpreadVsLineSpread;
    let ledger = sweep(&[id], n_min, n_max, true);
    let s = ledger.stats(id).unwrap();
    let (mut in_domain, mut regular_bipartite) = (0u64, 0u64);
    for n in n_min..=n_max {
        for g in enumerate_graphs(n, true, false).unwrap() {
            let g = g.unwrap();
            if g.size() > n {
                in_domain += 1;
                if g.regular_degree().is_some() && bipartite(&g) {
                    regular_bipartite += 1;
                }
            }
        }
    }
    let ok =
        s.violations == 0 && s.iff_mismatches == 0 && s.hypothesis_met == in_domain && s.tight == regular_bipartite;
    (
        ok,
        format!(
            "S ≤ S_line for m > n ≥ 4, n ∈ [{n_min},{n_max}]: {} graphs, {} violations, tight {} = regular bipartite {}",
            s.hypothesis_met, s.violations, s.tight, regular_bipartite
        ),
    )
}

#[derive(Default)]
struct ClassTally {
    graphs: u64,
    max_spread: f64,
    corrected_violations: u64,
    printed_violations: u64,
    corrected_tight: u64,
    corrected_tight_extremal: u64,
    printed_tight: u64,
    printed_tight_stated: u64,
}

/// Runs the connectivity census once and returns (literal, corrected).
fn connectivity_census() -> ((bool, String), (bool, String)) {
    let mut tallies = std::collections::BTreeMap::<(usize, usize, usize), ClassTally>::new();
    for n in 5..=7 {
        for g in enumerate_graphs(n, true, false).unwrap() {
            let g = g.unwrap();
            let ls = adjacency_spectrum(&line_graph(&g).0).unwrap().spread();
            let invariants = [vertex_connectivity(&g), edge_connectivity(&g), *g.degrees().iter().min().unwrap()];
            for (class, &value) in invariants.iter().enumerate() {
                for k in value.max(1)..=n - 3 {
                    let (nf, kf) = (n as f64, k as f64);
                    let root = ((2.0 * nf - kf).powi(2) + 16.0 * (kf - nf + 1.0)).sqrt();
                    let printed = nf - 2.0 + kf / 2.0 + root;
                    let corrected = nf - 2.0 + kf / 2.0 + root / 2.0;
                    let t = tallies.entry((n, k, class)).or_default();
                    t.graphs += 1;
                    t.max_spread = t.max_spread.max(ls);
                    t.corrected_violations += u64::from(ls > corrected + SLACK);
                    t.printed_violations += u64::from(ls > printed + SLACK);
                    if (ls - corrected).abs() <= SLACK {
                        t.corrected_tight += 1;
                        t.corrected_tight_extremal += u64::from(is_join_of_cliques(&g, k, 1, n - k - 1));
                    }
                    if (ls - printed).abs() <= SLACK {
                        t.printed_tight += 1;
                        t.printed_tight_stated += u64::from(is_join_of_cliques(&g, 1, k, n - k - 1));
                    }
                }
            }
        }
    }
    let cases = tallies.len();
    let literal_ok = tallies
        .values()
        .all(|t| t.printed_violations == 0 && t.printed_tight > 0 && t.printed_tight == t.printed_tight_stated);
    let attained = tallies.values().filter(|t| t.printed_tight > 0).count();
    let min_gap = tallies
        .iter()
        .map(|(&(n, k, _), t)| {
            let (nf, kf) = (n as f64, k as f64);
            nf - 2.0 + kf / 2.0 + ((2.0 * nf - kf).powi(2) + 16.0 * (kf - nf + 1.0)).sqrt() - t.max_spread
        })
        .fold(f64::INFINITY, f64::min);
    let literal = (
        literal_ok,
        format!(
            "[literal] printed bound n−2+k/2+√(…), extremal K₁∨(K_k∪K_(n−k−1)): attained in {attained} of {cases} (n,k,class) cases, smallest gap {min_gap:.4}"
        ),
    );
    let corrected_ok = tallies.values().all(|t| {
        t.corrected_violations == 0 && t.corrected_tight > 0 && t.corrected_tight == t.corrected_tight_extremal
    });
    let tight: u64 = tallies.values().map(|t| t.corrected_tight).sum();
    let violations: u64 = tallies.values().map(|t| t.corrected_violations).sum();
    let corrected = (
        corrected_ok,
        format!(
            "[corrected] n−2+k/2+½√(…) over V, E, Δ classes, n ∈ {{5,6,7}}: {cases} cases, {violations} violations, {tight} tight graphs, all ≅ K_k∨(K₁∪K_(n−k−1))"
        ),
    );
    (literal, corrected)
}

struct JoinTally {
    cases: usize,
    literal_failures: usize,
    /// Triples whose closed-form multiset has a different size from m of the stated graph.
    literal_size_mismatches: usize,
    literal_worst: f64,
    corrected_worst: f64,
}

fn join_census() -> JoinTally {
    let mut t = JoinTally {
        cases: 0,
        literal_failures: 0,
        literal_size_mismatches: 0,
        literal_worst: 0.0,
        corrected_worst: 0.0,
    };
    for n in 3..=30 {
        for k in 1..n {
            for i in 1..n - k {
                let stated = Family::JoinFamily { n, k, i }.build().unwrap();
                let described = Family::JoinFamily { n, k: i, i: k }.build().unwrap();
                let Ok(closed) = join_family_line_spectrum(n, k, i) else { continue };
                if n + stated.size() > 60 || n + described.size() > 60 {
                    continue;
                }
                t.cases += 1;
                let literal = max_dev(closed.values(), &jacobi_adjacency(&own_line_graph(&stated)));
                if literal > TOL {
                    t.literal_failures += 1;
                }
                if literal.is_finite() {
                    t.literal_worst = t.literal_worst.max(literal);
                } else {
                    t.literal_size_mismatches += 1;
                }
                let corrected = max_dev(closed.values(), &jacobi_adjacency(&own_line_graph(&described)));
                t.corrected_worst = t.corrected_worst.max(corrected);
            }
        }
    }
    t
}

struct RegularTally {
    graphs: usize,
    spectrum_worst: f64,
    exact_failures_r2: usize,
    exact_worst_r2: f64,
    bracket_failures_r2: usize,
    r2_graphs: usize,
    exact_failures_r3: usize,
    exact_worst_r3: f64,
    bracket_failures_r3: usize,
    r2_witness: String,
}

fn regular_census() -> RegularTally {
    let mut t = RegularTally {
        graphs: 0,
        spectrum_worst: 0.0,
        exact_failures_r2: 0,
        exact_worst_r2: 0.0,
        bracket_failures_r2: 0,
        r2_graphs: 0,
        exact_failures_r3: 0,
        exact_worst_r3: 0.0,
        bracket_failures_r3: 0,
        r2_witness: String::new(),
    };
    for g in connected_regular_graphs(3, 8).unwrap() {
        t.graphs += 1;
        let r = g.regular_degree().unwrap() as f64;
        let total = jacobi_adjacency(&own_total_graph(&g));
        t.spectrum_worst = t.spectrum_worst.max(max_dev(regular_total_spectrum(&g).unwrap().values(), &total));
        let lam = jacobi_adjacency(&g);
        let (l1, ln) = (lam[0], *lam.last().unwrap());
        let s = l1 - ln;
        let actual = total[0] - total.last().unwrap();
        let root = (4.0 * ln + r * r + 4.0).max(0.0).sqrt();
        let exact = (2.0 * s + r + 2.0 + root) / 2.0;
        let lower = (2.0 * s + ln + 2.0 + root) / 2.0;
        let upper = s + root - ln;
        let dev = (exact - actual).abs();
        let bracket_bad = lower > actual + SLACK || actual > upper + SLACK;
        if r < 3.0 {
            t.r2_graphs += 1;
            if dev > TOL && t.r2_witness.is_empty() {
                t.r2_witness = format!(
                    "{} (n={}, S(T)={actual:.4}, formula {exact:.4}, upper {upper:.4})",
                    g.to_graph6(),
                    g.order()
                );
            }
            t.exact_failures_r2 += usize::from(dev > TOL);
            t.exact_worst_r2 = t.exact_worst_r2.max(dev);
            t.bracket_failures_r2 += usize::from(bracket_bad);
        } else {
            t.exact_failures_r3 += usize::from(dev > TOL);
            t.exact_worst_r3 = t.exact_worst_r3.max(dev);
            t.bracket_failures_r3 += usize::from(bracket_bad);
        }
    }
    t
}

fn total_lower_bounds() -> (bool, String) {
    let ids = [BoundId::TotalQSpreadLower, BoundId::TotalSpreadLower, BoundId::TotalLaplacianSpreadLower];
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../quarantine.tsv");
    let quarantine = Quarantine::load(&path).unwrap();
    let cfg = SweepConfig { n_min: 3, n_max: 6, bounds: ids.to_vec(), quarantine, ..SweepConfig::default() };
    let ledger = run_sweep(&cfg).unwrap().ledger;
    let mut ok = true;
    let mut parts = Vec::new();
    let mut listed = Vec::new();
    for id in ids {
        let s = ledger.stats(id).unwrap();
        ok &= s.violations == 0 && s.hypothesis_met > 0;
        listed.extend(s.quarantined_witnesses.iter().map(|w| format!("{id}:{w}")));
        parts.push(format!(
            "{id} {} checked, {} violations, min slack {:.4}",
            s.hypothesis_met,
            s.violations,
            s.min_slack.unwrap_or(f64::NAN)
        ));
    }
    ok &= listed.len() <= 5;
    let list = if listed.is_empty() { "none".to_string() } else { listed.join(" ") };
    (ok, format!("total-graph lower bounds, connected 3 ≤ n ≤ 6: {}; quarantined: {list}", parts.join("; ")))
}

fn interlacing() -> (bool, String) {
    let quotient = sweep(&[BoundId::QuotientInterlacing], 1, 6, true);
    let q = quotient.stats(BoundId::QuotientInterlacing).unwrap();
    let edge = sweep(&[BoundId::EdgeInterlacing], 1, 5, false);
    let e = edge.stats(BoundId::EdgeInterlacing).unwrap();
    let ok = q.violations == 0 && e.violations == 0 && q.hypothesis_met > 0 && e.hypothesis_met > 0;
    (
        ok,
        format!(
            "quotient interlacing on T(G), connected n ≤ 6: {} graphs, {} violations; edge-deletion Q interlacing, n ≤ 5: {} pairs, {} violations",
            q.hypothesis_met, q.violations, e.hypothesis_met, e.violations
        ),
    )
}

fn determinism() -> (bool, String) {
    let dir = tempfile::tempdir().unwrap();
    let run = |jobs: &str| {
        let out = dir.path().join(format!("jobs{jobs}"));
        let status = Command::new(env!("CARGO_BIN_EXE_spreadlab"))
            .args(["verify", "--n-max", "5", "--connected", "--bounds", "all", "--jobs", jobs, "--out"])
            .arg(&out)
            .output()
            .unwrap();
        let json = std::fs::read(out.join("ledger.json")).unwrap();
        let text = std::fs::read(out.join("ledger.txt")).unwrap();
        (status.status.code(), status.stdout, json, text)
    };
    let one = run("1");
    let eight = run("8");
    let ok = one.0 == Some(0) && one == eight;
    (ok, format!("verify --n-max 5 --connected with --jobs 1 and --jobs 8: ledger.json, ledger.txt and stdout identical = {}", one == eight))
}

fn main() -> ExitCode {
    let mut results = vec![timed("1", Expect::Pass, pendant_cycle_example)];
    results.push(timed("2", Expect::Pass, lemma_one));
    results.push(timed("3", Expect::Pass, theta));
    results.push(timed("4", Expect::Pass, || proposition(4, 6)));
    results.push(timed("4 (n=7)", Expect::Pass, || proposition(7, 7)));

    let start = Instant::now();
    let (literal, corrected) = connectivity_census();
    let secs = start.elapsed().as_secs_f64();
    results.push(Outcome {
        label: "5 literal",
        passed: literal.0,
        expect: Expect::LiteralFail,
        detail: literal.1,
        secs,
    });
    results.push(Outcome {
        label: "5 corrected",
        passed: corrected.0,
        expect: Expect::Pass,
        detail: corrected.1,
        secs: 0.0,
    });

    let start = Instant::now();
    let join = join_census();
    let regular = regular_census();
    let secs = start.elapsed().as_secs_f64();
    results.push(Outcome {
        label: "6 literal",
        passed: join.literal_failures == 0 && regular.spectrum_worst < TOL,
        expect: Expect::LiteralFail,
        detail: format!(
            "[literal] closed-form line spectrum vs L(K_i∨(K_k∪K_(n−k−i))): {} of {} triples deviate ({} by multiset size, worst same-size deviation {:.3})",
            join.literal_failures, join.cases, join.literal_size_mismatches, join.literal_worst
        ),
        secs,
    });
    results.push(Outcome {
        label: "6 corrected",
        passed: join.corrected_worst < TOL && regular.spectrum_worst < TOL && join.cases > 0,
        expect: Expect::Pass,
        detail: format!(
            "[corrected] closed form vs L(K_k∨(K_i∪K_(n−k−i))) on {} triples, worst {:.2e}; total-graph spectra of {} connected regular graphs n ≤ 8, worst {:.2e}",
            join.cases, join.corrected_worst, regular.graphs, regular.spectrum_worst
        ),
        secs: 0.0,
    });

    results.push(timed("7", Expect::Pass, total_lower_bounds));

    results.push(Outcome {
        label: "8 literal",
        passed: regular.exact_failures_r2 + regular.exact_failures_r3 == 0
            && regular.bracket_failures_r2 + regular.bracket_failures_r3 == 0,
        expect: Expect::LiteralFail,
        detail: format!(
            "[literal] exact S(T(G)) for r ≥ 2: {} of {} degree-2 graphs deviate (worst {:.4}), {} break the bracket; first {}",
            regular.exact_failures_r2, regular.r2_graphs, regular.exact_worst_r2, regular.bracket_failures_r2, regular.r2_witness
        ),
        secs: 0.0,
    });
    results.push(Outcome {
        label: "8 r ≥ 3",
        passed: regular.exact_failures_r3 == 0 && regular.bracket_failures_r3 == 0,
        expect: Expect::Pass,
        detail: format!(
            "[r ≥ 3] exact S(T(G)) on {} graphs: worst deviation {:.2e}, {} bracket failures",
            regular.graphs - regular.r2_graphs,
            regular.exact_worst_r3,
            regular.bracket_failures_r3
        ),
        secs: 0.0,
    });

    results.push(timed("9", Expect::Pass, interlacing));
    results.push(timed("10", Expect::Pass, determinism));

    let mut unexpected = 0;
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        let note = match (&r.expect, r.passed) {
            (Expect::Pass, true) | (Expect::LiteralFail, false) => "",
            (Expect::Pass, false) => {
                unexpected += 1;
                "  <- unexpected"
            }
            (Expect::LiteralFail, true) => {
                unexpected += 1;
                "  <- literal reading passed; revisit the analysis"
            }
        };
        println!("criterion {:<12} {status}  {} ({:.1}s){note}", r.label, r.detail, r.secs);
    }
    let fails = results.iter().filter(|r| !r.passed).count();
    println!(
        "acceptance: {} pass, {fails} fail ({} literal readings documented as unattainable), {unexpected} unexpected",
        results.len() - fails,
        results.iter().filter(|r| matches!(r.expect, Expect::LiteralFail) && !r.passed).count()
    );
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
