//! Statements comparing a graph's spreads with those of its line graph.

use super::{radical, Analysis, BoundId, BoundReport, Relation};
use crate::error::{Error, Result};
use crate::graph::{
    diameter, is_clique_join_of_two_cliques, max_induced_tree_diameter, max_pendant_tree_diameter, unicyclic_cycle,
    Graph,
};
use crate::spectra::{adjacency_spectrum, signless_spectrum};
use crate::transforms::line_graph;
use crate::{SLACK_TOL, STRICT_MARGIN};
use serde::Serialize;
use std::f64::consts::PI;

fn has_bipartite_component(g: &Graph) -> bool {
    g.components().iter().any(|c| g.induced_subgraph(c).is_bipartite())
}

pub(super) fn trichotomy(a: &Analysis) -> Result<BoundReport> {
    let id = BoundId::CharactTrichotomy;
    let (n, m) = (a.n(), a.m());
    if m == 0 {
        return Ok(BoundReport::gated(id, Relation::Equality, "no edges"));
    }
    let q = a.signless()?;
    let q1 = q.values()[0];
    let sq = q.spread();
    let sl = a.line_spectrum()?.spread();
    Ok(match m.cmp(&n) {
        std::cmp::Ordering::Equal => BoundReport::new(id, Relation::Equality, sq, sl).note("m = n"),
        std::cmp::Ordering::Greater => BoundReport::new(id, Relation::Lower, sq, sl)
            .note("m > n")
            .predict(has_bipartite_component(a.graph()))
            .side((sl - q1).abs() <= SLACK_TOL, format!("S_L = {sl} differs from q₁ = {q1}")),
        std::cmp::Ordering::Less => {
            let qm = q.values()[m - 1];
            BoundReport::new(id, Relation::Upper, q1, sl)
                .note("m < n")
                .side((sl - (q1 - qm)).abs() <= SLACK_TOL, format!("S_L = {sl} differs from q₁ − q_m"))
        }
    })
}

/// Lemma-style trichotomy comparing `S_L(G)` with `S_Q(G)` by the sign of `m − n`.
pub fn charact_trichotomy(g: &Graph) -> Result<BoundReport> {
    trichotomy(&Analysis::new(g))
}

/// `S(G) ≤ S_L(G)` for connected graphs with `m > n ≥ 4`, with equality iff
/// `G` is regular and bipartite.
pub fn spread_vs_line_spread(g: &Graph) -> Result<BoundReport> {
    spread_vs_line(&Analysis::new(g))
}

pub(super) fn spread_vs_line(a: &Analysis) -> Result<BoundReport> {
    let id = BoundId::SpreadVsLineSpread;
    if !a.is_connected() || a.m() <= a.n() || a.n() < 4 {
        return Ok(BoundReport::gated(id, Relation::Upper, "needs a connected graph with m > n ≥ 4"));
    }
    let g = a.graph();
    let predicted = g.regular_degree().is_some() && g.is_bipartite();
    Ok(BoundReport::new(id, Relation::Upper, a.line_spectrum()?.spread(), a.adjacency()?.spread()).predict(predicted))
}

/// Everything the unicyclic odd-girth theorem computes for one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UnicyclicDetails {
    pub girth: usize,
    /// Largest diameter of a tree hanging off the cycle.
    pub h: usize,
    /// Largest diameter over all induced trees, cycle vertices included.
    pub h_global: usize,
    pub d0: usize,
    pub lambda_1: f64,
    pub lambda_n: f64,
    /// `1 − cos(π/(D₀+1)) − λ₁`, which `λ_n` must reach.
    pub condition_rhs: f64,
    pub condition_met: bool,
    pub spread: f64,
    pub q_spread: f64,
    pub line_spread: f64,
}

struct Core {
    girth: usize,
    h: usize,
    d0: usize,
    l1: f64,
    ln: f64,
    rhs: f64,
}

fn unicyclic_core(a: &Analysis) -> Result<std::result::Result<Core, &'static str>> {
    let g = a.graph();
    let Some(cycle) = unicyclic_cycle(g) else {
        return Ok(Err("graph is not connected and unicyclic"));
    };
    let girth = cycle.len();
    if girth % 2 == 0 {
        return Ok(Err("girth is even"));
    }
    let h = max_pendant_tree_diameter(g)?;
    let d0 = (girth + 1) / 2 + h;
    let spec = a.adjacency()?;
    let (l1, ln) = (spec.values()[0], spec.values()[spec.len() - 1]);
    let rhs = 1.0 - (PI / (d0 + 1) as f64).cos() - l1;
    Ok(Ok(Core { girth, h, d0, l1, ln, rhs }))
}

/// The condition `λ_n ≥ rhs` is evaluated with a small absolute margin.
fn condition(core: &Core) -> bool {
    core.ln >= core.rhs - 1e-9
}

pub(super) fn unicyclic(a: &Analysis) -> Result<BoundReport> {
    let id = BoundId::UnicyclicTheorem;
    let core = match unicyclic_core(a)? {
        Ok(core) => core,
        Err(why) => return Ok(BoundReport::gated(id, Relation::Upper, why)),
    };
    let facts = format!("girth={} h={} D0={} rhs={:.6}", core.girth, core.h, core.d0, core.rhs);
    if !condition(&core) {
        return Ok(BoundReport::gated(id, Relation::Upper, format!("λ_n below the threshold; {facts}")));
    }
    let sl = a.line_spectrum()?.spread();
    let sq = a.signless()?.spread();
    Ok(BoundReport::new(id, Relation::Upper, sl, a.adjacency()?.spread())
        .note(facts)
        .side((sl - sq).abs() <= SLACK_TOL, format!("S_L = {sl} differs from S_Q = {sq}")))
}

/// `S(G) ≤ S_L(G)` for connected unicyclic graphs of odd girth satisfying
/// `λ_n ≥ 1 − cos(π/(D₀+1)) − λ₁` with `D₀ = (g+1)/2 + h`.
pub fn unicyclic_theorem(g: &Graph) -> Result<BoundReport> {
    unicyclic(&Analysis::new(g))
}

pub fn unicyclic_details(g: &Graph) -> Result<UnicyclicDetails> {
    let a = Analysis::new(g);
    let core = unicyclic_core(&a)?.map_err(|why| Error::Hypothesis(why.into()))?;
    Ok(UnicyclicDetails {
        girth: core.girth,
        h: core.h,
        h_global: max_induced_tree_diameter(g)?,
        d0: core.d0,
        lambda_1: core.l1,
        lambda_n: core.ln,
        condition_rhs: core.rhs,
        condition_met: condition(&core),
        spread: a.adjacency()?.spread(),
        q_spread: a.signless()?.spread(),
        line_spread: a.line_spectrum()?.spread(),
    })
}

pub(super) fn grone(a: &Analysis, id: BoundId) -> Result<BoundReport> {
    let g = a.graph();
    if !g.is_tree() || a.n() < 2 {
        return Ok(BoundReport::gated(id, Relation::Upper, "not a tree on at least two vertices"));
    }
    let lap = a.laplacian()?;
    let alg = lap.values()[a.n() - 2];
    if id == BoundId::GroneTreeSixVertices {
        if a.n() < 6 {
            return Ok(BoundReport::gated(id, Relation::Upper, "fewer than six vertices"));
        }
        return Ok(BoundReport::new(id, Relation::Upper, 0.49, alg));
    }
    let diam = diameter(g).expect("trees are connected");
    let bound = 1.0 - (PI / (diam + 1) as f64).cos();
    Ok(BoundReport::new(id, Relation::Upper, bound, alg).note(format!("diam={diam}")))
}

/// Algebraic connectivity of a tree against the diameter bound and the 0.49
/// bound. Both are recorded rather than asserted.
pub fn grone_tree_bound(t: &Graph) -> Result<[BoundReport; 2]> {
    let a = Analysis::new(t);
    Ok([grone(&a, BoundId::GroneTreeDiameter)?, grone(&a, BoundId::GroneTreeSixVertices)?])
}

pub(super) fn edge_addition(a: &Analysis, u: usize, v: usize) -> Result<BoundReport> {
    let id = BoundId::EdgeAdditionMonotonicity;
    let plus = a.graph().with_edge(u, v).map_err(|_| Error::Input(format!("{u}-{v} is already an edge")))?;
    if !a.is_connected() {
        return Ok(
            BoundReport::gated(id, Relation::StrictUpper, "graph is disconnected").with_param(format!("edge {u}-{v}"))
        );
    }
    let q_before = a.signless()?.values()[0];
    let q_after = signless_spectrum(&plus)?.values()[0];
    let line_before = a.line_spectrum()?;
    let line_after = adjacency_spectrum(&line_graph(&plus).0)?;
    let (r_before, r_after) = (line_before.values()[0], line_after.values()[0]);
    Ok(BoundReport::new(id, Relation::StrictUpper, line_after.spread(), line_before.spread())
        .with_param(format!("edge {u}-{v}"))
        .side(q_after - q_before > STRICT_MARGIN, format!("q₁ {q_before} → {q_after} not strict"))
        .side(r_after - r_before > STRICT_MARGIN, format!("λ₁(L) {r_before} → {r_after} not strict")))
}

/// Adding the non-edge `uv` to a connected graph strictly increases `q₁`,
/// `λ₁(L(G))` and `S_L(G)`.
pub fn edge_addition_monotonicity(g: &Graph, u: usize, v: usize) -> Result<BoundReport> {
    edge_addition(&Analysis::new(g), u, v)
}

/// Which connectivity-type invariant defines the graph class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConnectivityClass {
    /// `κ(G) ≤ k`
    Vertex,
    /// `ε(G) ≤ k`
    Edge,
    /// `δ(G) ≤ k`
    MinDegree,
}

impl ConnectivityClass {
    pub fn of(id: BoundId) -> Option<Self> {
        match id {
            BoundId::ConnectivityVertex => Some(ConnectivityClass::Vertex),
            BoundId::ConnectivityEdge => Some(ConnectivityClass::Edge),
            BoundId::ConnectivityMinDegree => Some(ConnectivityClass::MinDegree),
            _ => None,
        }
    }

    pub fn id(self) -> BoundId {
        match self {
            ConnectivityClass::Vertex => BoundId::ConnectivityVertex,
            ConnectivityClass::Edge => BoundId::ConnectivityEdge,
            ConnectivityClass::MinDegree => BoundId::ConnectivityMinDegree,
        }
    }

    fn invariant(self, a: &Analysis) -> usize {
        match self {
            ConnectivityClass::Vertex => a.vertex_connectivity(),
            ConnectivityClass::Edge => a.edge_connectivity(),
            ConnectivityClass::MinDegree => a.degrees().min_degree,
        }
    }
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k == 0 || k + 1 >= n {
        return Err(Error::Parameter(format!("k must satisfy 1 ≤ k ≤ n − 2, got n={n}, k={k}")));
    }
    Ok(())
}

/// Largest line-graph spread over connected graphs with `κ ≤ k`, attained by
/// `K_k ∨ (K_1 ∪ K_{n−k−1})`: `n − 2 + k/2 + ½√((2n−k)² + 16(k−n+1))`.
pub fn connectivity_bound(n: usize, k: usize) -> Result<f64> {
    check_k(n, k)?;
    let (n, k) = (n as f64, k as f64);
    let root = radical((2.0 * n - k).powi(2) + 16.0 * (k - n + 1.0)).unwrap_or(0.0);
    Ok(n - 2.0 + k / 2.0 + 0.5 * root)
}

/// The same expression with the square root not halved. It is a valid but
/// never attained upper bound.
pub fn connectivity_bound_as_printed(n: usize, k: usize) -> Result<f64> {
    check_k(n, k)?;
    let (n, k) = (n as f64, k as f64);
    let root = radical((2.0 * n - k).powi(2) + 16.0 * (k - n + 1.0)).unwrap_or(0.0);
    Ok(n - 2.0 + k / 2.0 + root)
}

pub(super) fn connectivity(a: &Analysis, class: ConnectivityClass, k: usize) -> Result<BoundReport> {
    let n = a.n();
    check_k(n, k)?;
    let id = class.id();
    if !a.is_connected() {
        return Ok(BoundReport::gated(id, Relation::Upper, "graph is disconnected").with_param(format!("k={k}")));
    }
    if n < 5 {
        // below five vertices the extremal graph has m ≤ n and the closed form is not attained
        return Ok(BoundReport::gated(id, Relation::Upper, "needs n ≥ 5").with_param(format!("k={k}")));
    }
    let value = class.invariant(a);
    if value > k {
        return Ok(
            BoundReport::gated(id, Relation::Upper, format!("invariant is {value}")).with_param(format!("k={k}"))
        );
    }
    let bound = connectivity_bound(n, k)?;
    let predicted = is_clique_join_of_two_cliques(a.graph(), k, 1, n - k - 1);
    Ok(BoundReport::new(id, Relation::Upper, bound, a.line_spectrum()?.spread())
        .predict(predicted)
        .with_param(format!("k={k}")))
}

/// Evaluates the connectivity bound for one class and one `k`.
pub fn connectivity_spread_bound(g: &Graph, class: ConnectivityClass, k: usize) -> Result<BoundReport> {
    connectivity(&Analysis::new(g), class, k)
}
