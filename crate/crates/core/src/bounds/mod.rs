//! Every statement is evaluated as a [`BoundReport`], which keeps the
//! hypothesis gate apart from the inequality and records the structural
//! equality prediction where one exists.

mod closed_forms;
mod line;
mod preliminary;
mod total;

pub use closed_forms::{join_family_line_spectrum, join_family_line_spread};
pub use line::{
    charact_trichotomy, connectivity_bound, connectivity_bound_as_printed, connectivity_spread_bound,
    edge_addition_monotonicity, grone_tree_bound, spread_vs_line_spread, unicyclic_details, unicyclic_theorem,
    ConnectivityClass, UnicyclicDetails,
};
pub use preliminary::{gregory_upper, line_spread_upper, two_lambda_upper};
pub use total::{
    regular_total_min_eig, regular_total_spectrum, regular_total_spread, total_laplacian_spread_lower,
    total_q_spread_lower, total_spread_lower,
};

use crate::error::{Error, Result};
use crate::graph::{degree_profile, edge_connectivity, vertex_connectivity, DegreeProfile, Graph};
use crate::spectra::{adjacency_spectrum, laplacian_spectrum, signless_spectrum, Spectrum};
use crate::transforms::{line_graph, total_graph, EdgeIndex};
use crate::{SLACK_TOL, STRICT_MARGIN};
use serde::{Deserialize, Serialize};
use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

/// Identifies one checked statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundId {
    LineEdgeCount,
    IncidenceIdentities,
    Lemma1Identity,
    GregoryUpper,
    LineSpreadUpper,
    TwoLambdaUpper,
    CharactTrichotomy,
    SpreadVsLineSpread,
    UnicyclicTheorem,
    GroneTreeDiameter,
    GroneTreeSixVertices,
    EdgeInterlacing,
    EdgeAdditionMonotonicity,
    ConnectivityVertex,
    ConnectivityEdge,
    ConnectivityMinDegree,
    TotalDegreeFormula,
    QuotientInterlacing,
    TotalQSpreadLower,
    TotalSpreadLower,
    TotalLaplacianSpreadLower,
    RegularTotalSpectrum,
    RegularTotalMinEig,
    RegularTotalSpread,
}

impl BoundId {
    pub const ALL: [BoundId; 24] = [
        BoundId::LineEdgeCount,
        BoundId::IncidenceIdentities,
        BoundId::Lemma1Identity,
        BoundId::GregoryUpper,
        BoundId::LineSpreadUpper,
        BoundId::TwoLambdaUpper,
        BoundId::CharactTrichotomy,
        BoundId::SpreadVsLineSpread,
        BoundId::UnicyclicTheorem,
        BoundId::GroneTreeDiameter,
        BoundId::GroneTreeSixVertices,
        BoundId::EdgeInterlacing,
        BoundId::EdgeAdditionMonotonicity,
        BoundId::ConnectivityVertex,
        BoundId::ConnectivityEdge,
        BoundId::ConnectivityMinDegree,
        BoundId::TotalDegreeFormula,
        BoundId::QuotientInterlacing,
        BoundId::TotalQSpreadLower,
        BoundId::TotalSpreadLower,
        BoundId::TotalLaplacianSpreadLower,
        BoundId::RegularTotalSpectrum,
        BoundId::RegularTotalMinEig,
        BoundId::RegularTotalSpread,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundId::LineEdgeCount => "line_edge_count",
            BoundId::IncidenceIdentities => "incidence_identities",
            BoundId::Lemma1Identity => "lemma1_identity",
            BoundId::GregoryUpper => "gregory_upper",
            BoundId::LineSpreadUpper => "line_spread_upper",
            BoundId::TwoLambdaUpper => "two_lambda_upper",
            BoundId::CharactTrichotomy => "charact_trichotomy",
            BoundId::SpreadVsLineSpread => "spread_vs_line_spread",
            BoundId::UnicyclicTheorem => "unicyclic_theorem",
            BoundId::GroneTreeDiameter => "grone_tree_diameter",
            BoundId::GroneTreeSixVertices => "grone_tree_six_vertices",
            BoundId::EdgeInterlacing => "edge_interlacing",
            BoundId::EdgeAdditionMonotonicity => "edge_addition_monotonicity",
            BoundId::ConnectivityVertex => "connectivity_vertex",
            BoundId::ConnectivityEdge => "connectivity_edge",
            BoundId::ConnectivityMinDegree => "connectivity_min_degree",
            BoundId::TotalDegreeFormula => "total_degree_formula",
            BoundId::QuotientInterlacing => "quotient_interlacing",
            BoundId::TotalQSpreadLower => "total_q_spread_lower",
            BoundId::TotalSpreadLower => "total_spread_lower",
            BoundId::TotalLaplacianSpreadLower => "total_laplacian_spread_lower",
            BoundId::RegularTotalSpectrum => "regular_total_spectrum",
            BoundId::RegularTotalMinEig => "regular_total_min_eig",
            BoundId::RegularTotalSpread => "regular_total_spread",
        }
    }

    /// Statements whose failures are recorded but never count as violations.
    /// Both tree bounds fail on small trees as stated.
    pub fn is_asserted(self) -> bool {
        !matches!(self, BoundId::GroneTreeDiameter | BoundId::GroneTreeSixVertices)
    }

    /// Statements that construct the total graph or fan out over edges and
    /// non-edges; sweeps cap these at six vertices.
    pub fn is_heavy(self) -> bool {
        matches!(
            self,
            BoundId::EdgeInterlacing
                | BoundId::EdgeAdditionMonotonicity
                | BoundId::TotalDegreeFormula
                | BoundId::QuotientInterlacing
                | BoundId::TotalQSpreadLower
                | BoundId::TotalSpreadLower
                | BoundId::TotalLaplacianSpreadLower
                | BoundId::RegularTotalSpectrum
                | BoundId::RegularTotalMinEig
                | BoundId::RegularTotalSpread
        )
    }

    /// Parses a comma-separated list of names, or `all`.
    pub fn parse_list(text: &str) -> Result<Vec<BoundId>> {
        if text.trim() == "all" {
            return Ok(BoundId::ALL.to_vec());
        }
        let mut out: Vec<BoundId> =
            text.split(',').filter(|s| !s.trim().is_empty()).map(|s| s.trim().parse()).collect::<Result<_>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown bound id `{s}`")))
    }
}

/// How `bound_value` and `actual_value` are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `actual ≤ bound`
    Upper,
    /// `actual ≥ bound`
    Lower,
    /// `actual = bound`
    Equality,
    /// `actual < bound` by more than the strict margin
    StrictUpper,
}

/// One statement evaluated on one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub bound_id: BoundId,
    pub hypothesis_met: bool,
    pub relation: Relation,
    pub bound_value: f64,
    pub actual_value: f64,
    /// `bound − actual` for upper bounds and equalities, `actual − bound` for lower bounds.
    pub slack: f64,
    pub tight: bool,
    /// Structural evaluation of a stated equality characterization.
    pub equality_predicted: Option<bool>,
    /// Auxiliary identities attached to the statement.
    pub side_conditions_ok: bool,
    /// The parameter of a fanned-out statement, such as `k=2` or `edge 0-3`.
    pub param: Option<String>,
    pub notes: Vec<String>,
}

impl BoundReport {
    pub(crate) fn new(bound_id: BoundId, relation: Relation, bound_value: f64, actual_value: f64) -> Self {
        let slack = match relation {
            Relation::Lower => actual_value - bound_value,
            _ => bound_value - actual_value,
        };
        BoundReport {
            bound_id,
            hypothesis_met: true,
            relation,
            bound_value,
            actual_value,
            slack,
            tight: slack.abs() <= SLACK_TOL,
            equality_predicted: None,
            side_conditions_ok: true,
            param: None,
            notes: Vec::new(),
        }
    }

    /// A report whose hypothesis is not satisfied; nothing is compared.
    pub(crate) fn gated(bound_id: BoundId, relation: Relation, note: impl Into<String>) -> Self {
        BoundReport {
            hypothesis_met: false,
            notes: vec![note.into()],
            ..BoundReport::new(bound_id, relation, f64::NAN, f64::NAN)
        }
    }

    pub(crate) fn predict(mut self, equality: bool) -> Self {
        self.equality_predicted = Some(equality);
        self
    }

    pub(crate) fn side(mut self, ok: bool, note: impl Into<String>) -> Self {
        if !ok {
            self.side_conditions_ok = false;
            self.notes.push(note.into());
        }
        self
    }

    pub(crate) fn with_param(mut self, param: String) -> Self {
        self.param = Some(param);
        self
    }

    pub(crate) fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// The inequality itself, ignoring side conditions and predictions.
    pub fn inequality_holds(&self) -> bool {
        match self.relation {
            Relation::Upper | Relation::Lower => self.slack >= -SLACK_TOL,
            Relation::Equality => self.slack.abs() <= SLACK_TOL,
            Relation::StrictUpper => self.slack > STRICT_MARGIN,
        }
    }

    /// Tightness agrees with the predicted equality case, when one is stated.
    pub fn iff_consistent(&self) -> bool {
        self.equality_predicted.map_or(true, |p| p == self.tight)
    }

    /// The full statement holds on this graph. Vacuously true when gated out.
    pub fn holds(&self) -> bool {
        !self.hypothesis_met || (self.inequality_holds() && self.side_conditions_ok && self.iff_consistent())
    }

    /// A failure of an asserted statement inside its hypotheses.
    pub fn is_violation(&self) -> bool {
        self.bound_id.is_asserted() && !self.holds()
    }
}

/// `sqrt(x)`, clamping `-1e-12 < x < 0` to zero; `None` for genuinely negative radicands.
pub(crate) fn radical(x: f64) -> Option<f64> {
    if x >= 0.0 {
        Some(x.sqrt())
    } else if x > -1e-12 {
        Some(0.0)
    } else {
        None
    }
}

/// Lazily computed spectra and invariants of one graph, shared by every
/// statement evaluated on it.
pub struct Analysis<'a> {
    graph: &'a Graph,
    degrees: OnceCell<DegreeProfile>,
    adjacency: OnceCell<Spectrum>,
    laplacian: OnceCell<Spectrum>,
    signless: OnceCell<Spectrum>,
    line: OnceCell<(Graph, EdgeIndex)>,
    line_spectrum: OnceCell<Spectrum>,
    total: OnceCell<Graph>,
    total_adjacency: OnceCell<Spectrum>,
    total_laplacian: OnceCell<Spectrum>,
    total_signless: OnceCell<Spectrum>,
    vertex_connectivity: OnceCell<usize>,
    edge_connectivity: OnceCell<usize>,
    connected: OnceCell<bool>,
}

fn cached<T>(cell: &OnceCell<T>, f: impl FnOnce() -> Result<T>) -> Result<&T> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = f()?;
    Ok(cell.get_or_init(|| v))
}

impl<'a> Analysis<'a> {
    pub fn new(graph: &'a Graph) -> Self {
        Analysis {
            graph,
            degrees: OnceCell::new(),
            adjacency: OnceCell::new(),
            laplacian: OnceCell::new(),
            signless: OnceCell::new(),
            line: OnceCell::new(),
            line_spectrum: OnceCell::new(),
            total: OnceCell::new(),
            total_adjacency: OnceCell::new(),
            total_laplacian: OnceCell::new(),
            total_signless: OnceCell::new(),
            vertex_connectivity: OnceCell::new(),
            edge_connectivity: OnceCell::new(),
            connected: OnceCell::new(),
        }
    }

    pub fn graph(&self) -> &'a Graph {
        self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.order()
    }

    pub fn m(&self) -> usize {
        self.graph.size()
    }

    pub fn is_connected(&self) -> bool {
        *self.connected.get_or_init(|| self.graph.is_connected())
    }

    pub fn degrees(&self) -> &DegreeProfile {
        self.degrees.get_or_init(|| degree_profile(self.graph))
    }

    pub fn zagreb(&self) -> f64 {
        self.degrees().zagreb as f64
    }

    pub fn adjacency(&self) -> Result<&Spectrum> {
        cached(&self.adjacency, || adjacency_spectrum(self.graph))
    }

    pub fn laplacian(&self) -> Result<&Spectrum> {
        cached(&self.laplacian, || laplacian_spectrum(self.graph))
    }

    pub fn signless(&self) -> Result<&Spectrum> {
        cached(&self.signless, || signless_spectrum(self.graph))
    }

    pub fn line(&self) -> &(Graph, EdgeIndex) {
        self.line.get_or_init(|| line_graph(self.graph))
    }

    pub fn line_spectrum(&self) -> Result<&Spectrum> {
        cached(&self.line_spectrum, || adjacency_spectrum(&self.line().0))
    }

    /// `S_L(G)`, the adjacency spread of the line graph; `None` without edges.
    pub fn line_spread(&self) -> Result<Option<f64>> {
        if self.m() == 0 {
            return Ok(None);
        }
        Ok(Some(self.line_spectrum()?.spread()))
    }

    pub fn total(&self) -> &Graph {
        self.total.get_or_init(|| total_graph(self.graph))
    }

    pub fn total_adjacency(&self) -> Result<&Spectrum> {
        cached(&self.total_adjacency, || adjacency_spectrum(self.total()))
    }

    pub fn total_laplacian(&self) -> Result<&Spectrum> {
        cached(&self.total_laplacian, || laplacian_spectrum(self.total()))
    }

    pub fn total_signless(&self) -> Result<&Spectrum> {
        cached(&self.total_signless, || signless_spectrum(self.total()))
    }

    pub fn vertex_connectivity(&self) -> usize {
        *self.vertex_connectivity.get_or_init(|| vertex_connectivity(self.graph))
    }

    pub fn edge_connectivity(&self) -> usize {
        *self.edge_connectivity.get_or_init(|| edge_connectivity(self.graph))
    }

    /// Evaluates one statement. Statements with a parameter fan out: the
    /// connectivity bounds over `k = 1..=n−3`, the edge checks over every
    /// edge or non-edge.
    pub fn evaluate(&self, id: BoundId) -> Result<Vec<BoundReport>> {
        let one = |r: Result<BoundReport>| r.map(|r| vec![r]);
        match id {
            BoundId::LineEdgeCount => one(preliminary::line_edge_count(self)),
            BoundId::IncidenceIdentities => one(preliminary::incidence_identities(self)),
            BoundId::Lemma1Identity => one(preliminary::lemma1(self)),
            BoundId::GregoryUpper => one(preliminary::gregory(self)),
            BoundId::LineSpreadUpper => one(preliminary::line_spread(self)),
            BoundId::TwoLambdaUpper => one(preliminary::two_lambda(self)),
            BoundId::CharactTrichotomy => one(line::trichotomy(self)),
            BoundId::SpreadVsLineSpread => one(line::spread_vs_line(self)),
            BoundId::UnicyclicTheorem => one(line::unicyclic(self)),
            BoundId::GroneTreeDiameter | BoundId::GroneTreeSixVertices => one(line::grone(self, id)),
            BoundId::EdgeInterlacing => total::edge_interlacing_all(self),
            BoundId::EdgeAdditionMonotonicity => {
                self.graph.non_edges().into_iter().map(|(u, v)| line::edge_addition(self, u, v)).collect()
            }
            BoundId::ConnectivityVertex | BoundId::ConnectivityEdge | BoundId::ConnectivityMinDegree => {
                let class = ConnectivityClass::of(id).expect("connectivity id");
                (1..=self.n().saturating_sub(3)).map(|k| line::connectivity(self, class, k)).collect()
            }
            BoundId::TotalDegreeFormula => one(total::degree_formula(self)),
            BoundId::QuotientInterlacing => one(total::quotient_interlacing(self)),
            BoundId::TotalQSpreadLower => one(total::q_spread_lower(self)),
            BoundId::TotalSpreadLower => one(total::spread_lower(self)),
            BoundId::TotalLaplacianSpreadLower => one(total::laplacian_spread_lower(self)),
            BoundId::RegularTotalSpectrum => one(total::regular_spectrum_report(self)),
            BoundId::RegularTotalMinEig => one(total::regular_min_eig_report(self)),
            BoundId::RegularTotalSpread => one(total::regular_spread(self)),
        }
    }
}
