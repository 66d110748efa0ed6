//! Structural identities and the two elementary spread bounds.

use super::{radical, Analysis, BoundId, BoundReport, Relation};
use crate::error::Result;
use crate::graph::{complete_bipartite_parts, Graph};
use crate::linalg::IntMatrix;
use crate::spectra::{adjacency_matrix, lemma1_compare, signless_laplacian_matrix};
use crate::transforms::incidence_matrix;
use crate::SLACK_TOL;

pub(super) fn line_edge_count(a: &Analysis) -> Result<BoundReport> {
    let theta = a.degrees().zagreb as f64 / 2.0 - a.m() as f64;
    Ok(BoundReport::new(BoundId::LineEdgeCount, Relation::Equality, theta, a.line().0.size() as f64))
}

pub(super) fn incidence_identities(a: &Analysis) -> Result<BoundReport> {
    let r = incidence_matrix(a.graph());
    let m = a.m();
    let twice_identity = IntMatrix::from_fn(m, m, |i, j| 2 * (i == j) as i64);
    let vertex_side = r.gram_vertices() == signless_laplacian_matrix(a.graph());
    let edge_side = r.gram_edges() == &twice_identity + &adjacency_matrix(&a.line().0);
    let columns = r.matrix().col_sums().iter().all(|&s| s == 2);
    let rows = r.matrix().row_sums().iter().zip(&a.degrees().degrees).all(|(&s, &d)| s == d as i64);
    Ok(BoundReport::new(BoundId::IncidenceIdentities, Relation::Equality, 0.0, 0.0)
        .side(vertex_side, "R Rᵗ differs from Q")
        .side(edge_side, "Rᵗ R differs from 2I + A(L(G))")
        .side(columns && rows, "incidence row or column sums are wrong"))
}

pub(super) fn lemma1(a: &Analysis) -> Result<BoundReport> {
    if a.m() == 0 {
        return Ok(BoundReport::gated(BoundId::Lemma1Identity, Relation::Equality, "no edges"));
    }
    let check = lemma1_compare(a.signless()?, a.line_spectrum()?);
    Ok(BoundReport::new(BoundId::Lemma1Identity, Relation::Equality, 0.0, check.max_deviation)
        .side(check.holds, format!("max deviation {:e} exceeds 1e-7", check.max_deviation)))
}

pub(super) fn gregory(a: &Analysis) -> Result<BoundReport> {
    let spec = a.adjacency()?;
    let m = a.m() as f64;
    let l1 = spec.max().unwrap_or(0.0);
    let id = BoundId::GregoryUpper;
    let Some(root) = radical(2.0 * m - l1 * l1) else {
        return Ok(BoundReport::gated(id, Relation::Upper, "2m − λ₁² is negative"));
    };
    let bound = l1 + root;
    let outer = 2.0 * m.sqrt();
    let predicted = a.m() == 0 || complete_bipartite_parts(a.graph()).is_some();
    Ok(BoundReport::new(id, Relation::Upper, bound, spec.spread())
        .predict(predicted)
        .side(bound <= outer + SLACK_TOL, format!("λ₁ + √(2m − λ₁²) = {bound} exceeds 2√m = {outer}")))
}

pub(super) fn line_spread(a: &Analysis) -> Result<BoundReport> {
    let id = BoundId::LineSpreadUpper;
    if a.m() == 0 {
        return Ok(BoundReport::gated(id, Relation::Upper, "no edges"));
    }
    let q1 = a.signless()?.max().unwrap_or(0.0);
    let (z, m) = (a.zagreb(), a.m() as f64);
    let Some(root) = radical(z - 2.0 * m - (q1 - 2.0).powi(2)) else {
        return Ok(BoundReport::gated(id, Relation::Upper, "Z_g − 2m − (q₁ − 2)² is negative"));
    };
    let bound = q1 - 2.0 + root;
    let outer = 2.0 * (z / 2.0 - m).max(0.0).sqrt();
    let actual = a.line_spectrum()?.spread();
    Ok(BoundReport::new(id, Relation::Upper, bound, actual)
        .side(bound <= outer + SLACK_TOL, format!("bound {bound} exceeds 2√θ = {outer}")))
}

pub(super) fn two_lambda(a: &Analysis) -> Result<BoundReport> {
    let id = BoundId::TwoLambdaUpper;
    if !a.is_connected() {
        return Ok(BoundReport::gated(id, Relation::Upper, "graph is disconnected"));
    }
    let l1 = a.adjacency()?.max().unwrap_or(0.0);
    let q1 = a.signless()?.max().unwrap_or(0.0);
    Ok(BoundReport::new(id, Relation::Upper, q1, 2.0 * l1).predict(a.graph().regular_degree().is_some()))
}

/// `S(G) ≤ λ₁ + √(2m − λ₁²) ≤ 2√m`, with equality exactly for complete
/// bipartite graphs (plus isolated vertices) and edgeless graphs.
pub fn gregory_upper(g: &Graph) -> Result<BoundReport> {
    gregory(&Analysis::new(g))
}

/// `S_L(G) ≤ q₁ − 2 + √(Z_g − 2m − (q₁ − 2)²) ≤ 2√(Z_g/2 − m)`.
pub fn line_spread_upper(g: &Graph) -> Result<BoundReport> {
    line_spread(&Analysis::new(g))
}

/// `2λ₁ ≤ q₁` on connected graphs, with equality iff regular.
pub fn two_lambda_upper(g: &Graph) -> Result<BoundReport> {
    two_lambda(&Analysis::new(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn build(f: Family) -> Graph {
        f.build().unwrap()
    }

    #[test]
    fn gregory_examples() {
        let r = gregory_upper(&build(Family::CompleteBipartite(2, 3))).unwrap();
        assert!(r.tight && r.equality_predicted == Some(true) && r.holds());
        assert!((r.actual_value - 2.0 * 6f64.sqrt()).abs() < 1e-9);
        let r = gregory_upper(&build(Family::Complete(4))).unwrap();
        assert!((r.bound_value - (3.0 + 3f64.sqrt())).abs() < 1e-9 && !r.tight && r.holds());
        let r = gregory_upper(&build(Family::Complete(2))).unwrap();
        assert!(r.tight && (r.actual_value - 2.0).abs() < 1e-12);
        let r = gregory_upper(&Graph::empty(3)).unwrap();
        assert!(r.tight && r.holds());
    }

    #[test]
    fn line_spread_examples() {
        let r = line_spread_upper(&build(Family::Cycle(4))).unwrap();
        assert!(r.tight && (r.bound_value - 4.0).abs() < 1e-9);
        let r = line_spread_upper(&build(Family::Complete(4))).unwrap();
        assert!((r.bound_value - (4.0 + 8f64.sqrt())).abs() < 1e-9);
        assert!((r.actual_value - 6.0).abs() < 1e-9 && r.holds());
        let r = line_spread_upper(&build(Family::Complete(2))).unwrap();
        assert!(r.tight && r.bound_value.abs() < 1e-9);
        assert!(!line_spread_upper(&Graph::empty(2)).unwrap().hypothesis_met);
    }

    #[test]
    fn two_lambda_examples() {
        let r = two_lambda_upper(&crate::graph::petersen()).unwrap();
        assert!(r.tight && r.holds());
        let r = two_lambda_upper(&build(Family::Path(4))).unwrap();
        assert!(!r.tight && r.holds());
    }
}
