//! Total-graph statements: degree formulas, quotient interlacing, the three
//! spread lower bounds, and the closed-form spectrum for regular graphs.

use super::{radical, Analysis, BoundId, BoundReport, Relation};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::quotient::{interlacing_check, quotient_matrix, vertex_edge_partition};
use crate::spectra::{adjacency_matrix, laplacian_matrix, signless_laplacian_matrix, signless_spectrum, Spectrum};
use crate::{EIGEN_TOL, SLACK_TOL};

pub(super) fn degree_formula(a: &Analysis) -> Result<BoundReport> {
    let g = a.graph();
    let t = a.total();
    let n = a.n();
    let (line, _) = a.line();
    let vertex_ok = (0..n).all(|u| t.degree(u) == 2 * g.degree(u));
    let edge_ok = (0..a.m()).all(|e| t.degree(n + e) == line.degree(e) + 2);
    let td = t.degrees();
    let gd = &a.degrees().degrees;
    let extremes_ok = n == 0
        || (td.iter().min() == gd.iter().min().map(|d| 2 * d).as_ref()
            && td.iter().max() == gd.iter().max().map(|d| 2 * d).as_ref());
    Ok(BoundReport::new(BoundId::TotalDegreeFormula, Relation::Equality, 0.0, 0.0)
        .side(vertex_ok, "a vertex-type degree differs from 2·d(u)")
        .side(edge_ok, "an edge-type degree differs from d_L(e) + 2")
        .side(extremes_ok, "δ or Δ of the total graph is not doubled"))
}

pub(super) fn quotient_interlacing(a: &Analysis) -> Result<BoundReport> {
    let id = BoundId::QuotientInterlacing;
    let (n, m) = (a.n(), a.m());
    if !a.is_connected() || m == 0 {
        return Ok(BoundReport::gated(id, Relation::Equality, "needs a connected graph with an edge"));
    }
    let part = vertex_edge_partition(n, m)?;
    let t = a.total();
    let (nf, mf, z) = (n as f64, m as f64, a.zagreb());
    let theta = z / 2.0 - mf;
    let displayed: [(&str, _, _, [[f64; 2]; 2]); 3] = [
        ("A", adjacency_matrix(t), a.total_adjacency()?, [[2.0 * mf / nf, 2.0 * mf / nf], [2.0, (z - 2.0 * mf) / mf]]),
        ("L", laplacian_matrix(t), a.total_laplacian()?, [[2.0 * mf / nf, -2.0 * mf / nf], [-2.0, 2.0]]),
        (
            "Q",
            signless_laplacian_matrix(t),
            a.total_signless()?,
            [[6.0 * mf / nf, 2.0 * mf / nf], [2.0, 2.0 + 4.0 * theta / mf]],
        ),
    ];
    let mut report = BoundReport::new(id, Relation::Equality, 0.0, 0.0);
    for (name, matrix, full, expected) in displayed {
        let q = quotient_matrix(&matrix.to_sym()?, &part)?;
        let entries_ok = (0..2).all(|i| (0..2).all(|j| (q.get(i, j) - expected[i][j]).abs() <= 1e-9));
        report = report
            .side(entries_ok, format!("{name}: quotient entries differ from the closed form"))
            .side(interlacing_check(&q.eigenvalues()?, full), format!("{name}: quotient does not interlace"));
    }
    Ok(report)
}

fn total_gate(a: &Analysis, id: BoundId) -> Option<BoundReport> {
    (!a.is_connected() || a.m() == 0)
        .then(|| BoundReport::gated(id, Relation::Lower, "needs a connected graph with an edge"))
}

pub(super) fn q_spread_lower(a: &Analysis) -> Result<BoundReport> {
    let id = BoundId::TotalQSpreadLower;
    if let Some(r) = total_gate(a, id) {
        return Ok(r);
    }
    let (n, m, z) = (a.n() as f64, a.m() as f64, a.zagreb());
    let radicand = (3.0 * m / n - z / m).powi(2) + 10.0 * m / n - 2.0 * z / m + 1.0;
    let Some(root) = radical(radicand) else {
        return Ok(BoundReport::gated(id, Relation::Lower, format!("radicand {radicand} is negative")));
    };
    Ok(BoundReport::new(id, Relation::Lower, 2.0 * root, a.total_signless()?.spread()))
}

pub(super) fn spread_lower(a: &Analysis) -> Result<BoundReport> {
    let id = BoundId::TotalSpreadLower;
    if let Some(r) = total_gate(a, id) {
        return Ok(r);
    }
    let (n, m, z) = (a.n() as f64, a.m() as f64, a.zagreb());
    let psi = (2.0 * m * m + n * (z - 2.0 * m)) / (m * n);
    let radicand = psi * psi - 8.0 * (z - 4.0 * m) / n;
    let Some(root) = radical(radicand) else {
        return Ok(BoundReport::gated(id, Relation::Lower, format!("radicand {radicand} is negative")));
    };
    Ok(BoundReport::new(id, Relation::Lower, root, a.total_adjacency()?.spread()))
}

pub(super) fn laplacian_spread_lower(a: &Analysis) -> Result<BoundReport> {
    let id = BoundId::TotalLaplacianSpreadLower;
    if let Some(r) = total_gate(a, id) {
        return Ok(r);
    }
    if a.total().is_complete() {
        return Ok(BoundReport::gated(id, Relation::Lower, "total graph is complete"));
    }
    let (n, m) = (a.n() as f64, a.m() as f64);
    let delta = a.degrees().min_degree as f64;
    let bound = ((2.0 * m + 2.0 * n) / n - 2.0 * delta).abs();
    let mu = a.total_laplacian()?.values();
    Ok(BoundReport::new(id, Relation::Lower, bound, mu[0] - mu[mu.len() - 2]))
}

/// `S_Q(T(G)) ≥ 2√((3m/n − Z_g/m)² + 10m/n − 2Z_g/m + 1)` for connected `G`.
pub fn total_q_spread_lower(g: &Graph) -> Result<BoundReport> {
    q_spread_lower(&Analysis::new(g))
}

/// `S(T(G)) ≥ √(ψ² − 8(Z_g − 4m)/n)` with `ψ = (2m² + n(Z_g − 2m))/(mn)`.
pub fn total_spread_lower(g: &Graph) -> Result<BoundReport> {
    spread_lower(&Analysis::new(g))
}

/// `S_L(T(G)) ≥ |(2m + 2n)/n − 2δ|` when `T(G)` is not complete.
pub fn total_laplacian_spread_lower(g: &Graph) -> Result<BoundReport> {
    laplacian_spread_lower(&Analysis::new(g))
}

fn regular_degree_of(g: &Graph) -> Result<usize> {
    match g.regular_degree() {
        Some(r) if r >= 2 && g.is_connected() => Ok(r),
        _ => Err(Error::Hypothesis("needs a connected r-regular graph with r ≥ 2".into())),
    }
}

fn branch(lambda: f64, r: f64, sign: f64) -> f64 {
    let root = (4.0 * lambda + r * r + 4.0).max(0.0).sqrt();
    (2.0 * lambda + r - 2.0 + sign * root) / 2.0
}

fn regular_spectrum_from(adjacency: &Spectrum, r: usize) -> Spectrum {
    let n = adjacency.len();
    let rf = r as f64;
    let mut values: Vec<f64> =
        adjacency.values().iter().flat_map(|&l| [branch(l, rf, 1.0), branch(l, rf, -1.0)]).collect();
    values.extend(std::iter::repeat(-2.0).take(n * (r - 2) / 2));
    Spectrum::from_unsorted(values)
}

/// Adjacency spectrum of the total graph of a connected `r`-regular graph:
/// `(2λ + r − 2 ± √(4λ + r² + 4))/2` for every eigenvalue `λ` of `G`,
/// plus `−2` with multiplicity `n(r − 2)/2`.
pub fn regular_total_spectrum(g: &Graph) -> Result<Spectrum> {
    let r = regular_degree_of(g)?;
    Ok(regular_spectrum_from(&Analysis::new(g).adjacency()?.clone(), r))
}

/// `(2λ_n + r − 2 − √(4λ_n + r² + 4))/2`, the smallest eigenvalue of the total
/// graph. Evaluable for `r = 2`, although the statement assumes `r ≥ 3`.
pub fn regular_total_min_eig(g: &Graph) -> Result<f64> {
    let r = regular_degree_of(g)?;
    let ln = Analysis::new(g).adjacency()?.min().unwrap_or(0.0);
    Ok(branch(ln, r as f64, -1.0))
}

fn regular_gate(a: &Analysis, id: BoundId, min_r: usize) -> std::result::Result<usize, BoundReport> {
    match regular_degree_of(a.graph()) {
        Ok(r) if r >= min_r => Ok(r),
        _ => Err(BoundReport::gated(id, Relation::Equality, format!("needs connected r-regular, r ≥ {min_r}"))),
    }
}

pub(super) fn regular_spectrum_report(a: &Analysis) -> Result<BoundReport> {
    let id = BoundId::RegularTotalSpectrum;
    let r = match regular_gate(a, id, 2) {
        Ok(r) => r,
        Err(gated) => return Ok(gated),
    };
    let closed = regular_spectrum_from(a.adjacency()?, r);
    let full = a.total_adjacency()?;
    let dev = if closed.len() == full.len() { closed.max_deviation(full) } else { f64::INFINITY };
    Ok(BoundReport::new(id, Relation::Equality, 0.0, dev)
        .side(dev <= EIGEN_TOL, format!("closed form deviates by {dev:e}")))
}

pub(super) fn regular_min_eig_report(a: &Analysis) -> Result<BoundReport> {
    let id = BoundId::RegularTotalMinEig;
    let r = match regular_gate(a, id, 3) {
        Ok(r) => r,
        Err(gated) => return Ok(gated),
    };
    let ln = a.adjacency()?.min().unwrap_or(0.0);
    let formula = branch(ln, r as f64, -1.0);
    let closed_min = regular_spectrum_from(a.adjacency()?, r).min().unwrap_or(0.0);
    let actual = a.total_adjacency()?.min().unwrap_or(0.0);
    Ok(BoundReport::new(id, Relation::Equality, formula, actual)
        .side((formula - closed_min).abs() <= EIGEN_TOL, "formula is not the closed-form minimum")
        .side(formula <= -2.0 + SLACK_TOL, format!("formula {formula} exceeds −2")))
}

pub(super) fn regular_spread(a: &Analysis) -> Result<BoundReport> {
    let id = BoundId::RegularTotalSpread;
    let r = match regular_gate(a, id, 2) {
        Ok(r) => r,
        Err(gated) => return Ok(gated),
    };
    let adj = a.adjacency()?;
    let (s, ln, rf) = (adj.spread(), adj.min().unwrap_or(0.0), r as f64);
    let root = (4.0 * ln + rf * rf + 4.0).max(0.0).sqrt();
    let exact = (2.0 * s + rf + 2.0 + root) / 2.0;
    let lower = (2.0 * s + ln + 2.0 + root) / 2.0;
    let upper = s + root - ln;
    let actual = a.total_adjacency()?.spread();
    Ok(BoundReport::new(id, Relation::Equality, exact, actual)
        .note(format!("lower={lower:.10} upper={upper:.10}"))
        .side(lower <= actual + SLACK_TOL && actual <= upper + SLACK_TOL, "two-sided bound does not bracket S(T(G))"))
}

/// Exact spread of the total graph of a connected regular graph, checked
/// against the eigensolve and the two-sided bound.
pub fn regular_total_spread(g: &Graph) -> Result<BoundReport> {
    regular_spread(&Analysis::new(g))
}

pub(super) fn edge_interlacing_all(a: &Analysis) -> Result<Vec<BoundReport>> {
    let q = a.signless()?.values();
    let n = q.len();
    a.graph()
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let s = signless_spectrum(&a.graph().without_edge(u, v)?)?;
            let s = s.values();
            let ok = s[n - 1] >= -EIGEN_TOL
                && (0..n).all(|i| s[i] <= q[i] + EIGEN_TOL)
                && (0..n - 1).all(|i| q[i + 1] <= s[i] + EIGEN_TOL);
            Ok(BoundReport::new(BoundId::EdgeInterlacing, Relation::Equality, 0.0, 0.0)
                .with_param(format!("edge {u}-{v}"))
                .side(ok, "signless spectra do not interlace"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{petersen, Family};

    fn build(f: Family) -> Graph {
        f.build().unwrap()
    }

    #[test]
    fn lower_bound_examples() {
        let c4 = build(Family::Cycle(4));
        let r = total_q_spread_lower(&c4).unwrap();
        assert!((r.bound_value - 4.0).abs() < 1e-12 && (r.actual_value - 6.0).abs() < 1e-9);
        let k4 = build(Family::Complete(4));
        assert!((total_q_spread_lower(&k4).unwrap().bound_value - 5.0).abs() < 1e-12);
        let k2 = build(Family::Complete(2));
        let r = total_q_spread_lower(&k2).unwrap();
        assert!(r.tight && (r.bound_value - 3.0).abs() < 1e-12);

        assert!((total_spread_lower(&c4).unwrap().bound_value - 4.0).abs() < 1e-12);
        let c3 = total_spread_lower(&build(Family::Cycle(3))).unwrap();
        assert!((c3.bound_value - 4.0).abs() < 1e-12 && (c3.actual_value - 6.0).abs() < 1e-9);
        assert!((total_spread_lower(&k4).unwrap().bound_value - 5.0).abs() < 1e-12);

        assert!(total_laplacian_spread_lower(&c4).unwrap().bound_value.abs() < 1e-12);
        assert!((total_laplacian_spread_lower(&k4).unwrap().bound_value - 1.0).abs() < 1e-12);
        let star = build(Family::CompleteBipartite(1, 3));
        let r = total_laplacian_spread_lower(&star).unwrap();
        assert!((r.bound_value - 1.5).abs() < 1e-12 && r.holds());
        assert!(!total_laplacian_spread_lower(&k2).unwrap().hypothesis_met);
    }

    #[test]
    fn regular_closed_forms() {
        let c3 = regular_total_spectrum(&build(Family::Cycle(3))).unwrap();
        let expect = [4.0, 0.0, 0.0, 0.0, -2.0, -2.0];
        assert!(c3.values().iter().zip(expect).all(|(x, y)| (x - y).abs() < 1e-12));
        let k4 = build(Family::Complete(4));
        assert_eq!(regular_total_spectrum(&k4).unwrap().multiplicity(-2.0, 1e-9), 2 + 3);
        assert!((regular_total_min_eig(&k4).unwrap() + 2.0).abs() < 1e-12);
        let p = regular_total_min_eig(&petersen()).unwrap();
        assert!((p - (-3.0 - 5f64.sqrt()) / 2.0).abs() < 1e-9);
        let k33 = build(Family::CompleteBipartite(3, 3));
        assert!((regular_total_min_eig(&k33).unwrap() + 3.0).abs() < 1e-9);
        assert!(regular_total_spectrum(&build(Family::Path(3))).is_err());

        for (g, exact) in [(build(Family::Cycle(4)), 6.0), (build(Family::Cycle(3)), 6.0), (k4, 8.0)] {
            let r = regular_total_spread(&g).unwrap();
            assert!((r.bound_value - exact).abs() < 1e-9 && r.holds(), "{r:?}");
        }
    }

    #[test]
    fn reports_on_small_graphs() {
        for g in [build(Family::Cycle(4)), build(Family::Complete(4)), petersen()] {
            let a = Analysis::new(&g);
            for id in [
                BoundId::TotalDegreeFormula,
                BoundId::QuotientInterlacing,
                BoundId::RegularTotalSpectrum,
                BoundId::RegularTotalMinEig,
                BoundId::EdgeInterlacing,
            ] {
                for r in a.evaluate(id).unwrap() {
                    assert!(r.holds(), "{r:?}");
                }
            }
        }
    }
}
