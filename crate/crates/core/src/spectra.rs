//! Graph matrices with their sorted spectra and spread invariants.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{sym_eigenvalues, IntMatrix};
use crate::transforms::line_graph;
use crate::EIGEN_TOL;
use serde::Serialize;

/// Eigenvalues sorted nonincreasing.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    pub fn from_unsorted(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max(&self) -> Option<f64> {
        self.values.first().copied()
    }

    pub fn min(&self) -> Option<f64> {
        self.values.last().copied()
    }

    /// Largest minus smallest eigenvalue; zero for an empty spectrum.
    pub fn spread(&self) -> f64 {
        match (self.max(), self.min()) {
            (Some(a), Some(b)) => a - b,
            _ => 0.0,
        }
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.values.iter().map(|x| x * x).sum()
    }

    /// Number of eigenvalues within `tol` of `value`.
    pub fn multiplicity(&self, value: f64, tol: f64) -> usize {
        self.values.iter().filter(|x| (*x - value).abs() <= tol).count()
    }

    /// Groups consecutive eigenvalues closer than `tol` into `(mean, multiplicity)` pairs.
    pub fn grouped(&self, tol: f64) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, f64, usize)> = Vec::new();
        for &x in &self.values {
            match out.last_mut() {
                Some((last, sum, count)) if (*last - x).abs() <= tol => {
                    *last = x;
                    *sum += x;
                    *count += 1;
                }
                _ => out.push((x, x, 1)),
            }
        }
        out.into_iter().map(|(_, sum, count)| (sum / count as f64, count)).collect()
    }

    /// Elementwise comparison of two sorted spectra of equal length.
    pub fn matches(&self, other: &Spectrum, tol: f64) -> bool {
        self.len() == other.len() && self.max_deviation(other) <= tol
    }

    pub fn max_deviation(&self, other: &Spectrum) -> f64 {
        self.values.iter().zip(&other.values).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }
}

pub fn adjacency_matrix(g: &Graph) -> IntMatrix {
    IntMatrix::from_fn(g.order(), g.order(), |i, j| g.has_edge(i, j) as i64)
}

pub fn laplacian_matrix(g: &Graph) -> IntMatrix {
    let deg = g.degrees();
    IntMatrix::from_fn(g.order(), g.order(), |i, j| if i == j { deg[i] as i64 } else { -(g.has_edge(i, j) as i64) })
}

pub fn signless_laplacian_matrix(g: &Graph) -> IntMatrix {
    let deg = g.degrees();
    IntMatrix::from_fn(g.order(), g.order(), |i, j| if i == j { deg[i] as i64 } else { g.has_edge(i, j) as i64 })
}

/// Spectrum of a symmetric integer matrix.
pub fn int_spectrum(m: &IntMatrix) -> Result<Spectrum> {
    sym_eigenvalues(&m.to_sym()?)
}

pub fn adjacency_spectrum(g: &Graph) -> Result<Spectrum> {
    int_spectrum(&adjacency_matrix(g))
}

pub fn laplacian_spectrum(g: &Graph) -> Result<Spectrum> {
    int_spectrum(&laplacian_matrix(g))
}

pub fn signless_spectrum(g: &Graph) -> Result<Spectrum> {
    int_spectrum(&signless_laplacian_matrix(g))
}

/// Spectra of A, L and Q together with the derived spreads.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralSummary {
    pub adjacency: Spectrum,
    pub laplacian: Spectrum,
    pub signless: Spectrum,
    /// `λ₁ − λ_n` of the adjacency matrix.
    pub spread: f64,
    /// `μ₁ − μ_{n−1}`; absent for fewer than two vertices.
    pub laplacian_spread: Option<f64>,
    /// `q₁ − q_n`.
    pub q_spread: f64,
    /// Adjacency spread of the line graph; absent for edgeless graphs.
    pub line_spread: Option<f64>,
    /// `μ_{n−1}`; absent for fewer than two vertices.
    pub algebraic_connectivity: Option<f64>,
}

pub fn spectral_summary(g: &Graph) -> Result<SpectralSummary> {
    let adjacency = adjacency_spectrum(g)?;
    let laplacian = laplacian_spectrum(g)?;
    let signless = signless_spectrum(g)?;
    let line_spread = if g.size() == 0 { None } else { Some(adjacency_spectrum(&line_graph(g).0)?.spread()) };
    Ok(summary_from_parts(adjacency, laplacian, signless, line_spread))
}

pub(crate) fn summary_from_parts(
    adjacency: Spectrum,
    laplacian: Spectrum,
    signless: Spectrum,
    line_spread: Option<f64>,
) -> SpectralSummary {
    let n = laplacian.len();
    let algebraic_connectivity = (n >= 2).then(|| laplacian.values()[n - 2]);
    SpectralSummary {
        spread: adjacency.spread(),
        laplacian_spread: algebraic_connectivity.map(|a| laplacian.values()[0] - a),
        q_spread: signless.spread(),
        line_spread,
        algebraic_connectivity,
        adjacency,
        laplacian,
        signless,
    }
}

/// Outcome of comparing `Q(G)` with the shifted line-graph spectrum.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Lemma1Report {
    pub holds: bool,
    /// Largest deviation found across all three conditions.
    pub max_deviation: f64,
    pub n: usize,
    pub m: usize,
}

/// Checks `q_i = λ_i(L(G)) + 2` for `i ≤ min(n, m)`, that the surplus line
/// eigenvalues equal −2 when `m > n`, and that the surplus `q_i` vanish when `n > m`.
pub fn lemma1_check(g: &Graph) -> Result<Lemma1Report> {
    if g.size() == 0 {
        return Err(Error::Hypothesis("graph has no edges".into()));
    }
    let q = signless_spectrum(g)?;
    let line = adjacency_spectrum(&line_graph(g).0)?;
    Ok(lemma1_compare(&q, &line))
}

pub(crate) fn lemma1_compare(q: &Spectrum, line: &Spectrum) -> Lemma1Report {
    let (n, m) = (q.len(), line.len());
    let k = n.min(m);
    let mut dev = 0.0f64;
    for i in 0..k {
        dev = dev.max((q.values()[i] - line.values()[i] - 2.0).abs());
    }
    for &x in &line.values()[k..] {
        dev = dev.max((x + 2.0).abs());
    }
    for &x in &q.values()[k..] {
        dev = dev.max(x.abs());
    }
    Lemma1Report { holds: dev <= EIGEN_TOL, max_deviation: dev, n, m }
}
