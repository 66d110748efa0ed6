//! Quotient matrices of partitioned symmetric matrices and interlacing checks.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{sym_eigenvalues, SymMatrix};
use crate::spectra::{signless_spectrum, Spectrum};
use crate::EIGEN_TOL;
use serde::Serialize;

/// Disjoint nonempty index blocks covering `0..order`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    order: usize,
}

impl Partition {
    pub fn new(order: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; order];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Input(format!("partition block {b} is empty")));
            }
            for &i in block {
                if i >= order {
                    return Err(Error::Input(format!("index {i} outside 0..{order}")));
                }
                if std::mem::replace(&mut seen[i], true) {
                    return Err(Error::Input(format!("index {i} appears twice")));
                }
            }
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::Input(format!("index {missing} is not covered")));
        }
        Ok(Partition { blocks, order })
    }

    pub fn trivial(order: usize) -> Result<Self> {
        Self::new(order, vec![(0..order).collect()])
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

/// The `k × k` matrix of average block row sums.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuotientMatrix {
    entries: Vec<Vec<f64>>,
    block_sums: Vec<Vec<f64>>,
    sizes: Vec<usize>,
    pub source_order: usize,
    /// Every block has constant row sums.
    pub equitable: bool,
}

impl QuotientMatrix {
    pub fn entries(&self) -> &[Vec<f64>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i][j]
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    /// The quotient is similar to the symmetric matrix with entries
    /// `s_ij / sqrt(n_i n_j)`, which is what gets diagonalized.
    pub fn eigenvalues(&self) -> Result<Spectrum> {
        let k = self.order();
        let mut data = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                let (a, b) = if i <= j { (i, j) } else { (j, i) };
                data.push(self.block_sums[a][b] / ((self.sizes[a] * self.sizes[b]) as f64).sqrt());
            }
        }
        sym_eigenvalues(&SymMatrix::from_vec(k, data)?)
    }
}

pub fn quotient_matrix(m: &SymMatrix, p: &Partition) -> Result<QuotientMatrix> {
    if m.order() != p.order() {
        return Err(Error::Input(format!("partition covers {} indices, matrix has order {}", p.order(), m.order())));
    }
    let integral = m.data().iter().all(|x| x.fract() == 0.0);
    let tol = if integral { 0.0 } else { 1e-9 };
    let k = p.blocks().len();
    let mut entries = vec![vec![0.0; k]; k];
    let mut block_sums = vec![vec![0.0; k]; k];
    let mut equitable = true;
    for (i, rows) in p.blocks().iter().enumerate() {
        for (j, cols) in p.blocks().iter().enumerate() {
            let row_sums: Vec<f64> = rows.iter().map(|&r| cols.iter().map(|&c| m.get(r, c)).sum()).collect();
            let total: f64 = row_sums.iter().sum();
            equitable &= row_sums.iter().all(|s| (s - row_sums[0]).abs() <= tol);
            block_sums[i][j] = total;
            entries[i][j] = total / rows.len() as f64;
        }
    }
    Ok(QuotientMatrix { entries, block_sums, sizes: p.sizes(), source_order: m.order(), equitable })
}

/// Checks `full[i] ≥ quotient[i] ≥ full[n − k + i]` for every `i`.
pub fn interlacing_check(quotient: &Spectrum, full: &Spectrum) -> bool {
    let (k, n) = (quotient.len(), full.len());
    if k > n {
        return false;
    }
    let (q, f) = (quotient.values(), full.values());
    (0..k).all(|i| f[i] + EIGEN_TOL >= q[i] && q[i] + EIGEN_TOL >= f[n - k + i])
}

/// Checks that deleting `uv` interlaces the signless Laplacian spectrum:
/// `0 ≤ s_n ≤ q_n ≤ s_{n−1} ≤ q_{n−1} ≤ … ≤ s_1 ≤ q_1`.
pub fn edge_interlacing_check(g: &Graph, u: usize, v: usize) -> Result<bool> {
    let h = g.without_edge(u, v)?;
    let q = signless_spectrum(g)?;
    let s = signless_spectrum(&h)?;
    let (q, s) = (q.values(), s.values());
    let n = q.len();
    let ok = s[n - 1] >= -EIGEN_TOL
        && (0..n).all(|i| s[i] <= q[i] + EIGEN_TOL)
        && (0..n - 1).all(|i| q[i + 1] <= s[i] + EIGEN_TOL);
    Ok(ok)
}

/// The `{vertices, edges}` split of the total graph of a graph with `n`
/// vertices and `m ≥ 1` edges.
pub fn vertex_edge_partition(n: usize, m: usize) -> Result<Partition> {
    Partition::new(n + m, vec![(0..n).collect(), (n..n + m).collect()])
}
