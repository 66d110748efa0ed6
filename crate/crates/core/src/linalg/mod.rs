//! Dense matrices: exact integer matrices for graph operators and symmetric
//! real matrices for the eigensolvers.

mod eigen;
mod jacobi;

pub use eigen::{sym_eigenvalues, MAX_ORDER};
pub use jacobi::jacobi_eigenvalues;

use crate::error::{Error, Result};
use std::ops::{Add, Mul, Sub};

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| (i == j) as i64)
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.data[i * self.cols + j] = value;
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn row_sums(&self) -> Vec<i64> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<i64> {
        (0..self.cols).map(|j| (0..self.rows).map(|i| self.get(i, j)).sum()).collect()
    }

    /// Lifts to a symmetric real matrix. Fails unless square and symmetric.
    pub fn to_sym(&self) -> Result<SymMatrix> {
        if !self.is_symmetric() {
            return Err(Error::Input("integer matrix is not square and symmetric".into()));
        }
        Ok(SymMatrix { order: self.rows, data: self.data.iter().map(|&x| x as f64).collect() })
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;

    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch in sum");
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;

    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch in difference");
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

/// Dense symmetric real matrix. Symmetry is checked exactly on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::Input("matrix is not square".into()));
        }
        let data: Vec<f64> = rows.iter().flatten().copied().collect();
        Self::from_vec(order, data)
    }

    pub fn from_vec(order: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != order * order {
            return Err(Error::Input(format!("expected {} entries, got {}", order * order, data.len())));
        }
        if let Some(pos) = data.iter().position(|x| !x.is_finite()) {
            return Err(Error::Input(format!("non-finite entry at ({}, {})", pos / order, pos % order)));
        }
        for i in 0..order {
            for j in 0..i {
                if data[i * order + j] != data[j * order + i] {
                    return Err(Error::Input(format!("entries ({i}, {j}) and ({j}, {i}) differ")));
                }
            }
        }
        Ok(SymMatrix { order, data })
    }

    pub fn diagonal(values: &[f64]) -> Result<Self> {
        let n = values.len();
        let mut data = vec![0.0; n * n];
        for (i, &v) in values.iter().enumerate() {
            data[i * n + i] = v;
        }
        Self::from_vec(n, data)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    pub(crate) fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_sq(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum()
    }

    /// Maximum absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        self.data
            .chunks(self.order.max(1))
            .take(self.order)
            .map(|r| r.iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Row sums of the principal block `rows × cols`.
    pub fn block_sum(&self, rows: &[usize], cols: &[usize]) -> f64 {
        rows.iter().map(|&i| cols.iter().map(|&j| self.get(i, j)).sum::<f64>()).sum()
    }

    pub fn shifted(&self, shift: f64) -> SymMatrix {
        let mut out = self.clone();
        for i in 0..self.order {
            out.data[i * self.order + i] -= shift;
        }
        out
    }
}

impl Mul for &SymMatrix {
    type Output = SymMatrix;

    /// Product of two symmetric matrices; only valid when they commute, as for `M · M`.
    fn mul(self, rhs: &SymMatrix) -> SymMatrix {
        let n = self.order;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[i * n + j] = (0..n).map(|k| self.get(i, k) * rhs.get(k, j)).sum();
            }
        }
        // symmetrize exactly; rounding may differ between (i, j) and (j, i)
        for i in 0..n {
            for j in 0..i {
                let avg = 0.5 * (data[i * n + j] + data[j * n + i]);
                data[i * n + j] = avg;
                data[j * n + i] = avg;
            }
        }
        SymMatrix { order: n, data }
    }
}
