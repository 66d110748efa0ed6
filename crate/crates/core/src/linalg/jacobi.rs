//! Cyclic Jacobi eigenvalue iteration. Slower than the QL path but built from
//! plane rotations alone, which makes it a useful independent check.

use super::SymMatrix;
use crate::error::{Error, Result};
use crate::spectra::Spectrum;

const MAX_SWEEPS: usize = 100;

/// Relative off-diagonal norm at which the iteration stops. Rounding keeps
/// the norm near `1e-15` relative, so machine epsilon itself is not reachable.
const OFF_TOL: f64 = 1e-13;

pub fn jacobi_eigenvalues(m: &SymMatrix) -> Result<Spectrum> {
    let n = m.order();
    let mut a = m.data().to_vec();
    let at = |i: usize, j: usize| i * n + j;
    let total = m.frobenius_sq().max(f64::MIN_POSITIVE);

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[at(i, j)] * a[at(i, j)])
            .sum();
        if off <= OFF_TOL * OFF_TOL * total {
            let diag = (0..n).map(|i| a[at(i, i)]).collect();
            return Ok(Spectrum::from_unsorted(diag));
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[at(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[at(q, q)] - a[at(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;
                for k in 0..n {
                    let akp = a[at(k, p)];
                    let akq = a[at(k, q)];
                    a[at(k, p)] = c * akp - s * akq;
                    a[at(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[at(p, k)];
                    let aqk = a[at(q, k)];
                    a[at(p, k)] = c * apk - s * aqk;
                    a[at(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    let off_norm = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| a[at(i, j)] * a[at(i, j)])
        .sum::<f64>()
        .sqrt();
    Err(Error::NonConvergence { off_norm })
}
