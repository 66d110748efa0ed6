//! Eigenvalues of a dense symmetric matrix: Householder reduction to
//! tridiagonal form followed by the implicit QL iteration with Wilkinson shifts.

use super::SymMatrix;
use crate::error::{Error, Result};
use crate::spectra::Spectrum;

/// Largest supported matrix order.
pub const MAX_ORDER: usize = 4096;

const MAX_SWEEPS_PER_EIGENVALUE: usize = 60;

/// All eigenvalues of `m`, sorted nonincreasing.
pub fn sym_eigenvalues(m: &SymMatrix) -> Result<Spectrum> {
    let n = m.order();
    if n > MAX_ORDER {
        return Err(Error::Capacity(format!("matrix order {n} exceeds {MAX_ORDER}")));
    }
    let mut a = m.data().to_vec();
    let mut diag = vec![0.0; n];
    let mut off = vec![0.0; n];
    tridiagonalize(&mut a, n, &mut diag, &mut off);
    implicit_ql(&mut diag, &mut off)?;
    Ok(Spectrum::from_unsorted(diag))
}

/// Reduces the lower triangle of `a` in place; on return `diag` holds the
/// diagonal and `off[i]` the subdiagonal entry `(i, i - 1)`.
fn tridiagonalize(a: &mut [f64], n: usize, diag: &mut [f64], off: &mut [f64]) {
    let at = |i: usize, j: usize| i * n + j;
    for i in (1..n).rev() {
        let l = i - 1;
        if l == 0 {
            off[i] = a[at(i, l)];
            continue;
        }
        let scale: f64 = (0..=l).map(|k| a[at(i, k)].abs()).sum();
        if scale == 0.0 {
            off[i] = a[at(i, l)];
            continue;
        }
        let mut h = 0.0;
        for k in 0..=l {
            a[at(i, k)] /= scale;
            h += a[at(i, k)] * a[at(i, k)];
        }
        let f = a[at(i, l)];
        let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
        off[i] = scale * g;
        h -= f * g;
        a[at(i, l)] = f - g;

        // p = A u / h, stored in off[0..=l]
        let mut f_acc = 0.0;
        for j in 0..=l {
            let mut g = 0.0;
            for k in 0..=j {
                g += a[at(j, k)] * a[at(i, k)];
            }
            for k in j + 1..=l {
                g += a[at(k, j)] * a[at(i, k)];
            }
            off[j] = g / h;
            f_acc += off[j] * a[at(i, j)];
        }
        let hh = f_acc / (h + h);
        for j in 0..=l {
            let f = a[at(i, j)];
            let g = off[j] - hh * f;
            off[j] = g;
            for k in 0..=j {
                a[at(j, k)] -= f * off[k] + g * a[at(i, k)];
            }
        }
    }
    for i in 0..n {
        diag[i] = a[at(i, i)];
    }
    if n > 0 {
        off[0] = 0.0;
    }
}

fn implicit_ql(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    if n == 0 {
        return Ok(());
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_SWEEPS_PER_EIGENVALUE {
                let off_norm = e.iter().map(|x| x * x).sum::<f64>().sqrt();
                return Err(Error::NonConvergence { off_norm });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}
