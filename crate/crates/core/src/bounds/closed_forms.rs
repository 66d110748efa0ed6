//! Closed-form line-graph spectrum of the clique-join family.

use crate::error::{Error, Result};
use crate::graph::Family;
use crate::spectra::Spectrum;

fn check(n: usize, k: usize, i: usize) -> Result<usize> {
    Family::JoinFamily { n, k, i }.validate()?;
    // the multiset describes L(K_k ∨ (K_i ∪ K_{n−k−i})), whose size is
    let c = n - k - i;
    Ok(k * (k - 1) / 2 + i * (i - 1) / 2 + c * (c - 1) / 2 + k * (i + c))
}

/// The multiset
/// `n + k/2 − 4 ± ½√((2n−k)² + 16i(k−n+i))`, `n − 4` (×k), `k + i − 4` (×(i−1)),
/// `n − i − 4` (×(n−k−i−1)) and `−2` (×(m−n)).
///
/// This is the adjacency spectrum of `L(K_k ∨ (K_i ∪ K_{n−k−i}))`, i.e. of
/// `Family::JoinFamily { n, k: i, i: k }`. The two readings agree when `k = i`.
pub fn join_family_line_spectrum(n: usize, k: usize, i: usize) -> Result<Spectrum> {
    let m = check(n, k, i)?;
    if m < n {
        return Err(Error::Parameter(format!("({n}, {k}, {i}) has fewer edges than vertices")));
    }
    let (nf, kf, i_f) = (n as f64, k as f64, i as f64);
    let centre = nf + kf / 2.0 - 4.0;
    let half = 0.5 * ((2.0 * nf - kf).powi(2) + 16.0 * i_f * (kf - nf + i_f)).sqrt();
    let mut values = vec![centre + half, centre - half];
    values.extend(std::iter::repeat(nf - 4.0).take(k));
    values.extend(std::iter::repeat(kf + i_f - 4.0).take(i - 1));
    values.extend(std::iter::repeat(nf - i_f - 4.0).take(n - k - i - 1));
    values.extend(std::iter::repeat(-2.0).take(m - n));
    Ok(Spectrum::from_unsorted(values))
}

/// `n − 2 + k/2 + ½√((2n−k)² + 16i(k−n+i))`: the larger root plus two, which
/// equals the spread of [`join_family_line_spectrum`] whenever `−2` is its
/// smallest eigenvalue, i.e. whenever `m > n`.
pub fn join_family_line_spread(n: usize, k: usize, i: usize) -> Result<f64> {
    let m = check(n, k, i)?;
    if m <= n {
        return Err(Error::Hypothesis(format!("({n}, {k}, {i}) has m = {m} ≤ n, so −2 is not an eigenvalue")));
    }
    let (n, k, i) = (n as f64, k as f64, i as f64);
    Ok(n - 2.0 + k / 2.0 + 0.5 * ((2.0 * n - k).powi(2) + 16.0 * i * (k - n + i)).sqrt())
}
