//! Exhaustive generation of small labeled graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::{adjacency_spectrum, signless_spectrum};
use std::collections::HashSet;

/// Largest order accepted by the enumerators.
pub const MAX_ENUMERATION_ORDER: usize = 8;

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::Capacity(format!("enumeration supports 1 ≤ n ≤ {MAX_ENUMERATION_ORDER}, got {n}")));
    }
    Ok(())
}

/// Iterator over the labeled graphs on `n` vertices, one per subset of the
/// `n(n−1)/2` vertex pairs, in increasing bitmask order.
pub struct GraphStream {
    n: usize,
    next: u64,
    end: u64,
    connected_only: bool,
    seen: Option<HashSet<DedupKey>>,
}

/// Degree sequence plus both spectra rounded to 1e-6. Isomorphic graphs share
/// a key; distinct graphs sharing one are rare at these orders.
#[derive(Hash, PartialEq, Eq)]
struct DedupKey {
    degrees: Vec<usize>,
    adjacency: Vec<i64>,
    signless: Vec<i64>,
}

fn dedup_key(g: &Graph) -> Result<DedupKey> {
    let round = |v: &[f64]| v.iter().map(|x| (x * 1e6).round() as i64).collect();
    let mut degrees = g.degrees();
    degrees.sort_unstable();
    Ok(DedupKey {
        degrees,
        adjacency: round(adjacency_spectrum(g)?.values()),
        signless: round(signless_spectrum(g)?.values()),
    })
}

impl Iterator for GraphStream {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Result<Graph>> {
        while self.next < self.end {
            let g = Graph::from_pair_mask(self.n, self.next);
            self.next += 1;
            if self.connected_only && !g.is_connected() {
                continue;
            }
            if let Some(seen) = self.seen.as_mut() {
                match dedup_key(&g) {
                    Ok(key) => {
                        if !seen.insert(key) {
                            continue;
                        }
                    }
                    Err(e) => return Some(Err(e)),
                }
            }
            return Some(Ok(g));
        }
        None
    }
}

/// Every labeled simple graph on `n` vertices, optionally only the connected
/// ones, optionally with best-effort removal of isomorphic duplicates.
pub fn enumerate_graphs(n: usize, connected_only: bool, dedup: bool) -> Result<GraphStream> {
    check_order(n)?;
    let pairs = n * (n - 1) / 2;
    Ok(GraphStream { n, next: 0, end: 1u64 << pairs, connected_only, seen: dedup.then(HashSet::new) })
}

/// Every labeled `r`-regular graph on `n` vertices, by backtracking over
/// vertex pairs in lexicographic order.
pub fn regular_graphs(n: usize, r: usize, connected_only: bool) -> Result<Vec<Graph>> {
    check_order(n)?;
    let mut out = Vec::new();
    if r >= n || (n * r) % 2 == 1 {
        return Ok(out);
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut degree = vec![0usize; n];
    let mut chosen = Vec::with_capacity(n * r / 2);
    extend(&pairs, 0, r, &mut degree, &mut chosen, &mut |edges| {
        let g = Graph::from_edges(n, edges).expect("pairs are distinct");
        if !connected_only || g.is_connected() {
            out.push(g);
        }
    });
    Ok(out)
}

fn extend(
    pairs: &[(usize, usize)],
    idx: usize,
    r: usize,
    degree: &mut [usize],
    chosen: &mut Vec<(usize, usize)>,
    emit: &mut dyn FnMut(&[(usize, usize)]),
) {
    let n = degree.len();
    if idx == pairs.len() {
        if degree.iter().all(|&d| d == r) {
            emit(chosen);
        }
        return;
    }
    let (i, j) = pairs[idx];
    if degree[i] < r && degree[j] < r {
        degree[i] += 1;
        degree[j] += 1;
        chosen.push((i, j));
        extend(pairs, idx + 1, r, degree, chosen, emit);
        chosen.pop();
        degree[i] -= 1;
        degree[j] -= 1;
    }
    // pairs (i, j+1..n) are all that remain to complete vertex i
    if degree[i] + (n - 1 - j) >= r {
        extend(pairs, idx + 1, r, degree, chosen, emit);
    }
}

/// All connected regular graphs of degree at least two with `n_min ≤ n ≤ n_max`.
pub fn connected_regular_graphs(n_min: usize, n_max: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in n_min.max(3)..=n_max {
        for r in 2..n {
            out.extend(regular_graphs(n, r, true)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize, connected: bool, dedup: bool) -> usize {
        enumerate_graphs(n, connected, dedup).unwrap().map(Result::unwrap).count()
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(count(1, false, false), 1);
        assert_eq!(count(3, true, false), 4);
        assert_eq!(count(4, true, false), 38);
        assert_eq!(count(5, true, false), 728);
        for n in 1..=5 {
            assert_eq!(count(n, false, false), 1 << (n * (n - 1) / 2));
        }
        assert!(enumerate_graphs(0, false, false).is_err());
        assert!(enumerate_graphs(9, false, false).is_err());
    }

    #[test]
    fn dedup_reaches_isomorphism_class_counts() {
        // unlabeled graph counts; no collisions occur at these orders
        assert_eq!(count(4, false, true), 11);
        assert_eq!(count(5, true, true), 21);
    }

    #[test]
    fn regular_matches_mask_enumeration() {
        for n in 1..=6 {
            for r in 0..n {
                let by_mask = enumerate_graphs(n, false, false)
                    .unwrap()
                    .map(Result::unwrap)
                    .filter(|g| g.regular_degree() == Some(r) || (n == 1 && r == 0))
                    .count();
                assert_eq!(regular_graphs(n, r, false).unwrap().len(), by_mask, "n={n} r={r}");
            }
        }
        assert_eq!(regular_graphs(8, 3, false).unwrap().len(), 19355);
    }
}
