//! Structural recognizers for the handful of extremal shapes that appear as
//! equality cases. None of these needs a general isomorphism test.

use super::Graph;

/// If the non-isolated vertices of `g` induce a complete bipartite graph
/// `K_{a,b}`, returns `(a, b)` with `a <= b`.
pub fn complete_bipartite_parts(g: &Graph) -> Option<(usize, usize)> {
    let active: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) > 0).collect();
    if active.is_empty() {
        return None;
    }
    let h = g.induced_subgraph(&active);
    if !h.is_connected() {
        return None;
    }
    let color = h.two_coloring()?;
    let a = color.iter().filter(|&&c| c == 0).count();
    let b = color.len() - a;
    (a * b == h.size()).then_some((a.min(b), a.max(b)))
}

/// Whether `g ≅ K_a ∨ (K_b ∪ K_c)` with `a, b, c >= 1`.
///
/// The `a` joined vertices are exactly those of degree `n - 1` (every other
/// vertex misses the opposite clique), and deleting them must leave two
/// disjoint cliques of orders `{b, c}`.
pub fn is_clique_join_of_two_cliques(g: &Graph, a: usize, b: usize, c: usize) -> bool {
    let n = g.order();
    if a == 0 || b == 0 || c == 0 || n != a + b + c {
        return false;
    }
    let (full, rest): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| g.degree(v) == n - 1);
    if full.len() != a {
        return false;
    }
    let h = g.induced_subgraph(&rest);
    let comps = h.components();
    if comps.len() != 2 {
        return false;
    }
    let mut sizes = [comps[0].len(), comps[1].len()];
    sizes.sort_unstable();
    let want = [b.min(c), b.max(c)];
    let cliques = comps.iter().all(|cmp| cmp.iter().all(|&v| h.degree(v) == cmp.len() - 1));
    sizes == want && cliques
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn bipartite_complete() {
        let k23 = Family::CompleteBipartite(2, 3).build().unwrap();
        assert_eq!(complete_bipartite_parts(&k23), Some((2, 3)));
        let padded = k23.disjoint_union(&Graph::empty(2));
        assert_eq!(complete_bipartite_parts(&padded), Some((2, 3)));
        assert_eq!(complete_bipartite_parts(&Family::Path(4).build().unwrap()), None);
        assert_eq!(complete_bipartite_parts(&Family::Cycle(4).build().unwrap()), Some((2, 2)));
        assert_eq!(complete_bipartite_parts(&Graph::empty(3)), None);
    }

    #[test]
    fn join_of_cliques() {
        // K_1 ∨ (K_2 ∪ K_3) in the family's own labeling
        let g = Family::JoinFamily { n: 6, k: 2, i: 1 }.build().unwrap();
        assert!(is_clique_join_of_two_cliques(&g, 1, 2, 3));
        assert!(is_clique_join_of_two_cliques(&g, 1, 3, 2));
        assert!(!is_clique_join_of_two_cliques(&g, 2, 1, 3));
        let h = Family::JoinFamily { n: 6, k: 1, i: 2 }.build().unwrap();
        assert!(is_clique_join_of_two_cliques(&h, 2, 1, 3));
        assert!(!is_clique_join_of_two_cliques(&Family::Complete(6).build().unwrap(), 1, 2, 3));
        // relabeling does not matter
        let perm = [4, 0, 5, 2, 1, 3];
        let edges: Vec<_> = h.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let shuffled = Graph::from_edges(6, &edges).unwrap();
        assert!(is_clique_join_of_two_cliques(&shuffled, 2, 1, 3));
    }
}
