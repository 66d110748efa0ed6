use super::Graph;
use crate::error::{Error, Result};

/// Largest order accepted by [`max_induced_tree_diameter`].
pub const INDUCED_TREE_CAP: usize = 24;

/// Maximum diameter over all vertex subsets that induce a tree.
///
/// Each induced tree is generated exactly once by growing it from its
/// smallest vertex and branching include/exclude on boundary vertices. A
/// boundary vertex with two neighbors already in the tree would close a
/// cycle, so it is dropped permanently.
pub fn max_induced_tree_diameter(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > INDUCED_TREE_CAP {
        return Err(Error::Capacity(format!(
            "induced-tree search is exhaustive and capped at {INDUCED_TREE_CAP} vertices, got {n}"
        )));
    }
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).fold(0, |m, w| m | 1 << w)).collect();
    let mut best = 0;
    for root in 0..n {
        let above = if root + 1 >= 32 { 0 } else { !0u32 << (root + 1) };
        let mut search = Search { adj: &adj, allowed: above, best: &mut best };
        search.grow(1 << root, adj[root] & above, 0);
    }
    Ok(best)
}

struct Search<'a> {
    adj: &'a [u32],
    allowed: u32,
    best: &'a mut usize,
}

impl Search<'_> {
    fn grow(&mut self, tree: u32, boundary: u32, excluded: u32) {
        let open = boundary & !excluded;
        if open == 0 {
            *self.best = (*self.best).max(tree_diameter(self.adj, tree));
            return;
        }
        let v = open.trailing_zeros() as usize;
        let bit = 1u32 << v;
        self.grow(tree, boundary, excluded | bit);
        if (self.adj[v] & tree).count_ones() == 1 {
            let grown = tree | bit;
            let next = (boundary | self.adj[v] & self.allowed) & !grown;
            // vertices now touching the tree twice can never join it
            let blocked = (0..32)
                .filter(|&w| next >> w & 1 == 1 && (self.adj[w] & grown).count_ones() >= 2)
                .fold(0u32, |m, w| m | 1 << w);
            self.grow(grown, next, excluded | blocked);
        }
    }
}

/// Vertices of the unique cycle of a connected unicyclic graph, found by
/// repeatedly stripping leaves. `None` unless `g` is connected with `m = n`.
pub fn unicyclic_cycle(g: &Graph) -> Option<Vec<usize>> {
    if !g.is_connected() || g.size() != g.order() || g.order() < 3 {
        return None;
    }
    let mut deg = g.degrees();
    let mut alive = vec![true; g.order()];
    let mut leaves: Vec<usize> = (0..g.order()).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = leaves.pop() {
        alive[v] = false;
        for w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    leaves.push(w);
                }
            }
        }
    }
    Some((0..g.order()).filter(|&v| alive[v]).collect())
}

/// For a connected unicyclic graph: the largest diameter among the trees
/// hanging off the cycle, where the tree at cycle vertex `v` is the
/// component of `v` once the cycle edges are deleted.
pub fn max_pendant_tree_diameter(g: &Graph) -> Result<usize> {
    let cycle = unicyclic_cycle(g).ok_or_else(|| Error::Hypothesis("graph is not connected and unicyclic".into()))?;
    let on_cycle = |v: usize| cycle.binary_search(&v).is_ok();
    let mut best = 0;
    for &root in &cycle {
        // walk away from the cycle only
        let mut members = vec![root];
        let mut head = 0;
        while head < members.len() {
            let u = members[head];
            head += 1;
            for w in g.neighbors(u) {
                if !on_cycle(w) && !members.contains(&w) {
                    members.push(w);
                }
            }
        }
        let tree = g.induced_subgraph(&members);
        let diam = (0..tree.order()).flat_map(|v| tree.bfs_distances(v)).max().unwrap_or(0);
        best = best.max(diam);
    }
    Ok(best)
}

fn eccentric(adj: &[u32], set: u32, start: usize) -> (usize, usize) {
    let mut seen = 1u32 << start;
    let mut layer = seen;
    let mut depth = 0;
    let mut last = start;
    loop {
        let next = (0..32).filter(|&v| layer >> v & 1 == 1).fold(0u32, |m, v| m | adj[v]) & set & !seen;
        if next == 0 {
            return (last, depth);
        }
        seen |= next;
        layer = next;
        depth += 1;
        last = next.trailing_zeros() as usize;
    }
}

fn tree_diameter(adj: &[u32], tree: u32) -> usize {
    let (far, _) = eccentric(adj, tree, tree.trailing_zeros() as usize);
    eccentric(adj, tree, far).1
}
