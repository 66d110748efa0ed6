//! Simple undirected graphs on `0..n` and their structural invariants.

mod edge_list;
mod families;
mod flow;
mod graph6;
mod induced_trees;
mod invariants;
mod recognize;

pub use edge_list::{parse_edge_list, to_edge_list};
pub use families::{cycle_with_pendant_path, petersen, Family};
pub use graph6::{parse_graph6_lines, GRAPH6_HEADER};
pub use induced_trees::{max_induced_tree_diameter, max_pendant_tree_diameter, unicyclic_cycle, INDUCED_TREE_CAP};
pub use invariants::{
    connectivity_profile, degree_profile, diameter, edge_connectivity, girth, vertex_connectivity, ConnectivityProfile,
    DegreeProfile,
};
pub use recognize::{complete_bipartite_parts, is_clique_join_of_two_cliques};

use crate::error::{Error, Result};

const WORD: usize = 64;

/// An undirected simple graph stored as a symmetric bit matrix.
///
/// Construction always goes through checked edge insertion, so the
/// adjacency is symmetric with an empty diagonal by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    m: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges()).finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(WORD).max(1);
        Graph { n, words, rows: vec![0; n * words], m: 0 }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds the graph on `n <= 11` vertices whose edge set is the bitmask
    /// `mask` over the pairs `(i, j)`, `i < j`, in lexicographic order.
    pub(crate) fn from_pair_mask(n: usize, mask: u64) -> Self {
        let mut g = Graph::empty(n);
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if mask >> bit & 1 == 1 {
                    g.set(i, j);
                    g.set(j, i);
                    g.m += 1;
                }
                bit += 1;
            }
        }
        g
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / WORD] |= 1 << (v % WORD);
    }

    #[inline]
    fn clear(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / WORD] &= !(1 << (v % WORD));
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(Error::EdgePresent(u.min(v), u.max(v)));
        }
        self.set(u, v);
        self.set(v, u);
        self.m += 1;
        Ok(())
    }

    /// `G + uv`. Fails if `uv` is already an edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// `G - uv`. Fails if `uv` is not an edge.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.clear(u, v);
        g.clear(v, u);
        g.m -= 1;
        Ok(g)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(k, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * WORD + bit)
            })
        })
    }

    /// Edges `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for i in 0..self.n {
            out.extend(self.neighbors(i).filter(|&j| j > i).map(|j| (i, j)));
        }
        out
    }

    /// Pairs `(i, j)`, `i < j`, that are not edges, sorted lexicographically.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if !self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True for `n <= 1` and for every graph with a single component.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m + 1 == self.n && self.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * self.n.saturating_sub(1) / 2
    }

    /// `Some(r)` when every vertex has degree `r`. The null graph is not regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees();
        let first = *d.first()?;
        d.iter().all(|&x| x == first).then_some(first)
    }

    /// Proper 2-coloring if one exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = Vec::new();
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            queue.clear();
            queue.push(s);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                for w in self.neighbors(u) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Subgraph induced by `vertices`, relabeled `0..vertices.len()` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.set(a, b);
                    g.set(b, a);
                    g.m += 1;
                }
            }
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.set(u, v);
            g.set(v, u);
        }
        for (u, v) in other.edges() {
            g.set(u + shift, v + shift);
            g.set(v + shift, u + shift);
        }
        g.m = self.m + other.m;
        g
    }

    /// `G1 ∨ G2`: disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in self.n..self.n + other.n {
                g.set(u, v);
                g.set(v, u);
            }
        }
        g.m += self.n * other.n;
        g
    }

    /// Breadth-first distances from `s`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut queue = vec![s];
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for w in self.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push(w);
                }
            }
        }
        dist
    }

    pub fn from_graph6(text: &str) -> Result<Graph> {
        graph6::decode(text)
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(self)
    }
}
