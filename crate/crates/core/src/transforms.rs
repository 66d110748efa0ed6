//! Line graphs and total graphs, built on a shared lexicographic edge labeling.
//!
//! Edges are labeled lexicographically by endpoint pair. The same labels index
//! the vertices of the line graph and the trailing `m` vertices of the total graph.

use crate::graph::Graph;
use crate::linalg::IntMatrix;
use serde::Serialize;

/// The edges of a graph in lexicographic order; position is the edge label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeIndex {
    edges: Vec<(usize, usize)>,
}

impl EdgeIndex {
    pub fn of(g: &Graph) -> Self {
        EdgeIndex { edges: g.edges() }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Label of the edge `uv`, if present.
    pub fn position(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }
}

/// The `n × m` 0/1 matrix with `r[v][e] = 1` iff `v` is an endpoint of `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    matrix: IntMatrix,
}

impl IncidenceMatrix {
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// `R Rᵗ`, which equals the signless Laplacian.
    pub fn gram_vertices(&self) -> IntMatrix {
        &self.matrix * &self.matrix.transpose()
    }

    /// `Rᵗ R`, which equals `2I + A(L(G))`.
    pub fn gram_edges(&self) -> IntMatrix {
        &self.matrix.transpose() * &self.matrix
    }
}

pub fn incidence_matrix(g: &Graph) -> IncidenceMatrix {
    let index = EdgeIndex::of(g);
    let mut matrix = IntMatrix::zeros(g.order(), index.len());
    for (e, &(u, v)) in index.edges().iter().enumerate() {
        matrix.set(u, e, 1);
        matrix.set(v, e, 1);
    }
    IncidenceMatrix { matrix }
}

pub fn line_graph(g: &Graph) -> (Graph, EdgeIndex) {
    let index = EdgeIndex::of(g);
    let edges = index.edges();
    let mut pairs = Vec::new();
    for a in 0..edges.len() {
        let (u, v) = edges[a];
        for (b, &(x, y)) in edges.iter().enumerate().skip(a + 1) {
            if u == x || u == y || v == x || v == y {
                pairs.push((a, b));
            }
        }
    }
    let line = Graph::from_edges(edges.len(), &pairs).expect("line graph pairs are distinct");
    (line, index)
}

/// Vertices of `g` keep their labels; edge `e` becomes vertex `n + e`.
pub fn total_graph(g: &Graph) -> Graph {
    let n = g.order();
    let (line, index) = line_graph(g);
    let mut pairs = g.edges();
    for (e, &(u, v)) in index.edges().iter().enumerate() {
        pairs.push((u, n + e));
        pairs.push((v, n + e));
    }
    pairs.extend(line.edges().into_iter().map(|(a, b)| (n + a, n + b)));
    Graph::from_edges(n + index.len(), &pairs).expect("total graph pairs are distinct")
}
