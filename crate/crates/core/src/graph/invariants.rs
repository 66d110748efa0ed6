use super::flow::FlowNetwork;
use super::Graph;
use serde::Serialize;

/// Degree sequence summary, including the Zagreb index `Σ d(v)²`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub zagreb: u64,
}

pub fn degree_profile(g: &Graph) -> DegreeProfile {
    let degrees = g.degrees();
    DegreeProfile {
        min_degree: degrees.iter().copied().min().unwrap_or(0),
        max_degree: degrees.iter().copied().max().unwrap_or(0),
        zagreb: degrees.iter().map(|&d| (d * d) as u64).sum(),
        degrees,
    }
}

/// Connectivity and distance invariants. `None` stands for infinity
/// in `girth` (forests) and `diameter` (disconnected graphs).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityProfile {
    pub is_connected: bool,
    pub vertex_connectivity: usize,
    pub edge_connectivity: usize,
    pub girth: Option<usize>,
    pub diameter: Option<usize>,
    pub is_bipartite: bool,
    pub is_regular: bool,
    pub regular_degree: Option<usize>,
}

pub fn connectivity_profile(g: &Graph) -> ConnectivityProfile {
    let regular_degree = g.regular_degree();
    ConnectivityProfile {
        is_connected: g.is_connected(),
        vertex_connectivity: vertex_connectivity(g),
        edge_connectivity: edge_connectivity(g),
        girth: girth(g),
        diameter: diameter(g),
        is_bipartite: g.is_bipartite(),
        is_regular: regular_degree.is_some(),
        regular_degree,
    }
}

/// Minimum number of internally disjoint `s`–`t` paths, for non-adjacent `s != t`.
fn local_vertex_connectivity(g: &Graph, s: usize, t: usize, limit: i32) -> i32 {
    let n = g.order();
    let big = n as i32;
    // v_in = 2v, v_out = 2v + 1
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        let through = if v == s || v == t { big } else { 1 };
        net.add_arc(2 * v, 2 * v + 1, through);
    }
    for (u, v) in g.edges() {
        net.add_arc(2 * u + 1, 2 * v, big);
        net.add_arc(2 * v + 1, 2 * u, big);
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// κ(G): minimum vertex cut over non-adjacent pairs; `n - 1` for complete
/// graphs and 0 for disconnected ones.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = g.degrees().into_iter().min().unwrap_or(0) as i32;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(local_vertex_connectivity(g, s, t, best));
            }
        }
    }
    best as usize
}

/// ε(G): minimum over `t` of the unit-capacity max flow from vertex 0 to `t`.
pub fn edge_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    let edges = g.edges();
    let mut best = g.degrees().into_iter().min().unwrap_or(0) as i32;
    for t in 1..n {
        let mut net = FlowNetwork::new(n);
        for &(u, v) in &edges {
            net.add_arc(u, v, 1);
            net.add_arc(v, u, 1);
        }
        best = best.min(net.max_flow(0, t, best));
    }
    best as usize
}

/// Length of a shortest cycle, via BFS from every vertex.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push(root);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            if 2 * dist[u] >= best {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// Largest BFS eccentricity; `None` when disconnected. The null graph has diameter 0.
pub fn diameter(g: &Graph) -> Option<usize> {
    let mut best = 0;
    for v in 0..g.order() {
        for d in g.bfs_distances(v) {
            if d == usize::MAX {
                return None;
            }
            best = best.max(d);
        }
    }
    Some(best)
}
