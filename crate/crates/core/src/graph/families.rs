use super::Graph;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Named graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    CompleteBipartite(usize, usize),
    /// `K_i ∨ (K_k ∪ K_{n-k-i})`. Vertices `0..i` form the joined clique,
    /// then the `k`-clique, then the remaining `n-k-i` clique.
    JoinFamily {
        n: usize,
        k: usize,
        i: usize,
    },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Complete(_) => "complete",
            Family::Cycle(_) => "cycle",
            Family::Path(_) => "path",
            Family::CompleteBipartite(..) => "complete_bipartite",
            Family::JoinFamily { .. } => "join_family",
        }
    }

    /// Parses a family name and its integer parameters, e.g. `("join_family", [5, 1, 1])`.
    pub fn parse(name: &str, params: &[usize]) -> Result<Family> {
        let arity = |want: usize| -> Result<()> {
            if params.len() == want {
                Ok(())
            } else {
                Err(Error::Parameter(format!("{name} takes {want} parameter(s), got {}", params.len())))
            }
        };
        let fam = match name {
            "complete" => {
                arity(1)?;
                Family::Complete(params[0])
            }
            "cycle" => {
                arity(1)?;
                Family::Cycle(params[0])
            }
            "path" => {
                arity(1)?;
                Family::Path(params[0])
            }
            "complete_bipartite" => {
                arity(2)?;
                Family::CompleteBipartite(params[0], params[1])
            }
            "join_family" => {
                arity(3)?;
                Family::JoinFamily { n: params[0], k: params[1], i: params[2] }
            }
            other => return Err(Error::Parameter(format!("unknown family `{other}`"))),
        };
        fam.validate()?;
        Ok(fam)
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Parameter(msg));
        match *self {
            Family::Complete(n) | Family::Path(n) if n == 0 => fail(format!("{} needs n >= 1", self.name())),
            Family::Cycle(n) if n < 3 => fail(format!("cycle needs n >= 3, got {n}")),
            Family::CompleteBipartite(a, b) if a == 0 || b == 0 => {
                fail(format!("complete_bipartite needs a, b >= 1, got ({a}, {b})"))
            }
            Family::JoinFamily { n, k, i } if i == 0 || k == 0 || n < k + i + 1 => {
                fail(format!("join_family needs i >= 1, k >= 1, n - k - i >= 1; got n={n} k={k} i={i}"))
            }
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        let mut g;
        match *self {
            Family::Complete(n) => {
                g = Graph::empty(n);
                for u in 0..n {
                    for v in u + 1..n {
                        g.insert_edge(u, v)?;
                    }
                }
            }
            Family::Cycle(n) => {
                g = Family::Path(n).build()?;
                g.insert_edge(0, n - 1)?;
            }
            Family::Path(n) => {
                g = Graph::empty(n);
                for u in 1..n {
                    g.insert_edge(u - 1, u)?;
                }
            }
            Family::CompleteBipartite(a, b) => {
                g = Graph::empty(a).join(&Graph::empty(b));
            }
            Family::JoinFamily { n, k, i } => {
                let clique = |s: usize| Family::Complete(s).build();
                g = clique(i)?.join(&clique(k)?.disjoint_union(&clique(n - k - i)?));
            }
        }
        Ok(g)
    }
}

/// A cycle `0..cycle_len` with a pendant path of `path_len` edges hanging off
/// the last cycle vertex.
pub fn cycle_with_pendant_path(cycle_len: usize, path_len: usize) -> Result<Graph> {
    Family::Cycle(cycle_len).validate()?;
    let n = cycle_len + path_len;
    let mut g = Graph::empty(n);
    g.insert_edge(0, cycle_len - 1)?;
    for v in (1..cycle_len).chain(cycle_len..n) {
        g.insert_edge(v - 1, v)?;
    }
    Ok(g)
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("petersen edges are distinct")
}
