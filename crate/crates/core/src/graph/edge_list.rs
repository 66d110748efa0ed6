use super::Graph;
use crate::error::{Error, Result};

/// Parses the edge-list format: a header line `n m`, then `m` lines `i j`
/// with `0 <= i < j < n`. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let bad = |line: usize, reason: &str| Error::EdgeList { line, reason: reason.to_string() };
    let pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let mut it = l.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(bad(line, "expected two non-negative integers")),
        }
    };

    let (line, header) = lines.next().ok_or_else(|| bad(1, "missing header `n m`"))?;
    let (n, m) = pair(line, header)?;
    let mut g = Graph::empty(n);
    let mut count = 0;
    for (line, l) in lines {
        let (i, j) = pair(line, l)?;
        if !(i < j && j < n) {
            return Err(bad(line, "edge must satisfy 0 <= i < j < n"));
        }
        g.insert_edge(i, j).map_err(|e| bad(line, &e.to_string()))?;
        count += 1;
    }
    if count != m {
        return Err(bad(line, &format!("header declares {m} edges, found {count}")));
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (i, j) in g.edges() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}
