//! graph6 codec (the nauty text format).
//!
//! Layout: a size prefix, then the upper triangle of the adjacency matrix read
//! column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed big-endian into
//! 6-bit groups, each stored as `group + 63`.

use super::Graph;
use crate::error::{Error, Result};

pub const GRAPH6_HEADER: &str = ">>graph6<<";

const BIAS: u8 = 63;
const MAX_N: usize = (1 << 36) - 1;

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
}

pub(crate) fn encode(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_N, "graph6 cannot encode {n} vertices");
    let mut out = Vec::with_capacity(8 + n * n.saturating_sub(1) / 12);
    push_size(&mut out, n);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + BIAS);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn read_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = *bytes.first().ok_or_else(|| err(0, "empty input"))?;
    if first != 126 {
        return Ok(((first - BIAS) as usize, 1));
    }
    let (start, len) = if bytes.get(1) == Some(&126) { (2, 6) } else { (1, 3) };
    if bytes.len() < start + len {
        return Err(err(bytes.len(), "truncated size prefix"));
    }
    let n = bytes[start..start + len].iter().fold(0usize, |acc, &b| acc << 6 | (b - BIAS) as usize);
    Ok((n, start + len))
}

pub(crate) fn decode(text: &str) -> Result<Graph> {
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let text = text.trim_end_matches(['\n', '\r']);
    let bytes = text.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(BIAS..=126).contains(b)) {
        return Err(err(pos, format!("byte 0x{:02x} outside [63, 126]", bytes[pos])));
    }
    let (n, header) = read_size(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let body_len = bits.div_ceil(6);
    let body = &bytes[header..];
    if body.len() < body_len {
        return Err(err(bytes.len(), format!("expected {body_len} data bytes for n = {n}, found {}", body.len())));
    }
    if body.len() > body_len {
        return Err(err(header + body_len, "trailing bytes after adjacency data"));
    }
    let pad = body_len * 6 - bits;
    if pad > 0 {
        let last = body[body_len - 1] - BIAS;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(header + body_len - 1, "nonzero padding bits"));
        }
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set(i, j);
                g.set(j, i);
                g.m += 1;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Parses one graph per non-empty line, skipping `>>graph6<<` header lines.
/// Errors carry the 1-based line number in their reason.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line == GRAPH6_HEADER {
            continue;
        }
        match decode(line) {
            Ok(g) => out.push(g),
            Err(Error::Graph6 { offset, reason }) => {
                return Err(Error::Graph6 { offset, reason: format!("line {}: {reason}", idx + 1) })
            }
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}
