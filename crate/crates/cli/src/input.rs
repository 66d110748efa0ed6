use spreadlab_core::graph::{parse_edge_list, parse_graph6_lines, Graph};
use spreadlab_core::{Error, Result};
use std::io::Read;
use std::path::Path;

/// Reads stdin for `-`. Otherwise an existing file wins over a graph6 literal.
pub fn load_graphs(input: &str) -> Result<Vec<Graph>> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else if Path::new(input).is_file() {
        std::fs::read_to_string(input).map_err(|e| Error::Io(format!("{input}: {e}")))?
    } else {
        return Ok(vec![Graph::from_graph6(input)?]);
    };
    parse_text(&text)
}

/// Edge lists start with an `n m` header, so a first data line containing
/// whitespace selects the edge-list parser; anything else is graph6.
fn parse_text(text: &str) -> Result<Vec<Graph>> {
    let first =
        text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with(">>graph6<<"));
    match first {
        None => Err(Error::Input("input contains no graph".into())),
        Some(line) if line.split_whitespace().count() > 1 => Ok(vec![parse_edge_list(text)?]),
        Some(_) => parse_graph6_lines(text),
    }
}
