//! Known out-of-hypothesis failures that are reported but never fail a run.
//!
//! The file format is one entry per line, `bound_id<TAB>graph6<TAB>note`.
//! Blank lines and lines starting with `#` are ignored.

use crate::bounds::BoundId;
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::BTreeMap;
use std::path::Path;

/// Environment variable naming the quarantine file.
pub const QUARANTINE_ENV: &str = "SPREADLAB_QUARANTINE";

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Quarantine {
    entries: BTreeMap<(BoundId, String), String>,
}

impl Quarantine {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let fail = |reason: String| Error::Input(format!("quarantine line {}: {reason}", idx + 1));
            let mut fields = line.splitn(3, '\t');
            let (Some(id), Some(g6)) = (fields.next(), fields.next()) else {
                return Err(fail("expected bound_id<TAB>graph6<TAB>note".into()));
            };
            let id: BoundId = id.trim().parse().map_err(|e: Error| fail(e.to_string()))?;
            let g6 = g6.trim();
            Graph::from_graph6(g6).map_err(|e| fail(e.to_string()))?;
            let note = fields.next().unwrap_or("").trim().to_string();
            entries.insert((id, g6.to_string()), note);
        }
        Ok(Quarantine { entries })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn contains(&self, id: BoundId, graph6: &str) -> bool {
        self.entries.contains_key(&(id, graph6.to_string()))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (BoundId, &str, &str)> {
        self.entries.iter().map(|((id, g6), note)| (*id, g6.as_str(), note.as_str()))
    }
}
