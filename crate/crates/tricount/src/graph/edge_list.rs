use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::VertexId;

/// A raw list of vertex pairs, as read from disk or emitted by a generator.
///
/// Pairs may repeat, may appear in both orientations, and may be self-loops;
/// [`crate::CsrGraph::from_edge_list`] canonicalizes all of that away.
/// `n_hint` lets callers force a vertex count larger than `1 + max id`, so
/// graphs can carry trailing isolated vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeList {
    pub n_hint: usize,
    pub edges: Vec<(VertexId, VertexId)>,
}

impl EdgeList {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_hint(n_hint: usize) -> Self {
        EdgeList { n_hint, edges: Vec::new() }
    }

    pub fn from_pairs<I: IntoIterator<Item = (VertexId, VertexId)>>(pairs: I) -> Self {
        EdgeList { n_hint: 0, edges: pairs.into_iter().collect() }
    }

    pub fn push(&mut self, u: VertexId, v: VertexId) {
        self.edges.push((u, v));
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Parse whitespace-separated `u v` lines. Lines that are empty or start
    /// with `#` are skipped. Any other malformed line (wrong token count,
    /// non-integer or negative id) is an [`Error::Parse`] carrying the
    /// 1-based line number.
    pub fn parse_snap<R: BufRead>(reader: R) -> Result<Self> {
        let mut edges = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let lineno = idx + 1;
            let mut tokens = line.split_whitespace();
            let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
                return Err(Error::Parse {
                    line: lineno,
                    reason: "expected exactly two vertex ids".into(),
                });
            };
            edges.push((parse_id(a, lineno)?, parse_id(b, lineno)?));
        }
        Ok(EdgeList { n_hint: 0, edges })
    }

    pub fn from_snap_path<P: AsRef<Path>>(path: P) -> Result<Self> {
        Self::parse_snap(BufReader::new(File::open(path)?))
    }

    /// Write the pairs back out as `u v` lines, one edge per line.
    pub fn write_snap<W: Write>(&self, mut w: W) -> Result<()> {
        for &(u, v) in &self.edges {
            writeln!(w, "{u} {v}")?;
        }
        Ok(())
    }
}

fn parse_id(token: &str, line: usize) -> Result<VertexId> {
    token.parse::<VertexId>().map_err(|_| Error::Parse {
        line,
        reason: format!("invalid vertex id '{token}'"),
    })
}
