//! The edge-list graph file format.
//!
//! UTF-8 text; `#` starts a comment line. The first non-comment line is
//! `p <n> <m>`, followed by exactly m lines `<u> <v>` with 0 ≤ u,v < n and
//! u ≠ v. Writing is canonical: header, then edges sorted
//! lexicographically, one per line.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected header `p <n> <m>`")]
    BadHeader { line: usize },
    #[error("missing header line `p <n> <m>`")]
    MissingHeader,
    #[error("line {line}: expected edge `<u> <v>`")]
    BadEdge { line: usize },
    #[error("line {line}: vertex {id} out of range for {n} vertices")]
    OutOfRange { line: usize, id: usize, n: usize },
    #[error("line {line}: loop edge at vertex {id}")]
    LoopEdge { line: usize, id: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("header promises {expected} edges but the file lists {found}")]
    WrongEdgeCount { expected: usize, found: usize },
    #[error("line {line}: content after the promised {expected} edges")]
    TrailingContent { line: usize, expected: usize },
}

/// Plain serializable view of a graph: header counts plus endpoint pairs.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GraphDocument {
    pub n: usize,
    pub m: usize,
    pub edges: Vec<(VertexId, VertexId)>,
}

impl From<&Graph> for GraphDocument {
    fn from(g: &Graph) -> Self {
        GraphDocument {
            n: g.vertex_count(),
            m: g.edge_count(),
            edges: g.edges().map(|e| e.endpoints()).collect(),
        }
    }
}

/// Parses the edge-list format; errors carry 1-based line numbers.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        match header {
            None => {
                let mut parts = content.split_whitespace();
                if parts.next() != Some("p") {
                    return Err(ParseError::BadHeader { line });
                }
                let n = parts
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or(ParseError::BadHeader { line })?;
                let m = parts
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or(ParseError::BadHeader { line })?;
                if parts.next().is_some() {
                    return Err(ParseError::BadHeader { line });
                }
                header = Some((n, m));
            }
            Some((n, m)) => {
                if edges.len() == m {
                    return Err(ParseError::TrailingContent { line, expected: m });
                }
                let mut parts = content.split_whitespace();
                let u = parts
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or(ParseError::BadEdge { line })?;
                let v = parts
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or(ParseError::BadEdge { line })?;
                if parts.next().is_some() {
                    return Err(ParseError::BadEdge { line });
                }
                if u >= n {
                    return Err(ParseError::OutOfRange { line, id: u, n });
                }
                if v >= n {
                    return Err(ParseError::OutOfRange { line, id: v, n });
                }
                if u == v {
                    return Err(ParseError::LoopEdge { line, id: u });
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(ParseError::DuplicateEdge { line, u, v });
                }
                edges.push((u, v));
            }
        }
    }

    let Some((n, m)) = header else {
        return Err(ParseError::MissingHeader);
    };
    if edges.len() != m {
        return Err(ParseError::WrongEdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(n, &edges).expect("validated while parsing"))
}

/// Canonical text form: header, then sorted edges.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        let (u, v) = e.endpoints();
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
