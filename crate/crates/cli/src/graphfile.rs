//! The plain-text graph format.
//!
//! ```text
//! graph k3
//! # boundary 3
//! v 1
//! v 2
//! v 3
//! e 12 1 2
//! e 13 1 3
//! e 23 2 3
//! d 12
//! ```
//!
//! `# boundary <ids>` is the one structured comment; every other `#` line is
//! ignored. Serialization is canonical: ids sorted, one record per line.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use edgespace_core::{EdgeId, EdgeSet, MultiGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub name: String,
    pub graph: MultiGraph,
    pub distinguished: EdgeSet,
}

fn int<T: std::str::FromStr>(tok: Option<&str>, what: &str, line: usize) -> Result<T, ParseError> {
    let tok = tok.ok_or_else(|| ParseError {
        line,
        message: format!("missing {what}"),
    })?;
    tok.parse().map_err(|_| ParseError {
        line,
        message: format!("{what} '{tok}' is not a non-negative integer"),
    })
}

impl GraphFile {
    pub fn new(name: impl Into<String>, graph: MultiGraph, distinguished: EdgeSet) -> Self {
        GraphFile {
            name: name.into(),
            graph,
            distinguished,
        }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut name = None;
        let mut vertices: Vec<(VertexId, usize)> = Vec::new();
        let mut seen_v = BTreeSet::new();
        let mut edges: Vec<(EdgeId, VertexId, VertexId, usize)> = Vec::new();
        let mut seen_e = BTreeSet::new();
        let mut d: Vec<(EdgeId, usize)> = Vec::new();
        let mut boundary: Vec<(VertexId, usize)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let l = raw.trim();
            if l.is_empty() {
                continue;
            }
            if let Some(rest) = l.strip_prefix('#') {
                let mut toks = rest.split_whitespace();
                if toks.next() == Some("boundary") {
                    for t in toks {
                        boundary.push((int(Some(t), "boundary vertex", line)?, line));
                    }
                }
                continue;
            }
            let mut toks = l.split_whitespace();
            let err = |message: String| ParseError { line, message };
            match toks.next() {
                Some("graph") => {
                    if name.is_some() {
                        return Err(err("second graph header".into()));
                    }
                    let n = toks
                        .next()
                        .ok_or_else(|| err("graph header needs a name".into()))?;
                    name = Some(n.to_string());
                }
                Some(kind) if name.is_none() => {
                    return Err(err(format!(
                        "'{kind}' record before the 'graph <name>' header"
                    )));
                }
                Some("v") => {
                    let v = int(toks.next(), "vertex id", line)?;
                    if !seen_v.insert(v) {
                        return Err(err(format!("duplicate vertex {v}")));
                    }
                    vertices.push((v, line));
                }
                Some("e") => {
                    let e = int(toks.next(), "edge id", line)?;
                    let a = int(toks.next(), "first endpoint", line)?;
                    let b = int(toks.next(), "second endpoint", line)?;
                    if a == b {
                        return Err(err(format!("edge {e} is a loop at vertex {a}")));
                    }
                    if !seen_e.insert(e) {
                        return Err(err(format!("duplicate edge {e}")));
                    }
                    edges.push((e, a, b, line));
                }
                Some("d") => d.push((int(toks.next(), "edge id", line)?, line)),
                Some(other) => return Err(err(format!("unknown record '{other}'"))),
                None => {}
            }
            if toks.next().is_some() {
                return Err(ParseError {
                    line,
                    message: "trailing tokens".into(),
                });
            }
        }
        let name = name.ok_or(ParseError {
            line: 1,
            message: "missing 'graph <name>' header".into(),
        })?;
        for &(e, a, b, line) in &edges {
            if let Some(x) = [a, b].into_iter().find(|x| !seen_v.contains(x)) {
                return Err(ParseError {
                    line,
                    message: format!("edge {e} uses undeclared vertex {x}"),
                });
            }
        }
        for &(e, line) in &d {
            if !seen_e.contains(&e) {
                return Err(ParseError {
                    line,
                    message: format!("distinguished edge {e} is not an edge of the graph"),
                });
            }
        }
        for &(v, line) in &boundary {
            if !seen_v.contains(&v) {
                return Err(ParseError {
                    line,
                    message: format!("boundary vertex {v} is not declared"),
                });
            }
        }
        let graph = MultiGraph::new(
            vertices.iter().map(|(v, _)| *v),
            edges.iter().map(|&(e, a, b, _)| (e, a, b)),
        )
        .and_then(|g| g.with_boundary(boundary.iter().map(|(v, _)| *v)))
        .map_err(|e| ParseError {
            line: 1,
            message: e.to_string(),
        })?;
        Ok(GraphFile {
            name,
            graph,
            distinguished: d.iter().map(|(e, _)| *e).collect(),
        })
    }

    /// Canonical text: header, boundary comment, then sorted `v`, `e` and `d` lines.
    pub fn serialize(&self) -> String {
        let mut out = format!("graph {}\n", self.name);
        if !self.graph.boundary().is_empty() {
            let ids: Vec<String> = self.graph.boundary().iter().map(u64::to_string).collect();
            writeln!(out, "# boundary {}", ids.join(" ")).unwrap();
        }
        for v in self.graph.vertices() {
            writeln!(out, "v {v}").unwrap();
        }
        for (e, a, b) in self.graph.edges() {
            writeln!(out, "e {e} {a} {b}").unwrap();
        }
        for e in self.distinguished.iter() {
            writeln!(out, "d {e}").unwrap();
        }
        out
    }
}

/// Parses an edge list such as `1,2,5` or `1 2 5`.
pub fn parse_edge_list(s: &str) -> Result<EdgeSet, String> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<EdgeId>()
                .map_err(|_| format!("'{t}' is not an edge id"))
        })
        .collect()
}

/// Parses the `d` lines (or bare edge ids) of a set file.
pub fn parse_set_file(text: &str) -> Result<EdgeSet, String> {
    let mut out = EdgeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let body = l.strip_prefix("d ").unwrap_or(l);
        out.add_assign(&parse_edge_list(body).map_err(|m| format!("line {}: {m}", i + 1))?);
    }
    Ok(out)
}
