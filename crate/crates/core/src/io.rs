//! Graph file formats.
//!
//! Two formats are supported:
//!
//! * `edge_list` — UTF-8 text, one `u v` pair per line, whitespace
//!   separated. `#` starts a comment (rest of line ignored), blank lines
//!   are skipped. A comment of the exact form `# n <count>` declares the
//!   vertex count; writers emit it so that isolated vertices and vertex
//!   labels survive a round trip. Files with such a header keep their ids
//!   verbatim (ids must be `< count`); files without one get their ids
//!   remapped to `0..n` in order of first appearance.
//! * `dimacs_col` — `c` comment lines, one `p edge <n> <m>` line, then
//!   `e <u> <v>` lines with 1-based vertex ids.
//!
//! Loading collapses duplicate edges and rejects self-loops in both
//! formats. `load(save(g))` reproduces the edge set of `g` exactly.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    DimacsCol,
}

#[derive(Debug, Error)]
pub enum GraphFileError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: u64 },
    #[error("line {line}: vertex id {id} out of range 1..={n}")]
    IdOutOfRange { line: usize, id: u64, n: usize },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
}

fn parse_err(line: usize, message: impl Into<String>) -> GraphFileError {
    GraphFileError::Parse {
        line,
        message: message.into(),
    }
}

/// Loads a graph from `path` in the given format.
pub fn load_graph(path: impl AsRef<Path>, format: GraphFormat) -> Result<Graph, GraphFileError> {
    let text = fs::read_to_string(path)?;
    parse_graph(&text, format)
}

/// Parses a graph from in-memory text in the given format.
pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, GraphFileError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::DimacsCol => parse_dimacs(text),
    }
}

/// Guesses the format from content: DIMACS iff the first meaningful line
/// is a `c` or `p` line.
pub fn detect_format(text: &str) -> GraphFormat {
    for line in text.lines() {
        let trimmed = line.trim_start();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed.starts_with("p ") || trimmed.starts_with("p\t") || trimmed == "p" {
            return GraphFormat::DimacsCol;
        }
        if trimmed.starts_with('c') && !trimmed.chars().next().unwrap().is_ascii_digit() {
            return GraphFormat::DimacsCol;
        }
        return GraphFormat::EdgeList;
    }
    GraphFormat::EdgeList
}

fn parse_edge_list(text: &str) -> Result<Graph, GraphFileError> {
    let mut declared_n: Option<usize> = None;
    let mut raw_edges: Vec<(usize, u64, u64)> = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw_line.find('#') {
            Some(pos) => {
                if declared_n.is_none() {
                    if let Some(n) = parse_header_comment(&raw_line[pos..]) {
                        declared_n = Some(n);
                    }
                }
                &raw_line[..pos]
            }
            None => raw_line,
        };
        let mut tokens = line.split_whitespace();
        let Some(a) = tokens.next() else { continue };
        let Some(b) = tokens.next() else {
            return Err(parse_err(lineno, format!("expected \"u v\", got {line:?}")));
        };
        if tokens.next().is_some() {
            return Err(parse_err(lineno, format!("expected \"u v\", got {line:?}")));
        }
        let u: u64 = a
            .parse()
            .map_err(|_| parse_err(lineno, format!("bad vertex id {a:?}")))?;
        let v: u64 = b
            .parse()
            .map_err(|_| parse_err(lineno, format!("bad vertex id {b:?}")))?;
        if u == v {
            return Err(GraphFileError::SelfLoop {
                line: lineno,
                vertex: u,
            });
        }
        raw_edges.push((lineno, u, v));
    }

    if let Some(n) = declared_n {
        let mut edges = Vec::with_capacity(raw_edges.len());
        for (line, u, v) in raw_edges {
            for id in [u, v] {
                if id as usize >= n {
                    return Err(GraphFileError::IdOutOfRange { line, id, n });
                }
            }
            edges.push((u as usize, v as usize));
        }
        Ok(Graph::from_edges(n, edges)?)
    } else {
        // No header: remap ids to 0..n in order of first appearance.
        let mut remap: HashMap<u64, usize> = HashMap::new();
        let mut edges = Vec::with_capacity(raw_edges.len());
        for (_, u, v) in raw_edges {
            let next = remap.len();
            let ui = *remap.entry(u).or_insert(next);
            let next = remap.len();
            let vi = *remap.entry(v).or_insert(next);
            edges.push((ui, vi));
        }
        Ok(Graph::from_edges(remap.len(), edges)?)
    }
}

/// Recognizes the `# n <count>` header comment.
fn parse_header_comment(comment: &str) -> Option<usize> {
    let body = comment.strip_prefix('#')?.trim();
    let mut tokens = body.split_whitespace();
    if tokens.next()? != "n" {
        return None;
    }
    let n = tokens.next()?.parse().ok()?;
    tokens.next().is_none().then_some(n)
}

fn parse_dimacs(text: &str) -> Result<Graph, GraphFileError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw_line.trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match tokens.next().unwrap() {
            "c" => continue,
            "p" => {
                if n.is_some() {
                    return Err(parse_err(lineno, "duplicate p line"));
                }
                if tokens.next() != Some("edge") {
                    return Err(parse_err(lineno, "expected \"p edge <n> <m>\""));
                }
                let nv: usize = tokens
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| parse_err(lineno, "bad vertex count in p line"))?;
                let _m: usize = tokens
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| parse_err(lineno, "bad edge count in p line"))?;
                if tokens.next().is_some() {
                    return Err(parse_err(lineno, "trailing tokens in p line"));
                }
                n = Some(nv);
            }
            "e" => {
                let n = n.ok_or_else(|| parse_err(lineno, "e line before p line"))?;
                let u: u64 = tokens
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| parse_err(lineno, "bad e line"))?;
                let v: u64 = tokens
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| parse_err(lineno, "bad e line"))?;
                if tokens.next().is_some() {
                    return Err(parse_err(lineno, "trailing tokens in e line"));
                }
                for id in [u, v] {
                    if id < 1 || id as usize > n {
                        return Err(GraphFileError::IdOutOfRange { line: lineno, id, n });
                    }
                }
                if u == v {
                    return Err(GraphFileError::SelfLoop {
                        line: lineno,
                        vertex: u,
                    });
                }
                edges.push((u as usize - 1, v as usize - 1));
            }
            other => {
                return Err(parse_err(lineno, format!("unknown line type {other:?}")));
            }
        }
    }
    let n = n.ok_or_else(|| parse_err(text.lines().count().max(1), "missing p line"))?;
    Ok(Graph::from_edges(n, edges)?)
}

/// Serializes `g` in the given format; edges are written in lexicographic
/// order so output is canonical for a given labeled graph.
pub fn format_graph(g: &Graph, format: GraphFormat) -> String {
    let mut out = String::new();
    match format {
        GraphFormat::EdgeList => {
            out.push_str(&format!("# n {}\n", g.n()));
            for (u, v) in g.edges() {
                out.push_str(&format!("{u} {v}\n"));
            }
        }
        GraphFormat::DimacsCol => {
            out.push_str(&format!("p edge {} {}\n", g.n(), g.edge_count()));
            for (u, v) in g.edges() {
                out.push_str(&format!("e {} {}\n", u + 1, v + 1));
            }
        }
    }
    out
}

/// Writes `g` to `path`.
pub fn save_graph(
    g: &Graph,
    path: impl AsRef<Path>,
    format: GraphFormat,
) -> Result<(), GraphFileError> {
    let mut file = fs::File::create(path)?;
    file.write_all(format_graph(g, format).as_bytes())?;
    Ok(())
}
