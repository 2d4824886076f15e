//! Edge-list and membership files.
//!
//! Edge lists follow the SNAP convention: one edge per line as two
//! whitespace-separated ids, `#` starts a comment line, extra columns
//! (timestamps, weights) are ignored. Edges are read as undirected;
//! repeated and reversed pairs collapse, self-loops are dropped and counted.
//!
//! Ids are remapped to `0..n` in order of first appearance, except when the
//! file carries a `# nodes: N` header and every id is an integer below `N`.
//! Then ids are kept as-is and vertices that never appear in an edge stay
//! in the graph as isolated vertices. [`write_edge_list`] always emits that
//! header, so generated graphs round-trip exactly.

use std::collections::HashMap;
use std::io::{BufRead, Write};
use std::path::Path;

use netentropy_core::Graph;

use crate::Error;

/// A parsed edge list with its id table.
#[derive(Debug, Clone)]
pub struct EdgeList {
    pub graph: Graph,
    /// Original id of each dense vertex.
    pub ids: Vec<String>,
    pub self_loops_dropped: usize,
    /// Edge lines that repeated an existing undirected edge.
    pub duplicates_merged: usize,
}

impl EdgeList {
    pub fn index_of(&self) -> HashMap<&str, usize> {
        self.ids
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect()
    }
}

fn nodes_header(line: &str) -> Option<usize> {
    let rest = line.trim_start_matches('#').trim();
    let value = rest.strip_prefix("nodes:")?;
    value.trim().parse().ok()
}

pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<EdgeList, Error> {
    let mut declared_nodes = None;
    let mut pairs: Vec<(String, String)> = Vec::new();
    for (index, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed.starts_with('#') {
            if let Some(n) = nodes_header(trimmed) {
                declared_nodes = Some(n);
            }
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        match (tokens.next(), tokens.next()) {
            (Some(a), Some(b)) => pairs.push((a.to_owned(), b.to_owned())),
            _ => {
                return Err(Error::Parse {
                    line: index + 1,
                    message: format!("expected two vertex ids, found `{trimmed}`"),
                })
            }
        }
    }

    let identity = declared_nodes.filter(|&n| {
        pairs.iter().all(|(a, b)| {
            [a, b]
                .iter()
                .all(|t| t.parse::<usize>().map(|v| v < n).unwrap_or(false))
        })
    });

    let (ids, edges) = match identity {
        Some(n) => {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .map(|(a, b)| (a.parse().unwrap(), b.parse().unwrap()))
                .collect();
            ((0..n).map(|v| v.to_string()).collect(), edges)
        }
        None => {
            let mut index: HashMap<String, usize> = HashMap::new();
            let mut ids = Vec::new();
            let mut dense = |token: &String| {
                *index.entry(token.clone()).or_insert_with(|| {
                    ids.push(token.clone());
                    ids.len() - 1
                })
            };
            let edges: Vec<(usize, usize)> =
                pairs.iter().map(|(a, b)| (dense(a), dense(b))).collect();
            (ids, edges)
        }
    };

    let self_loops_dropped = edges.iter().filter(|(u, v)| u == v).count();
    let kept = edges.iter().copied().filter(|(u, v)| u != v);
    let graph = Graph::new(ids.len(), kept)?;
    let duplicates_merged = edges.len() - self_loops_dropped - graph.edge_count();
    Ok(EdgeList {
        graph,
        ids,
        self_loops_dropped,
        duplicates_merged,
    })
}

pub fn read_edge_list(path: &Path) -> Result<EdgeList, Error> {
    let file = std::fs::File::open(path).map_err(|e| Error::io_at(path, e))?;
    parse_edge_list(std::io::BufReader::new(file))
}

/// Writes `# nodes: N` followed by one `u v` line per edge, `u < v`, in
/// lexicographic order.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> std::io::Result<()> {
    writeln!(out, "# nodes: {}", g.n())?;
    writeln!(out, "# edges: {}", g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    out.flush()
}

/// `(node id, group id)` pairs in file order.
pub fn parse_membership<R: BufRead>(reader: R) -> Result<Vec<(String, String)>, Error> {
    let mut seen = HashMap::new();
    let mut rows = Vec::new();
    for (index, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let (Some(node), Some(group)) = (tokens.next(), tokens.next()) else {
            return Err(Error::Parse {
                line: index + 1,
                message: format!("expected `node group`, found `{trimmed}`"),
            });
        };
        if let Some(first) = seen.insert(node.to_owned(), index + 1) {
            return Err(Error::Parse {
                line: index + 1,
                message: format!("node `{node}` already assigned on line {first}"),
            });
        }
        rows.push((node.to_owned(), group.to_owned()));
    }
    Ok(rows)
}

pub fn read_membership(path: &Path) -> Result<Vec<(String, String)>, Error> {
    let file = std::fs::File::open(path).map_err(|e| Error::io_at(path, e))?;
    parse_membership(std::io::BufReader::new(file))
}
