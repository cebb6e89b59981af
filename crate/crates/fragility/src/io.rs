//! Edge-list text format.
//!
//! One edge per line as two whitespace-separated node ids; lines starting
//! with `#` are comments. The node count is inferred as `max id + 1` unless
//! an explicit `# n=<int>` header is present (which also preserves trailing
//! isolated nodes).

use std::io::{BufRead, Write};

use crate::{Error, Graph, Result};

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut explicit_n: Option<usize> = None;
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(value) = comment.strip_prefix("n=") {
                let n = value.trim().parse::<usize>().map_err(|_| {
                    Error::Parse(format!("line {}: bad n header {comment:?}", lineno + 1))
                })?;
                explicit_n = Some(n);
            }
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (u, v) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(Error::Parse(format!(
                    "line {}: expected two node ids, got {line:?}",
                    lineno + 1
                )))
            }
        };
        let parse = |tok: &str| {
            tok.parse::<usize>()
                .map_err(|_| Error::Parse(format!("line {}: bad node id {tok:?}", lineno + 1)))
        };
        pairs.push((parse(u)?, parse(v)?));
    }
    let inferred = pairs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match explicit_n {
        Some(n) if n < inferred => {
            return Err(Error::Parse(format!(
                "header n={n} smaller than max node id {}",
                inferred - 1
            )))
        }
        Some(n) => n,
        None => inferred,
    };
    Graph::build(n, &pairs)
}

pub fn read_edge_list_path(path: &std::path::Path) -> Result<Graph> {
    let file = std::fs::File::open(path)?;
    read_edge_list(std::io::BufReader::new(file))
}

/// Writes the graph with an `# n=` header, optionally preceded by extra
/// comment lines (e.g. a run manifest).
pub fn write_edge_list<W: Write>(mut w: W, graph: &Graph, comments: &[String]) -> Result<()> {
    for c in comments {
        writeln!(w, "# {c}")?;
    }
    writeln!(w, "# n={}", graph.node_count())?;
    for &(u, v) in graph.edges() {
        writeln!(w, "{u} {v}")?;
    }
    Ok(())
}
