use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Digraph;
use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    /// One `u v` line per arc, lexicographically sorted.
    EdgeList,
    Dot,
    /// `{"n": .., "edges": [[u, v], ...]}`
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-list" | "edgelist" | "edges" => Ok(Self::EdgeList),
            "dot" => Ok(Self::Dot),
            "json" => Ok(Self::Json),
            other => invalid(format!("unknown graph format '{other}'")),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

/// Serializes `g`. Output is byte-identical for equal graphs.
pub fn export(g: &Digraph, format: ExportFormat) -> String {
    let mut out = String::new();
    match format {
        ExportFormat::EdgeList => {
            for (u, v) in g.arcs() {
                let _ = writeln!(out, "{u} {v}");
            }
        }
        ExportFormat::Dot => {
            out.push_str("digraph G {\n");
            for v in 0..g.order() {
                let _ = writeln!(out, "  {v};");
            }
            for (u, v) in g.arcs() {
                let _ = writeln!(out, "  {u} -> {v};");
            }
            out.push_str("}\n");
        }
        ExportFormat::Json => {
            let j = JsonGraph {
                n: g.order(),
                edges: g.arcs().map(|(u, v)| [u, v]).collect(),
            };
            out = serde_json::to_string(&j).expect("plain data serializes");
            out.push('\n');
        }
    }
    out
}

/// Reads a graph in JSON form or as an edge list.
///
/// An edge list may start with a header line `digraph N` or `graph N`; with
/// `graph` every edge is added in both directions. Without a header the input
/// is read as a digraph on `max vertex + 1` vertices. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_graph(text: &str) -> Result<Digraph> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let j: JsonGraph =
            serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?;
        return Digraph::from_arcs(j.n, j.edges.iter().map(|e| (e[0], e[1])))
            .map_err(|e| Error::Parse(e.to_string()));
    }

    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .peekable();

    let mut header = None;
    if let Some(&(lineno, first)) = lines.peek() {
        let mut parts = first.split_whitespace();
        let kind = parts.next();
        if matches!(kind, Some("digraph") | Some("graph")) {
            let n = parts
                .next()
                .and_then(|x| x.parse::<usize>().ok())
                .filter(|_| parts.next().is_none())
                .ok_or_else(|| Error::Parse(format!("line {lineno}: bad header '{first}'")))?;
            header = Some((kind == Some("graph"), n));
            lines.next();
        }
    }

    let mut pairs = Vec::new();
    for (lineno, line) in lines {
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|x| x.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse(format!("line {lineno}: expected 'u v', got '{line}'")))?;
        match nums.as_slice() {
            &[u, v] => pairs.push((u, v)),
            _ => {
                return Err(Error::Parse(format!(
                    "line {lineno}: expected 'u v', got '{line}'"
                )))
            }
        }
    }

    let (symmetric, n) = match header {
        Some(h) => h,
        None => (
            false,
            pairs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0),
        ),
    };
    let built = if symmetric {
        Digraph::from_edges(n, pairs)
    } else {
        Digraph::from_arcs(n, pairs)
    };
    built.map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{cycle, directed_cycle, petersen};

    #[test]
    fn edge_list_of_three_cycle() {
        let g = directed_cycle(3).unwrap();
        assert_eq!(export(&g, ExportFormat::EdgeList), "0 1\n1 2\n2 0\n");
    }

    #[test]
    fn symmetric_three_cycle_has_six_lines() {
        let g = cycle(3).unwrap();
        assert_eq!(export(&g, ExportFormat::EdgeList).lines().count(), 6);
    }

    #[test]
    fn dot_output() {
        let g = directed_cycle(3).unwrap();
        let dot = export(&g, ExportFormat::Dot);
        assert!(dot.starts_with("digraph G {"));
        assert_eq!(dot.matches(" -> ").count(), 3);
        assert!(dot.contains("  2 -> 0;"));
    }

    #[test]
    fn json_round_trip() {
        let g = petersen();
        let text = export(&g, ExportFormat::Json);
        assert!(text.starts_with("{\"n\":10,\"edges\":[[0,"));
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_with_headers() {
        let g = parse_graph("graph 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
        assert_eq!(g.arc_count(), 8);
        let d = parse_graph("# comment\ndigraph 5\n0 1\n").unwrap();
        assert_eq!(d.order(), 5);
        assert_eq!(d.arc_count(), 1);
        let bare = parse_graph("0 1\n1 2\n2 0\n").unwrap();
        assert_eq!(bare, directed_cycle(3).unwrap());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_graph("graph x\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_graph("0 1 2\n"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_graph("digraph 2\n0 5\n"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(parse_graph("1 1\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_graph("{\"n\": 2}"), Err(Error::Parse(_))));
        assert!("png".parse::<ExportFormat>().is_err());
    }
}
