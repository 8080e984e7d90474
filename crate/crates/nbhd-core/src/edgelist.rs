//! Edge-list text format, the CLI's canonical graph input: a header line
//! `n m`, then m lines `u v` with 0-based indices. `#` starts a comment;
//! blank lines are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    });

    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("missing 'n m' header line".into()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parse_field(parts.next(), "n", lineno)?;
    let m: usize = parse_field(parts.next(), "m", lineno)?;
    if parts.next().is_some() {
        return Err(Error::Parse(format!(
            "line {lineno}: expected exactly 'n m' in the header"
        )));
    }

    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let mut parts = line.split_whitespace();
        let u: usize = parse_field(parts.next(), "u", lineno)?;
        let v: usize = parse_field(parts.next(), "v", lineno)?;
        if parts.next().is_some() {
            return Err(Error::Parse(format!(
                "line {lineno}: expected exactly 'u v'"
            )));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header declares {m} edges but {} were listed",
            edges.len()
        )));
    }
    Graph::from_edge_list(n, &edges)
}

fn parse_field(field: Option<&str>, name: &str, lineno: usize) -> Result<usize> {
    field
        .ok_or_else(|| Error::Parse(format!("line {lineno}: missing field '{name}'")))?
        .parse()
        .map_err(|_| Error::Parse(format!("line {lineno}: field '{name}' is not a number")))
}

/// Inverse of `parse_edge_list`: edges in lexicographic (min, max) order.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_blanks() {
        let text = "# a 4-cycle\n4 4\n0 1\n1 2   # inline note\n\n2 3\n3 0\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 4);
        assert!(g.has_edge(3, 0));
    }

    #[test]
    fn round_trips() {
        let g = parse_edge_list("5 4\n0 1\n1 2\n2 3\n3 4\n").unwrap();
        let text = format_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert_eq!(text, "5 4\n0 1\n1 2\n2 3\n3 4\n");
    }

    #[test]
    fn error_cases() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("# only comments\n").is_err());
        assert!(parse_edge_list("3 1\n").is_err()); // fewer edges than declared
        assert!(parse_edge_list("3 0\n0 1\n").is_err()); // more edges than declared
        assert!(parse_edge_list("3 x\n").is_err());
        assert!(parse_edge_list("3 1\n0 1 2\n").is_err());
        assert!(parse_edge_list("2 1\n0 0\n").is_err()); // self-loop via Graph
        assert!(parse_edge_list("2 1\n0 9\n").is_err()); // endpoint range via Graph
    }

    #[test]
    fn order_zero_graph_is_permitted() {
        let g = parse_edge_list("0 0\n").unwrap();
        assert_eq!(g.n(), 0);
        assert_eq!(format_edge_list(&g), "0 0\n");
    }
}
