//! DIMACS-style graph files and per-vertex weight files.
//!
//! ```text
//! c a 4-cycle
//! p edge 4 4
//! e 1 2
//! e 2 3
//! e 3 4
//! e 4 1
//! ```
//!
//! Vertex ids in files are 1-based; in memory they are 0-based.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{format_rational, parse_rational, Rational};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn field<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| parse_err(line, format!("bad {what} `{tok}`")))
}

/// Parse a graph. Duplicate edges are merged; the header edge count is
/// checked against the number of `e` lines.
pub fn read_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut e_lines = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line, "second problem line"));
                }
                let kind: String = field(toks.next(), line, "format")?;
                if kind != "edge" && kind != "col" {
                    return Err(parse_err(line, format!("unknown format `{kind}`")));
                }
                let n = field(toks.next(), line, "vertex count")?;
                let m = field(toks.next(), line, "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| parse_err(line, "edge before problem line"))?;
                let u: usize = field(toks.next(), line, "endpoint")?;
                let v: usize = field(toks.next(), line, "endpoint")?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(parse_err(line, format!("vertex {x} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(parse_err(line, format!("self-loop at {u}")));
                }
                edges.push((u - 1, v - 1));
                e_lines += 1;
            }
            Some(t) => return Err(parse_err(line, format!("unknown line type `{t}`"))),
        }
        if toks.next().is_some() {
            return Err(parse_err(line, "trailing tokens"));
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "no problem line"))?;
    if e_lines != m {
        return Err(parse_err(0, format!("header announces {m} edges, found {e_lines}")));
    }
    Graph::from_edges(n, &edges)
}

/// Render a graph with sorted edges; `comment` lines go first.
pub fn write_dimacs(g: &Graph, comment: &[&str]) -> String {
    let mut s = String::new();
    for c in comment {
        let _ = writeln!(s, "c {c}");
    }
    let edges = g.edges();
    let _ = writeln!(s, "p edge {} {}", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(s, "e {} {}", u + 1, v + 1);
    }
    s
}

/// One rational per non-blank line, in vertex order. `#` starts a comment.
pub fn read_weights(text: &str, n: usize) -> Result<Vec<Rational>> {
    let mut w = Vec::with_capacity(n);
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let x = parse_rational(body).map_err(|_| parse_err(i + 1, format!("bad weight `{body}`")))?;
        w.push(x);
    }
    if w.len() != n {
        return Err(parse_err(0, format!("{} weights for {n} vertices", w.len())));
    }
    Ok(w)
}

pub fn write_weights(w: &[Rational]) -> String {
    w.iter().map(|x| format_rational(x) + "\n").collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = Graph::cycle(5);
        let text = write_dimacs(&g, &["five"]);
        assert!(text.starts_with("c five\np edge 5 5\n"));
        let h = read_dimacs(&text).unwrap();
        assert_eq!(h.edges(), g.edges());
    }

    #[test]
    fn errors_carry_lines() {
        let bad = "c x\np edge 3 1\ne 1 4\n";
        match read_dimacs(bad) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(read_dimacs("e 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(read_dimacs("p edge 2 1\ne 1 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(read_dimacs("p edge 2 2\ne 1 2\n").is_err());
    }

    #[test]
    fn weights() {
        let w = read_weights("1\n\n-3/2 # note\n0.5\n", 3).unwrap();
        assert_eq!(w, vec![Rational::from_integer(1), Rational::new(-3, 2), Rational::new(1, 2)]);
        assert!(matches!(read_weights("1\nx\n", 2), Err(Error::Parse { line: 2, .. })));
        assert_eq!(read_weights(&write_weights(&w), 3).unwrap(), w);
    }
}
