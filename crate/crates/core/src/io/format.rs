use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::Error;
use crate::trigraph::{Adjacency, Graph, Trigraph, Weight};

/// Input file formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Tri,
    Dimacs,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "tri" => Ok(Format::Tri),
            "dimacs" | "col" => Ok(Format::Dimacs),
            _ => Err(format!("unknown format `{s}`")),
        }
    }
}

impl Format {
    /// Guess from a file name; anything that is not `.dimacs`/`.col` is `tri`.
    pub fn from_path(path: &str) -> Format {
        if path.ends_with(".dimacs") || path.ends_with(".col") {
            Format::Dimacs
        } else {
            Format::Tri
        }
    }
}

pub fn parse(text: &str, format: Format) -> Result<Trigraph, Error> {
    match format {
        Format::Tri => parse_tri(text),
        Format::Dimacs => parse_dimacs(text).map(|g| Trigraph::from_graph(&g)),
    }
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn number<T: FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T, Error> {
    let tok = tok.ok_or_else(|| err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| err(line, format!("invalid {what} `{tok}`")))
}

fn vertex(tok: Option<&str>, line: usize, n: usize) -> Result<usize, Error> {
    let v: usize = number(tok, line, "vertex")?;
    if v == 0 || v > n {
        return Err(err(line, format!("vertex {v} out of range 1..={n}")));
    }
    Ok(v - 1)
}

fn no_trailing<'a>(mut toks: impl Iterator<Item = &'a str>, line: usize) -> Result<(), Error> {
    match toks.next() {
        Some(t) => Err(err(line, format!("unexpected token `{t}`"))),
        None => Ok(()),
    }
}

/// Significant lines: `(1-based line number, tokens)`, comments and blanks dropped.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks.first() {
            None | Some(&"c") => None,
            _ => Some((i + 1, toks)),
        }
    })
}

fn header(toks: &[&str], line: usize, kind: &str) -> Result<usize, Error> {
    if toks.get(1) != Some(&kind) {
        return Err(err(line, format!("expected `p {kind} ...`")));
    }
    let n: usize = number(toks.get(2).copied(), line, "vertex count")?;
    if n > crate::trigraph::MAX_VERTICES {
        return Err(err(line, format!("{n} vertices exceeds the cap of {}", crate::trigraph::MAX_VERTICES)));
    }
    Ok(n)
}

/// Parses the `p tri` format. Vertices are 1-indexed; unlisted pairs are
/// strong antiedges and unlisted weights are 1.
pub fn parse_tri(text: &str) -> Result<Trigraph, Error> {
    let mut t: Option<Trigraph> = None;
    let mut seen_weight = Vec::new();
    let mut seen_pair = std::collections::HashSet::new();
    for (line, toks) in lines(text) {
        if toks[0] == "p" {
            if t.is_some() {
                return Err(err(line, "duplicate header"));
            }
            let n = header(&toks, line, "tri")?;
            no_trailing(toks[3..].iter().copied(), line)?;
            t = Some(Trigraph::new(n));
            seen_weight = vec![false; n];
            continue;
        }
        let t = t.as_mut().ok_or_else(|| err(line, "line before the `p tri` header"))?;
        let n = t.vertex_count();
        let mut it = toks[1..].iter().copied();
        match toks[0] {
            "w" => {
                let v = vertex(it.next(), line, n)?;
                let w: Weight = number(it.next(), line, "weight")?;
                no_trailing(it, line)?;
                if std::mem::replace(&mut seen_weight[v], true) {
                    return Err(err(line, format!("duplicate weight for vertex {}", v + 1)));
                }
                t.set_weight(v, w);
            }
            kind @ ("e" | "s") => {
                let u = vertex(it.next(), line, n)?;
                let v = vertex(it.next(), line, n)?;
                no_trailing(it, line)?;
                if u == v {
                    return Err(err(line, "loop"));
                }
                if !seen_pair.insert((u.min(v), u.max(v))) {
                    return Err(err(line, format!("duplicate pair {} {}", u + 1, v + 1)));
                }
                t.set(u, v, if kind == "e" { Adjacency::StrongEdge } else { Adjacency::Switchable });
            }
            other => return Err(err(line, format!("unknown line type `{other}`"))),
        }
    }
    t.ok_or_else(|| err(0, "missing `p tri` header"))
}

/// Canonical `p tri` text: header, non-unit weights, strong edges, then
/// switchable pairs, each in increasing order.
pub fn emit_tri(t: &Trigraph) -> String {
    let mut out = format!("p tri {}\n", t.vertex_count());
    for v in t.vertices().filter(|&v| t.weight(v) != 1) {
        writeln!(out, "w {} {}", v + 1, t.weight(v)).unwrap();
    }
    for (u, v) in t.strong_edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    for (u, v) in t.switchable_pairs() {
        writeln!(out, "s {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Parses DIMACS `p edge n m`. Repeated edges are merged, as many
/// published instances list both orientations.
pub fn parse_dimacs(text: &str) -> Result<Graph, Error> {
    let mut g: Option<Graph> = None;
    for (line, toks) in lines(text) {
        match toks[0] {
            "p" => {
                if g.is_some() {
                    return Err(err(line, "duplicate header"));
                }
                let kind = if toks.get(1) == Some(&"col") { "col" } else { "edge" };
                let n = header(&toks, line, kind)?;
                let _m: usize = number(toks.get(3).copied(), line, "edge count")?;
                no_trailing(toks[4..].iter().copied(), line)?;
                g = Some(Graph::new(n));
            }
            "e" => {
                let g = g.as_mut().ok_or_else(|| err(line, "edge before the `p edge` header"))?;
                let n = g.vertex_count();
                let mut it = toks[1..].iter().copied();
                let u = vertex(it.next(), line, n)?;
                let v = vertex(it.next(), line, n)?;
                no_trailing(it, line)?;
                if u == v {
                    return Err(err(line, "loop"));
                }
                g.add_edge(u, v);
            }
            other => return Err(err(line, format!("unknown line type `{other}`"))),
        }
    }
    g.ok_or_else(|| err(0, "missing `p edge` header"))
}

pub fn emit_dimacs(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("p edge {} {}\n", g.vertex_count(), edges.len());
    for (u, v) in edges {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trigraph::cycle;

    #[test]
    fn single_switchable_pair() {
        let t = parse_tri("p tri 2\ns 1 2\n").unwrap();
        assert!(t.is_switchable(0, 1));
        assert_eq!(t.weights(), &[1, 1]);
    }

    #[test]
    fn dimacs_triangle() {
        let g = parse_dimacs("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        let t = Trigraph::from_graph(&g);
        assert!(t.is_strong_clique(&t.all_vertices()));
    }

    #[test]
    fn round_trip_normalizes() {
        let text = "c sample\np tri 4\ns 4 3\ne 2 1\nw 2 7\nw 1 1\n\ne 3 2\n";
        let t = parse_tri(text).unwrap();
        let out = emit_tri(&t);
        assert_eq!(out, "p tri 4\nw 2 7\ne 1 2\ne 2 3\ns 3 4\n");
        assert_eq!(parse_tri(&out).unwrap(), t);
        let c8 = cycle(8);
        assert_eq!(parse_tri(&emit_tri(&c8)).unwrap(), c8);
        let g = c8.full_realization();
        assert_eq!(parse_dimacs(&emit_dimacs(&g)).unwrap(), g);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let line = |text: &str| match parse_tri(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(line("p tri 3\ne 1 4\n"), 2);
        assert_eq!(line("p tri 3\ne 1 2\ns 2 1\n"), 3);
        assert_eq!(line("c x\np tri 3\nw 1 2\nw 1 3\n"), 4);
        assert_eq!(line("e 1 2\n"), 1);
        assert_eq!(line("p tri 3\nx 1\n"), 2);
        assert_eq!(line("p tri 3\ne 1 1\n"), 2);
        assert_eq!(line("p tri 3\nw 1 -2\n"), 2);
        assert_eq!(line(""), 0);
        assert!(matches!(parse_dimacs("p edge 2 1\ne 1 3\n"), Err(Error::Parse { line: 2, .. })));
    }
}
