//! Edge-list and coloring text formats, plus DOT export.
//!
//! Edge list: optional header line `n m`, then one `u v` pair per line.
//! Lines starting with `#` and blank lines are ignored. A first line is read
//! as a header when `n` is positive, the remaining lines number exactly `m`
//! and all their ids are below `n`, or when its two numbers are equal (it cannot be an
//! edge then) and more lines follow.
//!
//! Coloring file: `k <k>` followed by `u v c` lines in canonical edge order.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Color, Digraph, EdgeColoring, Graph, GraphError, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed: {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("header declares {declared_n} vertices and {declared_m} edges, body is inconsistent: {detail}")]
    Inconsistent { declared_n: usize, declared_m: usize, detail: String },
    #[error("missing `k <k>` header")]
    MissingK,
    #[error("coloring lists {got} edges, graph has {expected}")]
    ColoringCount { expected: usize, got: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dot,
}

/// An undirected graph or a digraph, as read from text or generated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyGraph {
    Undirected(Graph),
    Directed(Digraph),
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers(line: usize, text: &str, count: usize) -> Result<Vec<usize>, ParseError> {
    let malformed = || ParseError::Malformed { line, text: text.to_string() };
    let nums = text.split_whitespace().map(|t| t.parse::<usize>().map_err(|_| malformed())).collect::<Result<Vec<_>, _>>()?;
    if nums.len() != count {
        return Err(malformed());
    }
    Ok(nums)
}

/// Line number and endpoints of each pair line.
type Pairs = Vec<(usize, Vertex, Vertex)>;

fn parse_pairs(text: &str) -> Result<(usize, Pairs), ParseError> {
    let mut rows = Vec::new();
    for (line, l) in data_lines(text) {
        let nums = numbers(line, l, 2)?;
        rows.push((line, nums[0], nums[1]));
    }
    let Some(&(_, a, b)) = rows.first() else {
        return Ok((0, Vec::new()));
    };
    let body = &rows[1..];
    let fits = a > 0 && body.len() == b && body.iter().all(|&(_, x, y)| x < a && y < a);
    let header = fits || (a == b && !body.is_empty());
    if header {
        if body.len() != b {
            return Err(ParseError::Inconsistent { declared_n: a, declared_m: b, detail: format!("{} edge lines", body.len()) });
        }
        if let Some(&(line, x, y)) = body.iter().find(|&&(_, x, y)| x >= a || y >= a) {
            return Err(ParseError::Inconsistent {
                declared_n: a,
                declared_m: b,
                detail: format!("line {line} uses vertex {}", x.max(y)),
            });
        }
        Ok((a, body.to_vec()))
    } else {
        let n = rows.iter().map(|&(_, x, y)| x.max(y) + 1).max().unwrap_or(0);
        Ok((n, rows))
    }
}

/// Parses the edge-list format into a simple graph.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let (n, rows) = parse_pairs(text)?;
    // incremental so errors carry the offending line
    let mut seen = std::collections::HashSet::new();
    for &(line, a, b) in &rows {
        if a == b {
            return Err(ParseError::Graph { line, source: GraphError::Loop(a) });
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(ParseError::Graph { line, source: GraphError::Duplicate(a.min(b), a.max(b)) });
        }
    }
    Graph::new(n, rows.into_iter().map(|(_, a, b)| (a, b))).map_err(|source| ParseError::Graph { line: 0, source })
}

/// Parses the edge-list format into a simple digraph (`u v` is the arc u→v).
pub fn parse_digraph(text: &str) -> Result<Digraph, ParseError> {
    let (n, rows) = parse_pairs(text)?;
    let mut seen = std::collections::HashSet::new();
    for &(line, a, b) in &rows {
        if a == b {
            return Err(ParseError::Graph { line, source: GraphError::Loop(a) });
        }
        if !seen.insert((a, b)) {
            return Err(ParseError::Graph { line, source: GraphError::Duplicate(a, b) });
        }
    }
    Digraph::new(n, rows.into_iter().map(|(_, a, b)| (a, b))).map_err(|source| ParseError::Graph { line: 0, source })
}

pub fn parse_any(text: &str, directed: bool) -> Result<AnyGraph, ParseError> {
    if directed {
        parse_digraph(text).map(AnyGraph::Directed)
    } else {
        parse_graph(text).map(AnyGraph::Undirected)
    }
}

const PALETTE: [&str; 8] = ["red", "blue", "green", "orange", "purple", "brown", "cyan", "magenta"];

/// Display color for a 1-based color index.
pub fn display_color(c: Color) -> &'static str {
    PALETTE.get(usize::from(c).wrapping_sub(1)).copied().unwrap_or("black")
}

fn emit_pairs(n: usize, pairs: &[(Vertex, Vertex)], coloring: Option<&EdgeColoring>, format: Format, directed: bool) -> String {
    let mut out = String::new();
    match format {
        Format::EdgeList => match coloring {
            None => {
                writeln!(out, "{} {}", n, pairs.len()).unwrap();
                for &(a, b) in pairs {
                    writeln!(out, "{a} {b}").unwrap();
                }
            }
            Some(c) => {
                writeln!(out, "k {}", c.k()).unwrap();
                for (e, &(a, b)) in pairs.iter().enumerate() {
                    writeln!(out, "{a} {b} {}", c.color(e)).unwrap();
                }
            }
        },
        Format::Dot => {
            let (kw, op) = if directed { ("digraph", "->") } else { ("graph", "--") };
            writeln!(out, "{kw} G {{").unwrap();
            for v in 0..n {
                writeln!(out, "  {v};").unwrap();
            }
            for (e, &(a, b)) in pairs.iter().enumerate() {
                match coloring {
                    Some(c) => {
                        let col = c.color(e);
                        writeln!(out, "  {a} {op} {b} [color={}, label=\"{col}\"];", display_color(col)).unwrap();
                    }
                    None => writeln!(out, "  {a} {op} {b};").unwrap(),
                }
            }
            out.push_str("}\n");
        }
    }
    out
}

/// Emits a graph as an edge list (or, with a coloring, as a coloring file)
/// or as DOT with one color attribute per edge.
pub fn emit_graph(g: &Graph, coloring: Option<&EdgeColoring>, format: Format) -> Result<String, GraphError> {
    if let Some(c) = coloring {
        c.check_len(g.m())?;
    }
    Ok(emit_pairs(g.n(), g.edges(), coloring, format, false))
}

pub fn emit_digraph(d: &Digraph, coloring: Option<&EdgeColoring>, format: Format) -> Result<String, GraphError> {
    if let Some(c) = coloring {
        c.check_len(d.m())?;
    }
    Ok(emit_pairs(d.n(), d.arcs(), coloring, format, true))
}

/// Coloring file text for `g`.
pub fn emit_coloring(g: &Graph, c: &EdgeColoring) -> Result<String, GraphError> {
    emit_graph(g, Some(c), Format::EdgeList)
}

fn parse_coloring_pairs(
    text: &str,
    m: usize,
    lookup: impl Fn(Vertex, Vertex) -> Option<usize>,
) -> Result<EdgeColoring, ParseError> {
    let mut lines = data_lines(text);
    let k = match lines.next() {
        Some((line, l)) => {
            let mut parts = l.split_whitespace();
            match (parts.next(), parts.next().map(str::parse::<Color>), parts.next()) {
                (Some("k"), Some(Ok(k)), None) if k > 0 => k,
                _ => return Err(ParseError::Malformed { line, text: l.to_string() }),
            }
        }
        None => return Err(ParseError::MissingK),
    };
    let mut colors = vec![0; m];
    let mut count = 0;
    for (line, l) in lines {
        let nums = numbers(line, l, 3)?;
        let e = lookup(nums[0], nums[1]).ok_or(ParseError::Graph { line, source: GraphError::MissingEdge(nums[0], nums[1]) })?;
        let c = Color::try_from(nums[2]).map_err(|_| ParseError::Malformed { line, text: l.to_string() })?;
        if c == 0 || c > k {
            return Err(ParseError::Graph { line, source: GraphError::ColorOutOfRange { color: c, k } });
        }
        if colors[e] != 0 {
            return Err(ParseError::Graph { line, source: GraphError::Duplicate(nums[0], nums[1]) });
        }
        colors[e] = c;
        count += 1;
    }
    if count != m {
        return Err(ParseError::ColoringCount { expected: m, got: count });
    }
    Ok(EdgeColoring::new(k, colors).expect("colors validated"))
}

/// Parses a coloring file against `g`. Lines may come in any order but must
/// cover every edge exactly once.
pub fn parse_coloring(text: &str, g: &Graph) -> Result<EdgeColoring, ParseError> {
    parse_coloring_pairs(text, g.m(), |a, b| g.edge_id(a, b))
}

/// Same as [`parse_coloring`] with `u v` read as the arc u→v.
pub fn parse_arc_coloring(text: &str, d: &Digraph) -> Result<EdgeColoring, ParseError> {
    parse_coloring_pairs(text, d.m(), |a, b| d.arc_id(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_plain_edge_lists() {
        let p = parse_graph("0 1\n1 2").unwrap();
        assert_eq!((p.n(), p.m()), (3, 2));
        let t = parse_graph("# a triangle\n0 1\n1 2\n2 0\n").unwrap();
        assert_eq!((t.n(), t.m()), (3, 3));
        assert!(t.is_complete());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_graph("0 0"), Err(ParseError::Graph { source: GraphError::Loop(0), .. })));
        assert!(matches!(parse_graph("0 1\n1 0"), Err(ParseError::Graph { source: GraphError::Duplicate(0, 1), .. })));
        assert!(matches!(parse_graph("0 x"), Err(ParseError::Malformed { line: 1, .. })));
        assert!(matches!(parse_graph("0 1 2"), Err(ParseError::Malformed { .. })));
        assert!(matches!(parse_graph("3 3\n0 1\n1 2"), Err(ParseError::Inconsistent { .. })));
    }

    #[test]
    fn header_can_declare_isolated_vertices() {
        let g = parse_graph("5 2\n0 1\n1 2\n").unwrap();
        assert_eq!((g.n(), g.m()), (5, 2));
        let g = parse_graph("1 0\n").unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn emit_triangle() {
        let t = parse_graph("0 1\n1 2\n2 0").unwrap();
        assert_eq!(emit_graph(&t, None, Format::EdgeList).unwrap(), "3 3\n0 1\n0 2\n1 2\n");
        let c = EdgeColoring::uniform(3, 1);
        let dot = emit_graph(&t, Some(&c), Format::Dot).unwrap();
        assert_eq!(dot.matches("label=\"1\"").count(), 3);
        assert!(dot.contains("0 -- 1 [color=red"));
        assert!(emit_graph(&t, Some(&EdgeColoring::uniform(2, 1)), Format::Dot).is_err());
    }

    #[test]
    fn coloring_file_round_trip() {
        let g = parse_graph("0 1\n1 2\n2 3").unwrap();
        let c = EdgeColoring::new(2, vec![1, 2, 1]).unwrap();
        let text = emit_coloring(&g, &c).unwrap();
        assert_eq!(text, "k 2\n0 1 1\n1 2 2\n2 3 1\n");
        assert_eq!(parse_coloring(&text, &g).unwrap(), c);
        assert!(matches!(parse_coloring("k 2\n0 2 1\n", &g), Err(ParseError::Graph { .. })));
        assert!(matches!(parse_coloring("k 2\n0 1 1\n", &g), Err(ParseError::ColoringCount { .. })));
        assert!(matches!(parse_coloring("k 1\n0 1 1\n1 2 2\n2 3 1", &g), Err(ParseError::Graph { .. })));
    }

    #[test]
    fn digraph_round_trip() {
        let d = parse_digraph("0 1\n1 0\n1 2\n2 0").unwrap();
        assert_eq!(d.m(), 4);
        let text = emit_digraph(&d, None, Format::EdgeList).unwrap();
        assert_eq!(parse_digraph(&text).unwrap(), d);
    }
}
