//! Generates a graph, colors it and writes DOT for rendering with graphviz.

use properwalk::construct::pw_auto;
use properwalk::generate::{generate, Family};
use properwalk::io::{emit_graph, AnyGraph, Format};

fn main() {
    let family = Family::Theta { a: 3, b: 3, p: 2 };
    let AnyGraph::Undirected(g) = generate(&family).unwrap() else { unreachable!() };
    print!("{}", emit_graph(&g, None, Format::EdgeList).unwrap());
    let r = pw_auto(&g).unwrap();
    print!("{}", emit_graph(&g, Some(&r.coloring), Format::Dot).unwrap());
}
