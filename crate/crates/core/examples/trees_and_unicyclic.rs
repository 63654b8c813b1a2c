//! A tree needs as many colors as its maximum degree; adding one edge
//! brings any graph down to at most three.

use properwalk::construct::{color_tree, color_unicyclic3};
use properwalk::Graph;

fn main() {
    let spider = Graph::new(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap();
    let r = color_tree(&spider).unwrap();
    println!("spider: {} colors {:?}", r.summary(), r.coloring.colors());

    let closed = Graph::new(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6), (4, 5)]).unwrap();
    let r = color_unicyclic3(&closed).unwrap();
    println!("with a cycle: {} colors {:?}", r.summary(), r.coloring.colors());
}
