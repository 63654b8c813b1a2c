//! Two edge-disjoint odd cycles joined by a path, with pendant trees.

use properwalk::construct::{color_two_odd_cycles2, TwoOddLayout};
use properwalk::decompose::disjoint_odd_cycles;
use properwalk::io::emit_coloring;
use properwalk::Graph;

fn main() {
    let g = Graph::new(10, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 4), (0, 9)]).unwrap();
    let pair = disjoint_odd_cycles(&g).unwrap();
    println!("c1 {:?} c2 {:?} connector {:?}", pair.c1, pair.c2, pair.connector);
    let r = color_two_odd_cycles2(&g, &TwoOddLayout::new(&g, pair).unwrap()).unwrap();
    print!("{}", emit_coloring(&g, &r.coloring).unwrap());
    println!("# {}", r.summary());
}
