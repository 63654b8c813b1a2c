//! Checks colorings of a square for properly colored walks and prints a
//! witness walk.

use properwalk::verify::{verify_all_pairs, walk_reachable, PairCheck};
use properwalk::{EdgeColoring, Graph};

fn main() {
    let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();

    let flat = EdgeColoring::uniform(g.m(), 1);
    match verify_all_pairs(&g, &flat).unwrap() {
        PairCheck::Pass => println!("one color: PASS"),
        PairCheck::Fail { u, v } => println!("one color: FAIL {u} {v}"),
    }

    // edges in canonical order: 0-1, 0-3, 1-2, 2-3
    let alternating = EdgeColoring::new(2, vec![1, 2, 2, 1]).unwrap();
    println!("alternating: {:?}", verify_all_pairs(&g, &alternating).unwrap());
    let walk = walk_reachable(&g, &alternating, 0, 2, None, None).unwrap().unwrap();
    let colors: Vec<_> = walk.edges.iter().map(|&e| alternating.color(e)).collect();
    println!("walk 0 -> 2: {:?} colors {colors:?}", walk.vertices(&g).unwrap());
}
