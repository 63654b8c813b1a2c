//! Theta reduction on 2-connected nonbipartite graphs, ending in a two-coloring.

use properwalk::construct::{color_theta_block2, reduce_theta, ThetaReduction};
use properwalk::generate::{petersen, theta};
use properwalk::Graph;

fn show(name: &str, g: &Graph) {
    match reduce_theta(g).unwrap() {
        ThetaReduction::Theta(t) => println!("{name}: outer {:?}, inverter {:?}", t.outer, t.inverter),
        ThetaReduction::TwoOdd(l) => println!("{name}: two odd cycles {:?} {:?}", l.c1, l.c2),
    }
    let r = color_theta_block2(g).unwrap();
    println!("  {} colors {:?}", r.summary(), r.coloring.colors());
}

fn main() {
    show("theta(2, 4, 3)", &theta(2, 4, 3).unwrap());
    show("petersen", &petersen());
}
