//! Two colors for a bipartite graph exactly when every bridgeless piece meets
//! at most two bridges.

use properwalk::construct::{color_bipartite2, BipartiteOutcome};
use properwalk::decompose::bridgeless_core;
use properwalk::Graph;

fn report(name: &str, g: &Graph) {
    let core = bridgeless_core(g).unwrap();
    println!("{name}: {} bridges, condition {}", core.bridges.len(), core.satisfies_bridge_condition());
    match color_bipartite2(g).unwrap() {
        BipartiteOutcome::Colored(r) => println!("  {} colors {:?}", r.summary(), r.coloring.colors()),
        BipartiteOutcome::Violation { component, incident_bridges } => {
            println!("  component {component:?} meets {incident_bridges} bridges, three colors needed")
        }
    }
}

fn main() {
    // square with a pendant path on each side
    let ok = Graph::new(8, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (2, 6), (6, 7)]).unwrap();
    report("square with two tails", &ok);
    let bad = Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5), (2, 6)]).unwrap();
    report("square with three tails", &bad);
}
