//! The automatic coloring on a handful of graphs, with the route it took.

use properwalk::construct::pw_auto;
use properwalk::generate::{complete, cycle, cycle_with_feet, petersen, random_connected, star, two_triangles_shared_vertex};

fn main() {
    let graphs = [
        ("K5", complete(5)),
        ("star 3", star(3)),
        ("C6", cycle(6).unwrap()),
        ("C5", cycle(5).unwrap()),
        ("bowtie", two_triangles_shared_vertex()),
        ("petersen", petersen()),
        ("C5 with feet", cycle_with_feet(5, &[1, 0, 1, 0, 1]).unwrap()),
        ("random 30", random_connected(30, 0.08, 3).unwrap()),
    ];
    for (name, g) in graphs {
        println!("{name:>14}: {}", pw_auto(&g).unwrap().summary());
    }
}
