//! Every bridgeless graph that is not complete has a two-coloring.

use properwalk::construct::color_bridgeless2;
use properwalk::decompose::is_bridgeless;
use properwalk::generate::random_connected;

fn main() {
    let mut shown = 0;
    for seed in 0.. {
        let g = random_connected(9, 0.4, seed).unwrap();
        if !is_bridgeless(&g) || g.is_complete() {
            continue;
        }
        let r = color_bridgeless2(&g).unwrap();
        println!("seed {seed}: n {} m {} -> {}", g.n(), g.m(), r.summary());
        shown += 1;
        if shown == 5 {
            break;
        }
    }
}
