//! Directed walks versus directed paths on a cycle and on the bowtie.

use properwalk::exact::{exact_directed, Budget, Mode};
use properwalk::generate::{bowtie_digraph, directed_cycle};

fn main() {
    for (name, d) in [("directed C5", directed_cycle(5).unwrap()), ("bowtie", bowtie_digraph())] {
        let walk = exact_directed(&d, Mode::Walk, 4, Budget::default()).unwrap();
        let path = exact_directed(&d, Mode::Path, 4, Budget::default()).unwrap();
        println!("{name}: walks need {}, paths need {}", walk.k, path.k);
        println!("  walk witness {:?}", walk.witness.colors());
    }
}
