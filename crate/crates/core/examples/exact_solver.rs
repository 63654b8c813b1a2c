//! Exhaustive search over canonical colorings for small graphs.

use properwalk::exact::{exact_pp, exact_pw, Budget, ExactError};
use properwalk::generate::{cycle_with_feet, petersen, star};

fn main() {
    let cases =
        [("star 4", star(4)), ("petersen", petersen()), ("C5 feet [1,0,1,0,1]", cycle_with_feet(5, &[1, 0, 1, 0, 1]).unwrap())];
    for (name, g) in cases {
        let pw = exact_pw(&g, 4, Budget::default()).unwrap();
        println!("{name}: pW = {} after {} colorings {:?}", pw.k, pw.explored, pw.explored_per_k);
        match exact_pp(&g, 4, Budget::default()) {
            Ok(pp) => println!("  pP = {}", pp.k),
            Err(e @ (ExactError::Budget { .. } | ExactError::TooManyVertices { .. })) => println!("  pP skipped: {e}"),
            Err(e) => panic!("{e}"),
        }
    }
}
