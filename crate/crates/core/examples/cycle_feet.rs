//! Odd cycles with pendant vertices: which need a third color.

use properwalk::construct::{classify_cycle_feet, color_cycle_feet2, FeetClass};
use properwalk::generate::cycle_with_feet;

fn main() {
    for feet in [vec![0, 0, 0, 0, 0], vec![3, 1, 0, 0, 1], vec![1, 0, 1, 0, 1], vec![0, 2, 0, 0, 0]] {
        let g = cycle_with_feet(5, &feet).unwrap();
        match classify_cycle_feet(&g).classification {
            FeetClass::Pw2 { u, v, w } => {
                let r = color_cycle_feet2(&g, (u, v, w)).unwrap();
                println!("{feet:?}: stretch {u} {v} {w}, {}", r.summary());
            }
            FeetClass::Pw3 { reason } => println!("{feet:?}: three colors, {reason}"),
            other => println!("{feet:?}: {other:?}"),
        }
    }
}
