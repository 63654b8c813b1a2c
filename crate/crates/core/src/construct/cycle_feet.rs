use super::{certify, cycle_edges, ConstructError, BLUE, RED};
use crate::graph::{Color, ColoringResult, Graph, Route, Status, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FeetClass {
    NotMember,
    /// A bare triangle.
    Complete,
    /// Consecutive cycle vertices `u v w` such that `u` and `w` carry at
    /// most one foot each and no other vertex but `v` carries any.
    Pw2 {
        u: Vertex,
        v: Vertex,
        w: Vertex,
    },
    Pw3 {
        reason: String,
    },
}

/// An odd cycle with pendant vertices ("feet") attached to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleFeetShape {
    /// Starts at the lowest cycle vertex, then its lower cycle neighbor.
    pub cycle: Vec<Vertex>,
    /// Feet count per cycle position.
    pub feet: Vec<usize>,
    pub classification: FeetClass,
}

impl CycleFeetShape {
    fn not_member() -> Self {
        Self { cycle: Vec::new(), feet: Vec::new(), classification: FeetClass::NotMember }
    }
}

fn odd_cycle_core(g: &Graph) -> Option<Vec<Vertex>> {
    if g.n() < 3 || g.m() != g.n() || !g.is_connected() {
        return None;
    }
    let core: Vec<Vertex> = (0..g.n()).filter(|&v| g.degree(v) > 1).collect();
    let in_core = |v: Vertex| g.degree(v) > 1;
    if core.len() < 3 || core.len().is_multiple_of(2) {
        return None;
    }
    if core.iter().any(|&v| g.neighbors(v).iter().filter(|&&(w, _)| in_core(w)).count() != 2) {
        return None;
    }
    if (0..g.n()).any(|v| !in_core(v) && !in_core(g.neighbors(v)[0].0)) {
        return None;
    }
    let start = core[0];
    let mut cycle = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g.neighbors(cur).iter().map(|&(w, _)| w).filter(|&w| in_core(w) && w != prev).min()?;
        if next == start {
            break;
        }
        prev = cur;
        cur = next;
        cycle.push(cur);
    }
    (cycle.len() == core.len()).then_some(cycle)
}

/// Decides whether `g` is an odd cycle with feet and, if so, whether two
/// colors suffice.
pub fn classify_cycle_feet(g: &Graph) -> CycleFeetShape {
    let Some(cycle) = odd_cycle_core(g) else {
        return CycleFeetShape::not_member();
    };
    let len = cycle.len();
    let feet: Vec<usize> = cycle.iter().map(|&v| g.degree(v) - 2).collect();
    let witness = (0..len).find(|&i| {
        let (iu, iw) = ((i + len - 1) % len, (i + 1) % len);
        feet[iu] <= 1 && feet[iw] <= 1 && (0..len).all(|j| j == iu || j == i || j == iw || feet[j] == 0)
    });
    let classification = match witness {
        _ if g.is_complete() => FeetClass::Complete,
        Some(i) => FeetClass::Pw2 { u: cycle[(i + len - 1) % len], v: cycle[i], w: cycle[(i + 1) % len] },
        None => {
            let carriers: Vec<String> = (0..len).filter(|&j| feet[j] > 0).map(|j| cycle[j].to_string()).collect();
            FeetClass::Pw3 {
                reason: format!(
                    "feet at cycle vertices [{}] do not fit a three-vertex stretch with at most one foot on each end",
                    carriers.join(", ")
                ),
            }
        }
    };
    CycleFeetShape { cycle, feet, classification }
}

/// Two-coloring of an odd cycle with feet from a witness `u v w`: both
/// edges at `v` red, the rest of the cycle alternating from blue at `w`,
/// red feet at `u` and `w`, blue feet at `v`.
pub fn color_cycle_feet2(g: &Graph, witness: (Vertex, Vertex, Vertex)) -> Result<ColoringResult, ConstructError> {
    let shape = classify_cycle_feet(g);
    match shape.classification {
        FeetClass::NotMember => return Err(ConstructError::NotCycleFeet),
        FeetClass::Complete => return Err(ConstructError::Complete),
        _ => {}
    }
    let (u, v, w) = witness;
    let len = shape.cycle.len();
    let Some(iv) = shape.cycle.iter().position(|&x| x == v) else {
        return Err(ConstructError::InvalidWitness(format!("{v} is not on the cycle")));
    };
    // rotate so the cycle reads v, w, ..., u
    let mut order: Vec<Vertex> = shape.cycle[iv..].iter().chain(&shape.cycle[..iv]).copied().collect();
    if order[1] != w {
        order[1..].reverse();
    }
    if order[1] != w || order[len - 1] != u {
        return Err(ConstructError::InvalidWitness(format!("{u} {v} {w} are not consecutive on the cycle")));
    }
    let feet = |x: Vertex| g.degree(x) - 2;
    if feet(u) > 1 || feet(w) > 1 || order[2..len - 1].iter().any(|&x| feet(x) > 0) {
        return Err(ConstructError::InvalidWitness(format!("feet do not fit the stretch {u} {v} {w}")));
    }
    let mut colors: Vec<Color> = vec![0; g.m()];
    // order[i] - order[i+1]: index 0 is v-w, last is u-v
    for (i, e) in cycle_edges(g, &order)?.into_iter().enumerate() {
        colors[e] = if i == 0 || i == len - 1 || i % 2 == 0 { RED } else { BLUE };
    }
    for (x, c) in [(u, RED), (w, RED), (v, BLUE)] {
        for &(_, e) in g.neighbors(x) {
            if colors[e] == 0 {
                colors[e] = c;
            }
        }
    }
    certify(g, colors, Status::Exact, Route::CycleFeet)
}
