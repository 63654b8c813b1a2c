//! Constructive colorings and the dispatcher that picks one.
//!
//! Every function here returns a coloring only after the all-pairs walk
//! verifier has accepted it. Edges outside the subgraph a construction
//! works on get color 1; adding edges never removes a walk.

mod bipartite;
mod bridgeless;
mod cycle_feet;
mod dispatch;
mod simple;
mod theta;
mod two_odd;

use std::collections::VecDeque;

use thiserror::Error;

use crate::decompose::DecomposeError;
use crate::exact::ExactError;
use crate::graph::{Color, ColoringResult, EdgeColoring, EdgeId, Graph, Route, Status, Vertex};
use crate::orient::OrientError;
use crate::verify::{verify_all_pairs, PairCheck};

pub use bipartite::{color_bipartite2, BipartiteOutcome};
pub use bridgeless::color_bridgeless2;
pub use cycle_feet::{classify_cycle_feet, color_cycle_feet2, CycleFeetShape, FeetClass};
pub use dispatch::{pw_auto, pw_auto_with, AutoConfig};
pub use simple::{color_spanning_odd_cycle2, color_tree, color_unicyclic3};
pub use theta::{color_theta_block2, reduce_theta, ThetaReduction, ThetaSubgraph};
pub use two_odd::{color_two_odd_cycles2, TwoOddLayout};

pub(crate) const RED: Color = 1;
pub(crate) const BLUE: Color = 2;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph needs at least {0} vertices")]
    TooSmall(usize),
    #[error("graph is not a tree")]
    NotTree,
    #[error("graph has no cycle")]
    Acyclic,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is bipartite")]
    Bipartite,
    #[error("graph is complete")]
    Complete,
    #[error("graph has a bridge")]
    HasBridge,
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph has a spanning odd cycle")]
    SpanningOddCycle,
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("invalid two-odd-cycle layout: {0}")]
    InvalidLayout(String),
    #[error("graph is not an odd cycle with feet")]
    NotCycleFeet,
    #[error("invalid cycle-with-feet witness: {0}")]
    InvalidWitness(String),
    #[error(transparent)]
    Decompose(#[from] DecomposeError),
    #[error(transparent)]
    Orient(#[from] OrientError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("{route} coloring fails for pair {u} {v}")]
    Unsound { route: Route, u: Vertex, v: Vertex },
    #[error("internal error: {0}")]
    Internal(String),
}

/// Runs the verifier and packages the coloring. `k` is the largest color
/// used (1 for an edgeless graph).
pub(crate) fn certify(g: &Graph, colors: Vec<Color>, status: Status, route: Route) -> Result<ColoringResult, ConstructError> {
    let k = colors.iter().copied().max().unwrap_or(1);
    let coloring = EdgeColoring::new(k, colors).expect("construction colors are 1-based");
    match verify_all_pairs(g, &coloring).expect("coloring sized to the graph") {
        PairCheck::Pass => Ok(ColoringResult { k, coloring, status, route }),
        PairCheck::Fail { u, v } => Err(ConstructError::Unsound { route, u, v }),
    }
}

pub(crate) fn other(c: Color) -> Color {
    if c == RED {
        BLUE
    } else {
        RED
    }
}

/// Edge ids of a closed vertex cycle, `cycle[i]`–`cycle[i + 1]` first.
pub(crate) fn cycle_edges(g: &Graph, cycle: &[Vertex]) -> Result<Vec<EdgeId>, ConstructError> {
    let len = cycle.len();
    (0..len)
        .map(|i| {
            g.edge_id(cycle[i], cycle[(i + 1) % len])
                .ok_or_else(|| ConstructError::InvalidCycle(format!("{} {} is not an edge", cycle[i], cycle[(i + 1) % len])))
        })
        .collect()
}

pub(crate) fn path_edges(g: &Graph, path: &[Vertex]) -> Result<Vec<EdgeId>, ConstructError> {
    path.windows(2)
        .map(|w| g.edge_id(w[0], w[1]).ok_or_else(|| ConstructError::InvalidCycle(format!("{} {} is not an edge", w[0], w[1]))))
        .collect()
}

pub(crate) fn is_simple_cycle(g: &Graph, cycle: &[Vertex]) -> bool {
    let mut seen = vec![false; g.n()];
    cycle.len() >= 3
        && cycle.iter().all(|&v| v < g.n() && !std::mem::replace(&mut seen[v], true))
        && cycle_edges(g, cycle).is_ok()
}

/// Grows a BFS forest from the `root` vertices through the vertices marked
/// `allowed`, coloring each tree edge. The edge leaving a root `x` gets
/// `root_color(x)`; below that, all child edges of a vertex share the color
/// opposite to its parent edge. Only uncolored edges are used.
pub(crate) fn color_forest(
    g: &Graph,
    colors: &mut [Color],
    roots: &[Vertex],
    allowed: &[bool],
    root_color: impl Fn(Vertex) -> Color,
) -> Vec<Vertex> {
    let mut parent_color: Vec<Option<Color>> = vec![None; g.n()];
    let mut in_tree = vec![false; g.n()];
    let mut sorted = roots.to_vec();
    sorted.sort_unstable();
    for &r in &sorted {
        in_tree[r] = true;
    }
    let mut queue: VecDeque<Vertex> = sorted.into_iter().collect();
    let mut added = Vec::new();
    while let Some(v) = queue.pop_front() {
        for &(w, e) in g.neighbors(v) {
            if in_tree[w] || !allowed[w] || colors[e] != 0 {
                continue;
            }
            let c = match parent_color[v] {
                None => root_color(v),
                Some(p) => other(p),
            };
            colors[e] = c;
            parent_color[w] = Some(c);
            in_tree[w] = true;
            added.push(w);
            queue.push_back(w);
        }
    }
    added
}

pub(crate) fn fill_rest(colors: &mut [Color]) {
    for c in colors.iter_mut().filter(|c| **c == 0) {
        *c = RED;
    }
}

pub(crate) fn require_connected(g: &Graph) -> Result<(), ConstructError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(ConstructError::Disconnected)
    }
}
