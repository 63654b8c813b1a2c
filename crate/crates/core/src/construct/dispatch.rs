use super::{
    classify_cycle_feet, color_bipartite2, color_bridgeless2, color_cycle_feet2, color_tree, color_two_odd_cycles2,
    color_unicyclic3, require_connected, BipartiteOutcome, ConstructError, FeetClass, TwoOddLayout,
};
use crate::decompose::{self, disjoint_odd_cycles};
use crate::exact::{exact_pw, Budget, ExactError};
use crate::graph::{ColoringResult, EdgeColoring, Graph, Route, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AutoConfig {
    /// Graphs with at most this many edges that no construction settles are
    /// decided by exhaustive search.
    pub exact_edges: usize,
}

impl Default for AutoConfig {
    fn default() -> Self {
        Self { exact_edges: 18 }
    }
}

pub fn pw_auto(g: &Graph) -> Result<ColoringResult, ConstructError> {
    pw_auto_with(g, AutoConfig::default())
}

/// Picks the first construction whose preconditions hold, in order: complete,
/// tree, bipartite, bridgeless, odd cycle with feet, two edge-disjoint odd
/// cycles, exhaustive search on small graphs, and finally the three-coloring.
pub fn pw_auto_with(g: &Graph, config: AutoConfig) -> Result<ColoringResult, ConstructError> {
    require_connected(g)?;
    if g.n() <= 2 || g.is_complete() {
        return Ok(ColoringResult {
            k: 1,
            coloring: EdgeColoring::uniform(g.m(), 1),
            status: Status::Exact,
            route: Route::Complete,
        });
    }
    if g.is_tree() {
        return color_tree(g);
    }
    if decompose::is_bipartite(g) {
        return match color_bipartite2(g)? {
            BipartiteOutcome::Colored(r) => Ok(r),
            BipartiteOutcome::Violation { .. } => three_is_exact(g, Route::Unicyclic),
        };
    }
    if decompose::is_bridgeless(g) {
        return color_bridgeless2(g);
    }
    let shape = classify_cycle_feet(g);
    match shape.classification {
        FeetClass::Pw2 { u, v, w } => return color_cycle_feet2(g, (u, v, w)),
        FeetClass::Pw3 { .. } => return three_is_exact(g, Route::CycleFeet),
        FeetClass::NotMember | FeetClass::Complete => {}
    }
    if let Some(pair) = disjoint_odd_cycles(g) {
        return color_two_odd_cycles2(g, &TwoOddLayout::new(g, pair)?);
    }
    if g.m() <= config.exact_edges {
        return match exact_pw(g, 2, Budget::uniform(config.exact_edges)) {
            Ok(r) => Ok(ColoringResult { k: r.k, coloring: r.witness, status: Status::Exact, route: Route::Exact }),
            Err(ExactError::ExceedsMaxK { .. }) => three_is_exact(g, Route::Exact),
            Err(e) => Err(e.into()),
        };
    }
    color_unicyclic3(g)
}

/// The three-coloring, marked exact because two colors are known not to
/// suffice.
fn three_is_exact(g: &Graph, route: Route) -> Result<ColoringResult, ConstructError> {
    let r = color_unicyclic3(g)?;
    if r.k != 3 {
        return Err(ConstructError::Internal(format!("expected three colors via {route}, got {}", r.k)));
    }
    Ok(ColoringResult { status: Status::Exact, route, ..r })
}
