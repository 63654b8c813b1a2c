use super::{certify, other, require_connected, ConstructError, RED};
use crate::decompose::{self, bipartition};
use crate::graph::{Color, ColoringResult, Graph, Route, Status, Vertex};
use crate::orient::robbins_orientation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BipartiteOutcome {
    Colored(ColoringResult),
    /// A bridgeless-core component meets more than two bridges, so no
    /// two-coloring exists.
    Violation {
        component: Vec<Vertex>,
        incident_bridges: usize,
    },
}

/// Two-coloring of a connected bipartite graph whose bridgeless-core
/// components each meet at most two bridges.
///
/// Inside each component every edge takes the color of the partite class of
/// its head under a strong orientation. Bridges are colored along the
/// contracted path: consecutive bridges share a color exactly when they
/// attach to the component between them in different classes.
pub fn color_bipartite2(g: &Graph) -> Result<BipartiteOutcome, ConstructError> {
    require_connected(g)?;
    if g.n() < 2 {
        return Err(ConstructError::TooSmall(2));
    }
    let parts = bipartition(g).ok_or(ConstructError::NotBipartite)?;
    let core = decompose::bridgeless_core(g)?;
    if let Some(c) = core.components.iter().find(|c| c.incident_bridges > 2) {
        return Ok(BipartiteOutcome::Violation { component: c.vertices.clone(), incident_bridges: c.incident_bridges });
    }
    let class_color = |v: Vertex| -> Color { parts.side[v] + 1 };
    let mut colors: Vec<Color> = vec![0; g.m()];

    for comp in core.components.iter().filter(|c| c.nontrivial) {
        let (h, map) = g.induced(&comp.vertices);
        let orientation = robbins_orientation(&h)?;
        for e in 0..h.m() {
            let (a, b) = h.edge(e);
            let head = orientation.head(e).expect("strong orientation is total");
            let ge = g.edge_id(map[a], map[b]).unwrap();
            colors[ge] = class_color(map[head]);
        }
    }

    if !core.bridges.is_empty() {
        // walk the contracted path from its lowest leaf
        let mut prev: Option<(usize, Color)> = None;
        let mut comp = (0..core.components.len()).find(|&c| core.components[c].incident_bridges == 1).unwrap();
        let mut used = vec![false; g.m()];
        loop {
            let next = core.components[comp]
                .vertices
                .iter()
                .find_map(|&v| g.neighbors(v).iter().find(|&&(_, e)| core.is_bridge(e) && !used[e]).map(|&(w, e)| (v, w, e)));
            let Some((v, w, e)) = next else { break };
            let c = match prev {
                None => RED,
                Some((attach, pc)) if parts.side[attach] == parts.side[v] => other(pc),
                Some((_, pc)) => pc,
            };
            colors[e] = c;
            used[e] = true;
            prev = Some((w, c));
            comp = core.component_of[w];
        }
    }
    certify(g, colors, Status::Exact, Route::Bipartite).map(BipartiteOutcome::Colored)
}
