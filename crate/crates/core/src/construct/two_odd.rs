use super::{
    certify, color_forest, cycle_edges, fill_rest, is_simple_cycle, other, path_edges, require_connected, ConstructError, BLUE,
    RED,
};
use crate::decompose::OddCyclePair;
use crate::graph::{Color, ColoringResult, Graph, Route, Status, Vertex};

/// Two edge-disjoint odd cycles and a path joining them. `c1` starts at the
/// first connector vertex and `c2` at the last; a one-vertex connector means
/// the cycles share that vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoOddLayout {
    pub c1: Vec<Vertex>,
    pub c2: Vec<Vertex>,
    pub connector: Vec<Vertex>,
}

impl TwoOddLayout {
    pub fn new(g: &Graph, pair: OddCyclePair) -> Result<Self, ConstructError> {
        let layout = Self { c1: pair.c1, c2: pair.c2, connector: pair.connector };
        layout.validate(g)?;
        Ok(layout)
    }

    pub fn validate(&self, g: &Graph) -> Result<(), ConstructError> {
        let bad = |s: &str| Err(ConstructError::InvalidLayout(s.into()));
        for c in [&self.c1, &self.c2] {
            if c.len() % 2 == 0 || !is_simple_cycle(g, c) {
                return bad("cycles must be odd cycles of the graph");
            }
        }
        let e1 = cycle_edges(g, &self.c1)?;
        let e2 = cycle_edges(g, &self.c2)?;
        if e1.iter().any(|e| e2.contains(e)) {
            return bad("cycles share an edge");
        }
        let Some((&u1, &u2)) = self.connector.first().zip(self.connector.last()) else {
            return bad("empty connector");
        };
        if self.c1[0] != u1 || self.c2[0] != u2 {
            return bad("cycles must start at the connector ends");
        }
        if self.connector.len() > 1 {
            if self.c1.iter().any(|v| self.c2.contains(v)) {
                return bad("cycles sharing a vertex need a one-vertex connector");
            }
            let mut seen = vec![false; g.n()];
            for (i, &v) in self.connector.iter().enumerate() {
                let interior = i > 0 && i + 1 < self.connector.len();
                if std::mem::replace(&mut seen[v], true) || (interior && (self.c1.contains(&v) || self.c2.contains(&v))) {
                    return bad("connector must be a simple path meeting the cycles only at its ends");
                }
            }
            if path_edges(g, &self.connector).is_err() {
                return bad("connector is not a path of the graph");
            }
        }
        Ok(())
    }

    fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.c1.iter().chain(&self.c2).chain(&self.connector).copied()
    }
}

/// Two-coloring from two edge-disjoint odd cycles joined by a path. The
/// first cycle alternates from red at its start, so its start sees red
/// twice; the connector alternates from blue; the second cycle is phased so
/// that its start sees the color the connector does not end with.
pub fn color_two_odd_cycles2(g: &Graph, layout: &TwoOddLayout) -> Result<ColoringResult, ConstructError> {
    require_connected(g)?;
    layout.validate(g)?;
    let mut colors: Vec<Color> = vec![0; g.m()];
    for (i, e) in cycle_edges(g, &layout.c1)?.into_iter().enumerate() {
        colors[e] = if i % 2 == 0 { RED } else { BLUE };
    }
    let connector = path_edges(g, &layout.connector)?;
    for (i, &e) in connector.iter().enumerate() {
        colors[e] = if i % 2 == 0 { BLUE } else { RED };
    }
    let base = if connector.len() % 2 == 0 { BLUE } else { RED };
    for (i, e) in cycle_edges(g, &layout.c2)?.into_iter().enumerate() {
        colors[e] = if i % 2 == 0 { base } else { other(base) };
    }

    let mut in_h = vec![false; g.n()];
    for v in layout.vertices() {
        in_h[v] = true;
    }
    for v in layout.vertices() {
        let seen: Vec<Color> = g.neighbors(v).iter().map(|&(_, e)| colors[e]).filter(|&c| c != 0).collect();
        if !(seen.contains(&RED) && seen.contains(&BLUE)) {
            return Err(ConstructError::Internal(format!("vertex {v} of the two-cycle subgraph misses a color")));
        }
    }
    let roots: Vec<Vertex> = (0..g.n()).filter(|&v| in_h[v]).collect();
    let allowed: Vec<bool> = in_h.iter().map(|&h| !h).collect();
    color_forest(g, &mut colors, &roots, &allowed, |_| RED);
    fill_rest(&mut colors);
    certify(g, colors, Status::Exact, Route::TwoOddCycles)
}
