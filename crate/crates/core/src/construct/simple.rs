use std::collections::VecDeque;

use super::{certify, color_forest, cycle_edges, fill_rest, is_simple_cycle, require_connected, ConstructError, BLUE, RED};
use crate::graph::{Color, ColoringResult, Graph, Route, Status, Vertex};

/// Proper edge coloring of a tree with max-degree colors, so every path is
/// properly colored.
pub fn color_tree(g: &Graph) -> Result<ColoringResult, ConstructError> {
    if !g.is_tree() {
        return Err(ConstructError::NotTree);
    }
    let mut colors: Vec<Color> = vec![0; g.m()];
    let delta = g.max_degree();
    let root = (0..g.n()).find(|&v| g.degree(v) == delta).unwrap_or(0);
    let mut seen = vec![false; g.n()];
    seen[root] = true;
    let mut queue = VecDeque::from([(root, 0 as Color)]);
    while let Some((v, parent_color)) = queue.pop_front() {
        let mut next: Color = 1;
        for &(w, e) in g.neighbors(v) {
            if seen[w] {
                continue;
            }
            if next == parent_color {
                next += 1;
            }
            colors[e] = next;
            seen[w] = true;
            queue.push_back((w, next));
            next += 1;
        }
    }
    certify(g, colors, Status::Exact, Route::Tree)
}

/// BFS tree from vertex 0 plus the first non-tree edge; returns the cycle
/// that edge closes.
fn first_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let mut parent: Vec<Option<Vertex>> = vec![None; g.n()];
    let mut depth = vec![usize::MAX; g.n()];
    let mut tree_edge = vec![false; g.m()];
    depth[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &(w, e) in g.neighbors(v) {
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = Some(v);
                tree_edge[e] = true;
                queue.push_back(w);
            }
        }
    }
    let e = (0..g.m()).find(|&e| !tree_edge[e])?;
    let (a, b) = g.edge(e);
    let (mut x, mut y) = (a, b);
    let (mut left, mut right) = (vec![a], vec![b]);
    while x != y {
        if depth[x] >= depth[y] {
            x = parent[x].unwrap();
            left.push(x);
        } else {
            y = parent[y].unwrap();
            right.push(y);
        }
    }
    right.pop();
    left.extend(right.into_iter().rev());
    Some(left)
}

/// Three-coloring of a spanning unicyclic subgraph. Always valid for a
/// connected graph with a cycle, but only an upper bound in general.
pub fn color_unicyclic3(g: &Graph) -> Result<ColoringResult, ConstructError> {
    require_connected(g)?;
    let cycle = first_cycle(g).ok_or(ConstructError::Acyclic)?;
    let len = cycle.len();
    let edges = cycle_edges(g, &cycle)?;
    let mut colors: Vec<Color> = vec![0; g.m()];
    for (i, &e) in edges.iter().enumerate() {
        colors[e] = if len % 2 == 1 && i == len - 1 {
            3
        } else if i % 2 == 0 {
            RED
        } else {
            BLUE
        };
    }
    let mut on_cycle = vec![false; g.n()];
    for &v in &cycle {
        on_cycle[v] = true;
    }
    let at: Vec<(Color, Color)> = {
        let mut at = vec![(0, 0); g.n()];
        for (i, &v) in cycle.iter().enumerate() {
            at[v] = (colors[edges[i]], colors[edges[(i + len - 1) % len]]);
        }
        at
    };
    let allowed: Vec<bool> = on_cycle.iter().map(|&c| !c).collect();
    color_forest(g, &mut colors, &cycle, &allowed, |x| {
        let (a, b) = at[x];
        (1..=3).find(|&c| c != a && c != b).unwrap()
    });
    fill_rest(&mut colors);
    certify(g, colors, Status::UpperBound, Route::Unicyclic)
}

/// Two-coloring from a spanning odd cycle of length at least five: the
/// cycle alternates except for one pair of consecutive blue edges, chords
/// are red.
pub fn color_spanning_odd_cycle2(g: &Graph, cycle: &[Vertex]) -> Result<ColoringResult, ConstructError> {
    if g.is_complete() {
        return Err(ConstructError::Complete);
    }
    if cycle.len() != g.n() || cycle.len().is_multiple_of(2) || cycle.len() < 5 || !is_simple_cycle(g, cycle) {
        return Err(ConstructError::InvalidCycle("expected a spanning odd cycle of length at least 5".into()));
    }
    let edges = cycle_edges(g, cycle)?;
    let mut colors: Vec<Color> = vec![0; g.m()];
    let len = edges.len();
    for (i, &e) in edges.iter().enumerate() {
        colors[e] = if i == len - 1 || i % 2 == 1 { BLUE } else { RED };
    }
    fill_rest(&mut colors);
    certify(g, colors, Status::Exact, Route::SpanningOddCycle)
}
