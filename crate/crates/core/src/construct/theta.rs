use std::collections::VecDeque;

use super::{
    certify, color_forest, color_spanning_odd_cycle2, color_two_odd_cycles2, cycle_edges, fill_rest, is_simple_cycle, path_edges,
    ConstructError, TwoOddLayout,
};
use crate::decompose::{self, bipartition, join_cycles, shortest_odd_cycle};
use crate::graph::{Color, ColoringResult, Graph, Route, Status, Vertex};
use crate::orient::lemma_orientation;

/// An even cycle plus a path between two of its vertices whose interior
/// avoids the cycle, such that the union is not bipartite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaSubgraph {
    /// The even cycle, starting at the first inverter vertex.
    pub outer: Vec<Vertex>,
    /// The path, from `outer[0]` to another cycle vertex.
    pub inverter: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThetaReduction {
    Theta(ThetaSubgraph),
    TwoOdd(TwoOddLayout),
}

impl ThetaSubgraph {
    /// Joins two internally disjoint `u`–`v` paths into the outer cycle.
    fn from_paths(p1: &[Vertex], p2: &[Vertex], inverter: Vec<Vertex>) -> Self {
        let mut outer = p1.to_vec();
        outer.extend(p2[1..p2.len() - 1].iter().rev());
        Self { outer, inverter }
    }

    pub fn u(&self) -> Vertex {
        self.inverter[0]
    }

    pub fn v(&self) -> Vertex {
        *self.inverter.last().unwrap()
    }

    /// The two arcs of the outer cycle, each as a path from `u` to `v`.
    pub fn arcs(&self) -> (Vec<Vertex>, Vec<Vertex>) {
        let j = self.outer.iter().position(|&x| x == self.v()).expect("v lies on the outer cycle");
        let first = self.outer[..=j].to_vec();
        let mut second = vec![self.u()];
        second.extend(self.outer[j..].iter().rev());
        (first, second)
    }

    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        if self.outer.len() % 2 == 1 || !is_simple_cycle(g, &self.outer) {
            return Err("outer cycle must be an even cycle of the graph".into());
        }
        if self.inverter.len() < 2 || self.outer[0] != self.u() || !self.outer.contains(&self.v()) || self.u() == self.v() {
            return Err("inverter must join two distinct outer vertices starting at outer[0]".into());
        }
        let mut seen = vec![false; g.n()];
        for &x in &self.outer {
            seen[x] = true;
        }
        for &x in &self.inverter[1..self.inverter.len() - 1] {
            if std::mem::replace(&mut seen[x], true) {
                return Err(format!("inverter vertex {x} repeats or lies on the outer cycle"));
            }
        }
        if path_edges(g, &self.inverter).is_err() {
            return Err("inverter is not a path of the graph".into());
        }
        let (first, _) = self.arcs();
        if (first.len() + self.inverter.len()).is_multiple_of(2) {
            return Err("inverter parity matches the outer arcs".into());
        }
        if self.inverter.len() == 2 && first.len() == 2 {
            return Err("inverter duplicates an outer edge".into());
        }
        Ok(())
    }
}

fn internal(what: &str, g: &Graph) -> ConstructError {
    ConstructError::Internal(format!("{what} on graph with n={} edges={:?}", g.n(), g.edges()))
}

fn initial_theta(g: &Graph, c0: &[Vertex]) -> Result<ThetaSubgraph, ConstructError> {
    let len = c0.len();
    let mut on_cycle = vec![false; g.n()];
    for &v in c0 {
        on_cycle[v] = true;
    }
    let x = (0..g.n()).find(|&v| !on_cycle[v]).ok_or(ConstructError::SpanningOddCycle)?;
    let (p1, p2) = decompose::two_disjoint_paths(g, x, c0)?;
    let (a, b) = (*p1.last().unwrap(), *p2.last().unwrap());
    let mut q: Vec<Vertex> = p1.iter().rev().copied().collect();
    q.extend(&p2[1..]);
    let start = c0.iter().position(|&y| y == a).unwrap();
    let rotated: Vec<Vertex> = c0[start..].iter().chain(&c0[..start]).copied().collect();
    let j = rotated.iter().position(|&y| y == b).unwrap();
    let arc_a = rotated[..=j].to_vec();
    let mut arc_b = vec![a];
    arc_b.extend(rotated[j..].iter().rev());
    debug_assert_eq!(arc_a.len() + arc_b.len(), len + 2);
    Ok(if (q.len() + arc_a.len()).is_multiple_of(2) {
        ThetaSubgraph::from_paths(&arc_a, &q, arc_b)
    } else {
        ThetaSubgraph::from_paths(&arc_b, &q, arc_a)
    })
}

/// Finds a theta subgraph whose outer cycle leaves a bipartite remainder,
/// or two edge-disjoint odd cycles met along the way.
///
/// Starts from a shortest odd cycle and an ear through the lowest vertex
/// off it. While the graph minus the outer cycle has an odd cycle `O`,
/// either `O` avoids the inverter's edges (two odd cycles), or a piece of
/// `O` between inverter vertices gives a theta with a shorter inverter.
pub fn reduce_theta(g: &Graph) -> Result<ThetaReduction, ConstructError> {
    if !decompose::is_two_connected(g) {
        return Err(ConstructError::NotTwoConnected);
    }
    let c0 = shortest_odd_cycle(g).ok_or(ConstructError::Bipartite)?;
    if c0.len() == g.n() {
        return Err(ConstructError::SpanningOddCycle);
    }
    let mut theta = initial_theta(g, &c0)?;
    loop {
        theta.validate(g).map_err(|e| internal(&format!("invalid theta ({e})"), g))?;
        let mut on_outer = vec![false; g.n()];
        for &x in &theta.outer {
            on_outer[x] = true;
        }
        let rest: Vec<Vertex> = (0..g.n()).filter(|&x| !on_outer[x]).collect();
        let (sub, map) = g.induced(&rest);
        let Some(o) = shortest_odd_cycle(&sub) else {
            return Ok(ThetaReduction::Theta(theta));
        };
        let o: Vec<Vertex> = o.into_iter().map(|x| map[x]).collect();
        let p = &theta.inverter;
        let mut pos = vec![usize::MAX; g.n()];
        for (i, &x) in p.iter().enumerate() {
            pos[x] = i;
        }
        let len = o.len();
        let on_p_edge = |a: Vertex, b: Vertex| pos[a] != usize::MAX && pos[b] != usize::MAX && pos[a].abs_diff(pos[b]) == 1;
        if !(0..len).any(|i| on_p_edge(o[i], o[(i + 1) % len])) {
            let (first, _) = theta.arcs();
            let mut odd = p.clone();
            odd.extend(first[1..first.len() - 1].iter().rev());
            let pair = join_cycles(g, &o, &odd).ok_or_else(|| internal("cycles cannot be joined", g))?;
            return Ok(ThetaReduction::TwoOdd(TwoOddLayout::new(g, pair)?));
        }

        // pieces of O between consecutive inverter vertices
        let hits: Vec<usize> = (0..len).filter(|&i| pos[o[i]] != usize::MAX).collect();
        let segment = (0..hits.len()).find_map(|h| {
            let (a, b) = (hits[h], hits[(h + 1) % hits.len()]);
            let steps = (b + len - a - 1) % len + 1;
            let piece: Vec<Vertex> = (0..=steps).map(|t| o[(a + t) % len]).collect();
            let (x, y) = (piece[0], piece[steps]);
            let is_p_edge = steps == 1 && on_p_edge(x, y);
            (!is_p_edge && (steps + pos[x].abs_diff(pos[y])) % 2 == 1).then_some(piece)
        });
        let mut s = segment.ok_or_else(|| internal("no odd piece of the remainder cycle", g))?;
        if pos[s[0]] > pos[*s.last().unwrap()] {
            s.reverse();
        }
        let (i, j) = (pos[s[0]], pos[*s.last().unwrap()]);
        let (first, _) = theta.arcs();
        let mut r: Vec<Vertex> = p[..=i].iter().rev().copied().collect();
        r.extend(&first[1..]);
        r.extend(p[j..p.len() - 1].iter().rev());
        let next = ThetaSubgraph::from_paths(&s, &r, p[i..=j].to_vec());
        if next.outer.len() % 2 == 1 || next.inverter.len() >= p.len() {
            return Err(internal("theta descent did not shrink to an even cycle", g));
        }
        theta = next;
    }
}

/// Two-coloring of a 2-connected, nonbipartite, noncomplete graph.
///
/// Uses a spanning odd cycle or two edge-disjoint odd cycles when the
/// search meets one; otherwise colors from a theta subgraph with a
/// bipartite remainder.
pub fn color_theta_block2(g: &Graph) -> Result<ColoringResult, ConstructError> {
    if !decompose::is_two_connected(g) {
        return Err(ConstructError::NotTwoConnected);
    }
    if g.is_complete() {
        return Err(ConstructError::Complete);
    }
    let c0 = shortest_odd_cycle(g).ok_or(ConstructError::Bipartite)?;
    if c0.len() == g.n() {
        return color_spanning_odd_cycle2(g, &c0);
    }
    match reduce_theta(g)? {
        ThetaReduction::TwoOdd(layout) => color_two_odd_cycles2(g, &layout),
        ThetaReduction::Theta(theta) => color_from_theta(g, &theta),
    }
}

/// Two-coloring from a theta subgraph whose outer cycle leaves a bipartite
/// remainder.
///
/// The outer cycle alternates. Vertices that reach it without touching the
/// inverter hang off it as a forest. Everything else, together with the
/// inverter's interior, gets an orientation anchored on the inverter and is
/// colored by the partite class of each arc's head. The three free phases
/// (outer cycle, head classes, forest attachment side) are searched.
pub fn color_from_theta(g: &Graph, theta: &ThetaSubgraph) -> Result<ColoringResult, ConstructError> {
    theta.validate(g).map_err(ConstructError::InvalidCycle)?;
    let n = g.n();
    let len = theta.outer.len();
    let interior = &theta.inverter[1..theta.inverter.len() - 1];
    let mut on_theta = vec![false; n];
    let mut outer_pos = vec![usize::MAX; n];
    for (i, &x) in theta.outer.iter().enumerate() {
        on_theta[x] = true;
        outer_pos[x] = i;
    }
    for &x in interior {
        on_theta[x] = true;
    }
    let mut in_a = vec![false; n];
    let mut queue: VecDeque<Vertex> = theta.outer.iter().copied().collect();
    while let Some(x) = queue.pop_front() {
        for &(y, _) in g.neighbors(x) {
            if !on_theta[y] && !in_a[y] {
                in_a[y] = true;
                queue.push_back(y);
            }
        }
    }
    let mut h_vertices = interior.to_vec();
    h_vertices.extend((0..n).filter(|&x| !on_theta[x] && !in_a[x]));
    let (h, h_map) = g.induced(&h_vertices);

    // (edge in g, head's class in h) for every arc of the inverter and H
    let mut head_class: Vec<(usize, u8)> = Vec::new();
    if !interior.is_empty() {
        let path: Vec<Vertex> = (0..interior.len()).collect();
        let (orientation, _) = lemma_orientation(&h, &path)?;
        let side = bipartition(&h).ok_or_else(|| internal("remainder is not bipartite", g))?.side;
        for (tail, head) in orientation.arcs() {
            head_class.push((g.edge_id(h_map[tail], h_map[head]).unwrap(), side[head]));
        }
        let p = &theta.inverter;
        head_class.push((g.edge_id(p[0], p[1]).unwrap(), side[0]));
        head_class.push((g.edge_id(p[p.len() - 2], p[p.len() - 1]).unwrap(), 1 - side[interior.len() - 1]));
    } else {
        head_class.push((g.edge_id(theta.u(), theta.v()).unwrap(), 0));
    }

    let outer_edges = cycle_edges(g, &theta.outer)?;
    let roots: Vec<Vertex> = theta.outer.clone();
    for phase in 0..8u8 {
        let (phi, psi, delta) = (phase >> 2 & 1, phase >> 1 & 1, phase & 1);
        let outer_color = |i: usize| -> Color { ((i as u8 + phi) % 2) + 1 };
        let mut colors: Vec<Color> = vec![0; g.m()];
        for (i, &e) in outer_edges.iter().enumerate() {
            colors[e] = outer_color(i);
        }
        for &(e, class) in &head_class {
            colors[e] = ((class + psi) % 2) + 1;
        }
        color_forest(g, &mut colors, &roots, &in_a, |x| {
            let i = outer_pos[x];
            if delta == 0 {
                outer_color(i)
            } else {
                outer_color((i + len - 1) % len)
            }
        });
        fill_rest(&mut colors);
        match certify(g, colors, Status::Exact, Route::Theta) {
            Ok(r) => return Ok(r),
            Err(ConstructError::Unsound { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(internal(&format!("no phase of theta {theta:?} verifies"), g))
}
