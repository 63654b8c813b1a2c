//! Structural decompositions: bridges, blocks, the bridge-deleted core,
//! bipartitions, odd cycles, vertex-disjoint paths and the core contraction.
//!
//! Ties are broken by lowest vertex id, then canonical edge order, so every
//! function here is deterministic.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{EdgeId, Graph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecomposeError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("target set must have at least two vertices and exclude the start vertex")]
    BadTarget,
    #[error("no two internally disjoint paths from {0} to the target set")]
    NoDisjointPaths(Vertex),
}

fn require_connected(g: &Graph) -> Result<(), DecomposeError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(DecomposeError::Disconnected)
    }
}

/// A maximal 2-connected subgraph, or a single bridge edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
}

struct Lowlink {
    bridges: Vec<EdgeId>,
    blocks: Vec<Block>,
}

/// Iterative Tarjan over every component: bridges and biconnected
/// components in one pass.
fn lowlink(g: &Graph) -> Lowlink {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut bridges = Vec::new();
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    // (vertex, parent edge, next neighbor index)
    let mut stack: Vec<(Vertex, Option<EdgeId>, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, None, 0));
        while let Some(&mut (v, pe, ref mut idx)) = stack.last_mut() {
            if let Some(&(w, e)) = g.neighbors(v).get(*idx) {
                *idx += 1;
                if Some(e) == pe {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    edge_stack.push(e);
                    stack.push((w, Some(e), 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                let Some(e) = pe else { continue };
                let parent = g.other_end(e, v);
                low[parent] = low[parent].min(low[v]);
                if low[v] > disc[parent] {
                    bridges.push(e);
                }
                if low[v] >= disc[parent] {
                    let mut edges = Vec::new();
                    while let Some(f) = edge_stack.pop() {
                        edges.push(f);
                        if f == e {
                            break;
                        }
                    }
                    edges.sort_unstable();
                    let mut vertices: Vec<_> = edges.iter().flat_map(|&f| [g.edge(f).0, g.edge(f).1]).collect();
                    vertices.sort_unstable();
                    vertices.dedup();
                    blocks.push(Block { vertices, edges });
                }
            }
        }
    }
    bridges.sort_unstable();
    blocks.sort_by(|a, b| a.edges.cmp(&b.edges));
    Lowlink { bridges, blocks }
}

/// The cut edges of a connected graph, in canonical order.
pub fn bridges(g: &Graph) -> Result<Vec<EdgeId>, DecomposeError> {
    require_connected(g)?;
    Ok(lowlink(g).bridges)
}

/// Blocks of a connected graph; every edge lies in exactly one block.
pub fn blocks(g: &Graph) -> Result<Vec<Block>, DecomposeError> {
    require_connected(g)?;
    Ok(lowlink(g).blocks)
}

pub fn is_bridgeless(g: &Graph) -> bool {
    lowlink(g).bridges.is_empty()
}

/// Connected, at least three vertices, and a single block.
pub fn is_two_connected(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && lowlink(g).blocks.len() == 1
}

/// A component of the graph with all bridges deleted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreComponent {
    pub vertices: Vec<Vertex>,
    /// False for an isolated vertex.
    pub nontrivial: bool,
    /// Bridge endpoints lying in this component.
    pub incident_bridges: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Core {
    pub bridges: Vec<EdgeId>,
    /// Ordered by lowest vertex.
    pub components: Vec<CoreComponent>,
    pub component_of: Vec<usize>,
}

impl Core {
    /// Every component is incident with at most two bridges.
    pub fn satisfies_bridge_condition(&self) -> bool {
        self.components.iter().all(|c| c.incident_bridges <= 2)
    }

    pub fn is_bridge(&self, e: EdgeId) -> bool {
        self.bridges.binary_search(&e).is_ok()
    }
}

/// Components of the spanning subgraph without bridges, with the number of
/// bridges incident with each.
pub fn bridgeless_core(g: &Graph) -> Result<Core, DecomposeError> {
    let bridges = bridges(g)?;
    let is_bridge = |e: EdgeId| bridges.binary_search(&e).is_ok();
    let mut component_of = vec![usize::MAX; g.n()];
    let mut components = Vec::new();
    for s in 0..g.n() {
        if component_of[s] != usize::MAX {
            continue;
        }
        let id = components.len();
        component_of[s] = id;
        let mut vertices = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in g.neighbors(v) {
                if !is_bridge(e) && component_of[w] == usize::MAX {
                    component_of[w] = id;
                    vertices.push(w);
                    queue.push_back(w);
                }
            }
        }
        vertices.sort_unstable();
        components.push(CoreComponent { nontrivial: vertices.len() > 1, vertices, incident_bridges: 0 });
    }
    for &e in &bridges {
        let (a, b) = g.edge(e);
        components[component_of[a]].incident_bridges += 1;
        components[component_of[b]].incident_bridges += 1;
    }
    Ok(Core { bridges, components, component_of })
}

/// A proper 2-coloring of the vertices; `side[v]` is 0 or 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub side: Vec<u8>,
}

impl Bipartition {
    pub fn class_x(&self) -> Vec<Vertex> {
        (0..self.side.len()).filter(|&v| self.side[v] == 0).collect()
    }

    pub fn class_y(&self) -> Vec<Vertex> {
        (0..self.side.len()).filter(|&v| self.side[v] == 1).collect()
    }
}

/// BFS 2-coloring from the lowest vertex of each component, or `None` when
/// there is an odd cycle.
pub fn bipartition(g: &Graph) -> Option<Bipartition> {
    let mut side = vec![u8::MAX; g.n()];
    for s in 0..g.n() {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &(w, _) in g.neighbors(v) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return None;
                }
            }
        }
    }
    Some(Bipartition { side })
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

/// A minimum-length odd cycle as a vertex sequence, found by BFS in the
/// bipartite double cover from each vertex in turn.
pub fn shortest_odd_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.n();
    let mut best: Option<Vec<Vertex>> = None;
    let mut dist = vec![usize::MAX; 2 * n];
    let mut parent = vec![usize::MAX; 2 * n];
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        let start = 2 * s;
        let goal = 2 * s + 1;
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(state) = queue.pop_front() {
            if best.as_ref().is_some_and(|b| dist[state] + 1 >= b.len()) {
                break;
            }
            let (v, parity) = (state / 2, state % 2);
            for &(w, _) in g.neighbors(v) {
                let next = 2 * w + (1 - parity);
                if dist[next] == usize::MAX {
                    dist[next] = dist[state] + 1;
                    parent[next] = state;
                    queue.push_back(next);
                }
            }
            if dist[goal] != usize::MAX {
                break;
            }
        }
        if dist[goal] != usize::MAX && best.as_ref().is_none_or(|b| dist[goal] < b.len()) {
            let mut cycle = Vec::new();
            let mut at = parent[goal];
            while at != start {
                cycle.push(at / 2);
                at = parent[at];
            }
            cycle.push(s);
            cycle.reverse();
            best = Some(cycle);
        }
    }
    best
}

/// Shortest path from any vertex of `from` to any vertex of `to`
/// (multi-source BFS). The interior avoids both sets.
pub fn shortest_path_between(g: &Graph, from: &[Vertex], to: &[Vertex]) -> Option<Vec<Vertex>> {
    let mut is_target = vec![false; g.n()];
    for &t in to {
        is_target[t] = true;
    }
    let mut sources = from.to_vec();
    sources.sort_unstable();
    if let Some(&s) = sources.iter().find(|&&s| is_target[s]) {
        return Some(vec![s]);
    }
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::new();
    for &s in &sources {
        seen[s] = true;
        queue.push_back(s);
    }
    while let Some(v) = queue.pop_front() {
        for &(w, _) in g.neighbors(v) {
            if seen[w] {
                continue;
            }
            seen[w] = true;
            parent[w] = v;
            if is_target[w] {
                let mut path = vec![w];
                let mut at = w;
                while parent[at] != usize::MAX {
                    at = parent[at];
                    path.push(at);
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(w);
        }
    }
    None
}

struct FlowArc {
    to: usize,
    cap: u8,
    rev: usize,
    forward: bool,
}

struct FlowNet {
    arcs: Vec<Vec<FlowArc>>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        Self { arcs: (0..nodes).map(|_| Vec::new()).collect() }
    }

    fn add(&mut self, a: usize, b: usize) {
        let ra = self.arcs[b].len();
        let rb = self.arcs[a].len();
        self.arcs[a].push(FlowArc { to: b, cap: 1, rev: ra, forward: true });
        self.arcs[b].push(FlowArc { to: a, cap: 0, rev: rb, forward: false });
    }

    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.arcs.len()];
        let mut seen = vec![false; self.arcs.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for (i, arc) in self.arcs[v].iter().enumerate() {
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    prev[arc.to] = Some((v, i));
                    queue.push_back(arc.to);
                }
            }
        }
        if !seen[t] {
            return false;
        }
        let mut at = t;
        while let Some((v, i)) = prev[at] {
            let rev = self.arcs[v][i].rev;
            self.arcs[v][i].cap -= 1;
            self.arcs[at][rev].cap += 1;
            at = v;
        }
        true
    }
}

/// Two paths from `w` to distinct vertices of `target`, sharing only `w`
/// and meeting `target` only at their ends. Unit-capacity max-flow with
/// every vertex split into an in/out pair.
pub fn two_disjoint_paths(g: &Graph, w: Vertex, target: &[Vertex]) -> Result<(Vec<Vertex>, Vec<Vertex>), DecomposeError> {
    let n = g.n();
    let mut is_target = vec![false; n];
    for &t in target {
        is_target[t] = true;
    }
    if w >= n || is_target[w] || is_target.iter().filter(|&&t| t).count() < 2 {
        return Err(DecomposeError::BadTarget);
    }
    let node_in = |x: Vertex| 2 * x;
    let node_out = |x: Vertex| 2 * x + 1;
    let sink = 2 * n;
    let mut net = FlowNet::new(2 * n + 1);
    for x in 0..n {
        if x == w {
            continue;
        }
        if is_target[x] {
            net.add(node_in(x), sink);
        } else {
            net.add(node_in(x), node_out(x));
        }
    }
    for &(a, b) in g.edges() {
        for (x, y) in [(a, b), (b, a)] {
            if y != w && !is_target[x] {
                net.add(node_out(x), node_in(y));
            }
        }
    }
    for _ in 0..2 {
        if !net.augment(node_out(w), sink) {
            return Err(DecomposeError::NoDisjointPaths(w));
        }
    }
    // successors of an out-node carrying flow, as in-nodes
    let flows = |net: &FlowNet, node: usize| -> Vec<usize> {
        net.arcs[node].iter().filter(|a| a.forward && a.cap == 0 && a.to != sink).map(|a| a.to).collect()
    };
    let firsts = flows(&net, node_out(w));
    debug_assert_eq!(firsts.len(), 2);
    let mut paths = Vec::new();
    for first in firsts {
        let mut path = vec![w];
        let mut at = first / 2;
        loop {
            path.push(at);
            if is_target[at] {
                break;
            }
            let next = flows(&net, node_out(at));
            at = next[0] / 2;
        }
        paths.push(path);
    }
    let p2 = paths.pop().unwrap();
    let p1 = paths.pop().unwrap();
    Ok((p1, p2))
}

/// Two edge-disjoint odd cycles plus a connector path.
///
/// `c1` starts at `connector[0]` and `c2` at the connector's last vertex;
/// when the cycles share a vertex the connector is that single vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddCyclePair {
    pub c1: Vec<Vertex>,
    pub c2: Vec<Vertex>,
    pub connector: Vec<Vertex>,
}

fn rotate_to(cycle: &[Vertex], v: Vertex) -> Vec<Vertex> {
    let i = cycle.iter().position(|&x| x == v).expect("vertex on cycle");
    cycle[i..].iter().chain(&cycle[..i]).copied().collect()
}

/// Joins two edge-disjoint cycles by their lowest shared vertex or by a
/// shortest connecting path in `g`.
pub fn join_cycles(g: &Graph, c1: &[Vertex], c2: &[Vertex]) -> Option<OddCyclePair> {
    let connector = shortest_path_between(g, c1, c2)?;
    let (u1, u2) = (connector[0], *connector.last().unwrap());
    Some(OddCyclePair { c1: rotate_to(c1, u1), c2: rotate_to(c2, u2), connector })
}

/// Searches for two edge-disjoint odd cycles: first a shortest odd cycle in
/// each of two nonbipartite blocks, then a shortest odd cycle together with
/// an odd cycle avoiding its edges. `None` means "not found", not "none exist".
pub fn disjoint_odd_cycles(g: &Graph) -> Option<OddCyclePair> {
    if !g.is_connected() {
        return None;
    }
    let odd_blocks: Vec<Vec<Vertex>> = lowlink(g)
        .blocks
        .iter()
        .filter_map(|b| {
            let (sub, map) = g.induced(&b.vertices);
            shortest_odd_cycle(&sub).map(|c| c.into_iter().map(|v| map[v]).collect())
        })
        .take(2)
        .collect();
    if let [c1, c2] = odd_blocks.as_slice() {
        return join_cycles(g, c1, c2);
    }
    let c1 = shortest_odd_cycle(g)?;
    let len = c1.len();
    let used: Vec<EdgeId> = (0..len).map(|i| g.edge_id(c1[i], c1[(i + 1) % len]).unwrap()).collect();
    let rest = g.spanning_subgraph(|e| !used.contains(&e));
    let c2 = shortest_odd_cycle(&rest)?;
    join_cycles(g, &c1, &c2)
}

/// The graph with each component of the bridgeless core contracted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreContraction {
    pub f: Graph,
    /// Original vertex to contracted vertex (the core component index).
    pub vertex_map: Vec<Vertex>,
    /// `(bridge in g, edge in f)` pairs, by bridge id.
    pub edge_map: Vec<(EdgeId, EdgeId)>,
    pub is_path: bool,
}

pub fn contract_core_graph(g: &Graph) -> Result<CoreContraction, DecomposeError> {
    let core = bridgeless_core(g)?;
    let pairs: Vec<_> = core
        .bridges
        .iter()
        .map(|&e| {
            let (a, b) = g.edge(e);
            (core.component_of[a], core.component_of[b])
        })
        .collect();
    let f = Graph::new(core.components.len(), pairs.iter().copied()).expect("bridges join distinct components once");
    let edge_map = core.bridges.iter().zip(&pairs).map(|(&e, &(a, b))| (e, f.edge_id(a, b).unwrap())).collect();
    let is_path = f.is_tree() && f.max_degree() <= 2;
    Ok(CoreContraction { f, vertex_map: core.component_of, edge_map, is_path })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, path, star, theta, two_triangles_shared_vertex};

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.iter().copied()).unwrap()
    }

    /// Two 4-cycles 0-1-2-3 and 5-6-7-8 joined through vertex 4.
    fn two_squares_via_middle() -> Graph {
        g(9, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 5)])
    }

    #[test]
    fn bridge_examples() {
        assert_eq!(bridges(&path(4).unwrap()).unwrap().len(), 3);
        assert!(bridges(&cycle(5).unwrap()).unwrap().is_empty());
        let tri2 = g(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]);
        assert_eq!(bridges(&tri2).unwrap(), vec![tri2.edge_id(2, 3).unwrap()]);
        assert_eq!(bridges(&g(4, &[(0, 1), (2, 3)])), Err(DecomposeError::Disconnected));
    }

    #[test]
    fn block_examples() {
        let b = blocks(&two_triangles_shared_vertex()).unwrap();
        assert_eq!(b.len(), 2);
        assert!(b.iter().all(|b| b.vertices.len() == 3));
        let b = blocks(&path(3).unwrap()).unwrap();
        assert_eq!(b.len(), 2);
        assert!(b.iter().all(|b| b.edges.len() == 1));
        assert_eq!(blocks(&cycle(6).unwrap()).unwrap().len(), 1);
    }

    #[test]
    fn core_examples() {
        let core = bridgeless_core(&two_squares_via_middle()).unwrap();
        assert_eq!(core.components.len(), 3);
        let mid = &core.components[core.component_of[4]];
        assert!(!mid.nontrivial);
        assert_eq!(mid.incident_bridges, 2);
        assert_eq!(core.components[core.component_of[0]].incident_bridges, 1);
        assert!(core.satisfies_bridge_condition());

        let core = bridgeless_core(&star(3)).unwrap();
        assert_eq!(core.components.len(), 4);
        assert_eq!(core.components[0].incident_bridges, 3);
        assert!(!core.satisfies_bridge_condition());

        let core = bridgeless_core(&cycle(4).unwrap()).unwrap();
        assert_eq!(core.components.len(), 1);
        assert!(core.components[0].nontrivial);
        assert!(core.satisfies_bridge_condition());
    }

    #[test]
    fn bipartition_examples() {
        let b = bipartition(&cycle(4).unwrap()).unwrap();
        assert_eq!((b.class_x(), b.class_y()), (vec![0, 2], vec![1, 3]));
        assert!(bipartition(&cycle(5).unwrap()).is_none());
        let b = bipartition(&path(2).unwrap()).unwrap();
        assert_eq!((b.class_x(), b.class_y()), (vec![0], vec![1]));
    }

    #[test]
    fn odd_cycle_examples() {
        assert_eq!(shortest_odd_cycle(&cycle(5).unwrap()).unwrap().len(), 5);
        assert!(shortest_odd_cycle(&cycle(6).unwrap()).is_none());
        let t = shortest_odd_cycle(&complete(4)).unwrap();
        assert_eq!(t, vec![0, 1, 2]);
        // C5 with a pendant triangle far away: shortest is the triangle
        let h = g(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5), (5, 6), (6, 7), (7, 5)]);
        assert_eq!(shortest_odd_cycle(&h).unwrap().len(), 3);
    }

    #[test]
    fn disjoint_path_examples() {
        let (p, q) = two_disjoint_paths(&complete(4), 3, &[0, 1, 2]).unwrap();
        assert_eq!((p.len(), q.len()), (2, 2));
        assert_ne!(p[1], q[1]);

        // theta(2,2,1): u = 0, v = 2, cycle vertex 1 and 3 off {u, v}
        let t = theta(2, 2, 1).unwrap();
        let (p, q) = two_disjoint_paths(&t, 1, &[0, 2]).unwrap();
        let mut ends = vec![*p.last().unwrap(), *q.last().unwrap()];
        ends.sort_unstable();
        assert_eq!(ends, vec![0, 2]);
        assert_eq!((p.len(), q.len()), (2, 2));

        assert_eq!(two_disjoint_paths(&path(3).unwrap(), 0, &[2]), Err(DecomposeError::BadTarget));
        assert_eq!(two_disjoint_paths(&path(3).unwrap(), 0, &[1, 2]), Err(DecomposeError::NoDisjointPaths(0)));
    }

    #[test]
    fn disjoint_odd_cycle_examples() {
        let pair = disjoint_odd_cycles(&two_triangles_shared_vertex()).unwrap();
        assert_eq!(pair.connector, vec![0]);
        assert_eq!((pair.c1.len(), pair.c2.len()), (3, 3));

        // triangles 0-1-2 and 4-5-6 joined by the path 2-3-4
        let joined = g(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)]);
        let pair = disjoint_odd_cycles(&joined).unwrap();
        assert_eq!(pair.connector, vec![2, 3, 4]);

        assert!(disjoint_odd_cycles(&cycle(5).unwrap()).is_none());
    }

    #[test]
    fn contraction_examples() {
        let c = contract_core_graph(&two_squares_via_middle()).unwrap();
        assert_eq!((c.f.n(), c.f.m()), (3, 2));
        assert!(c.is_path);
        let c = contract_core_graph(&cycle(4).unwrap()).unwrap();
        assert_eq!(c.f.n(), 1);
        assert!(c.is_path);
        let c = contract_core_graph(&star(3)).unwrap();
        assert_eq!(c.f, star(3));
        assert!(!c.is_path);
    }
}
