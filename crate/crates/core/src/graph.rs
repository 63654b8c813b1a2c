//! Simple graphs, digraphs, edge colorings and walks.
//!
//! Edges are stored in canonical order (lexicographic on `(min, max)`) and
//! addressed by their index in that order. Colorings are indexed the same
//! way, so a coloring is just a `Vec<Color>` paired with the palette size.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Vertex ids are dense, `0..n`.
pub type Vertex = usize;
/// Index of an edge (or arc) in canonical order.
pub type EdgeId = usize;
/// Colors are 1-based.
pub type Color = u8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate edge {0} {1}")]
    Duplicate(Vertex, Vertex),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("coloring has {got} entries but the graph has {expected} edges")]
    ColoringLength { expected: usize, got: usize },
    #[error("color {color} outside 1..={k}")]
    ColorOutOfRange { color: Color, k: Color },
    #[error("no edge {0} {1}")]
    MissingEdge(Vertex, Vertex),
}

/// A simple undirected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<(Vertex, EdgeId)>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph, normalizing every pair to `(min, max)` and sorting.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, GraphError> {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::Loop(a));
            }
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::Duplicate(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for (id, &(a, b)) in list.iter().enumerate() {
            adj[a].push((b, id));
            adj[b].push((a, id));
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Self { n, edges: list, adj })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (Vertex, Vertex) {
        self.edges[id]
    }

    /// Neighbors of `v` with the connecting edge id, sorted by neighbor.
    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_id(&self, a: Vertex, b: Vertex) -> Option<EdgeId> {
        if a >= self.n || b >= self.n {
            return None;
        }
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.edge_id(a, b).is_some()
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reachable_from(0).iter().all(|&r| r)
    }

    pub fn reachable_from(&self, s: Vertex) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([s]);
        seen[s] = true;
        while let Some(v) = queue.pop_front() {
            for &(w, _) in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() == self.n - 1 && self.is_connected()
    }

    /// Subgraph induced by `vertices`, relabeled in the given order.
    /// Returns the subgraph and the map from new ids back to old ones.
    pub fn induced(&self, vertices: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
            .map(|&(a, b)| (index[a], index[b]));
        let g = Graph::new(vertices.len(), edges).expect("induced subgraph of a simple graph is simple");
        (g, vertices.to_vec())
    }

    /// Spanning subgraph keeping only the edges for which `keep` holds.
    /// Edge ids change; vertex ids are preserved.
    pub fn spanning_subgraph(&self, mut keep: impl FnMut(EdgeId) -> bool) -> Graph {
        let edges: Vec<_> = (0..self.m()).filter(|&e| keep(e)).map(|e| self.edges[e]).collect();
        Graph::new(self.n, edges).expect("subgraph of a simple graph is simple")
    }
}

/// A simple digraph; antiparallel arcs are allowed.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(Vertex, Vertex)>,
    out: Vec<Vec<(Vertex, EdgeId)>>,
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs)
    }
}

impl Digraph {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, GraphError> {
        let mut list = Vec::new();
        for (a, b) in arcs {
            if a == b {
                return Err(GraphError::Loop(a));
            }
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            list.push((a, b));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::Duplicate(w[0].0, w[0].1));
        }
        let mut out = vec![Vec::new(); n];
        for (id, &(a, b)) in list.iter().enumerate() {
            out[a].push((b, id));
        }
        Ok(Self { n, arcs: list, out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    pub fn out_arcs(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.out[v]
    }

    pub fn arc_id(&self, a: Vertex, b: Vertex) -> Option<EdgeId> {
        self.arcs.binary_search(&(a, b)).ok()
    }

    pub fn is_strongly_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let forward = directed_reach(self.n, |v| self.out[v].iter().map(|&(w, _)| w).collect(), 0);
        if !forward.iter().all(|&r| r) {
            return false;
        }
        let mut rev = vec![Vec::new(); self.n];
        for &(a, b) in &self.arcs {
            rev[b].push(a);
        }
        directed_reach(self.n, |v| rev[v].clone(), 0).iter().all(|&r| r)
    }
}

pub(crate) fn directed_reach(n: usize, succ: impl Fn(Vertex) -> Vec<Vertex>, s: Vertex) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[s] = true;
    let mut stack = vec![s];
    while let Some(v) = stack.pop() {
        for w in succ(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// A total assignment of colors `1..=k` to the edges (or arcs) of a graph,
/// indexed by canonical edge id.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    k: Color,
    colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn new(k: Color, colors: Vec<Color>) -> Result<Self, GraphError> {
        if let Some(&bad) = colors.iter().find(|&&c| c == 0 || c > k) {
            return Err(GraphError::ColorOutOfRange { color: bad, k });
        }
        Ok(Self { k, colors })
    }

    /// Every edge gets `color`; `k` is `color`.
    pub fn uniform(m: usize, color: Color) -> Self {
        Self { k: color.max(1), colors: vec![color.max(1); m] }
    }

    /// Palette size; colors need not all be used.
    pub fn k(&self) -> Color {
        self.k
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, e: EdgeId) -> Color {
        self.colors[e]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Largest color actually used (0 for an edgeless graph).
    pub fn max_used(&self) -> Color {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn check_len(&self, m: usize) -> Result<(), GraphError> {
        if self.colors.len() != m {
            return Err(GraphError::ColoringLength { expected: m, got: self.colors.len() });
        }
        Ok(())
    }
}

/// A walk given by its start vertex and edge sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    pub start: Vertex,
    pub edges: Vec<EdgeId>,
}

impl Walk {
    /// The vertex sequence, or `None` if consecutive edges are not incident.
    pub fn vertices(&self, g: &Graph) -> Option<Vec<Vertex>> {
        let mut seq = vec![self.start];
        let mut at = self.start;
        for &e in &self.edges {
            let (a, b) = *g.edges().get(e)?;
            at = if a == at {
                b
            } else if b == at {
                a
            } else {
                return None;
            };
            seq.push(at);
        }
        Some(seq)
    }

    pub fn end(&self, g: &Graph) -> Option<Vertex> {
        self.vertices(g).map(|v| *v.last().unwrap())
    }

    pub fn is_properly_colored(&self, g: &Graph, c: &EdgeColoring) -> bool {
        self.vertices(g).is_some() && self.edges.windows(2).all(|w| c.color(w[0]) != c.color(w[1]))
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Whether the coloring is exact or only an upper bound on the minimum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Exact,
    UpperBound,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Exact => "exact",
            Status::UpperBound => "upper-bound",
        })
    }
}

/// Which construction produced a coloring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Complete,
    Tree,
    Unicyclic,
    Bipartite,
    TwoOddCycles,
    SpanningOddCycle,
    Theta,
    Bridgeless,
    CycleFeet,
    Exact,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Complete => "complete",
            Route::Tree => "tree",
            Route::Unicyclic => "unicyclic",
            Route::Bipartite => "bipartite",
            Route::TwoOddCycles => "two-odd",
            Route::SpanningOddCycle => "spanning-odd-cycle",
            Route::Theta => "theta",
            Route::Bridgeless => "bridgeless",
            Route::CycleFeet => "cycle-feet",
            Route::Exact => "exact",
        })
    }
}

/// A verified coloring together with what is known about its optimality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringResult {
    pub k: Color,
    pub coloring: EdgeColoring,
    pub status: Status,
    pub route: Route,
}

impl ColoringResult {
    pub fn summary(&self) -> String {
        format!("pW <= {} ({}) via {}", self.k, self.status, self.route)
    }
}
