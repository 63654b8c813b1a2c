//! Deterministic generators for the graph families used throughout the crate,
//! and exhaustive iteration over small labeled graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Digraph, Graph, Vertex};
use crate::io::AnyGraph;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenerateError {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParams { family: &'static str, reason: String },
    #[error("no connected sample after {0} attempts")]
    NoConnectedSample(usize),
}

fn invalid(family: &'static str, reason: impl Into<String>) -> GenerateError {
    GenerateError::InvalidParams { family, reason: reason.into() }
}

/// A named family with its parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Theta { a: usize, b: usize, p: usize },
    CycleWithFeet { n: usize, feet: Vec<usize> },
    TwoTrianglesSharedVertex,
    Petersen,
    BowtieDigraph,
    DirectedCycle(usize),
    RandomConnected { n: usize, p: f64, seed: u64 },
}

pub fn generate(family: &Family) -> Result<AnyGraph, GenerateError> {
    use AnyGraph::{Directed, Undirected};
    Ok(match family {
        Family::Path(n) => Undirected(path(*n)?),
        Family::Cycle(n) => Undirected(cycle(*n)?),
        Family::Complete(n) => Undirected(complete(*n)),
        Family::Star(l) => Undirected(star(*l)),
        Family::Theta { a, b, p } => Undirected(theta(*a, *b, *p)?),
        Family::CycleWithFeet { n, feet } => Undirected(cycle_with_feet(*n, feet)?),
        Family::TwoTrianglesSharedVertex => Undirected(two_triangles_shared_vertex()),
        Family::Petersen => Undirected(petersen()),
        Family::BowtieDigraph => Directed(bowtie_digraph()),
        Family::DirectedCycle(n) => Directed(directed_cycle(*n)?),
        Family::RandomConnected { n, p, seed } => Undirected(random_connected(*n, *p, *seed)?),
    })
}

pub fn path(n: usize) -> Result<Graph, GenerateError> {
    if n == 0 {
        return Err(invalid("path", "need at least one vertex"));
    }
    Ok(Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap())
}

pub fn cycle(n: usize) -> Result<Graph, GenerateError> {
    if n < 3 {
        return Err(invalid("cycle", "need at least 3 vertices"));
    }
    Ok(Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap())
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
}

/// K_{1,leaves} with center 0.
pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
}

/// Outer cycle made of a u–v path of length `a` and a v–u path of length `b`,
/// plus an inverter u–v path of length `p`. Here u = 0 and v = a; the first
/// arc runs through 1..a, the second through new vertices, then the inverter.
pub fn theta(a: usize, b: usize, p: usize) -> Result<Graph, GenerateError> {
    if a == 0 || b == 0 || p == 0 {
        return Err(invalid("theta", "path lengths must be positive"));
    }
    if !(a + b).is_multiple_of(2) {
        return Err(invalid("theta", "outer cycle a + b must be even"));
    }
    if a + b < 4 {
        return Err(invalid("theta", "outer cycle needs at least 4 vertices"));
    }
    if p % 2 == a % 2 {
        return Err(invalid("theta", "inverter parity must differ from the arcs or the result is bipartite"));
    }
    let (u, v) = (0, a);
    let mut edges: Vec<(Vertex, Vertex)> = (1..=a).map(|i| (i - 1, i)).collect();
    let mut next = a + 1;
    edges.extend(chain(v, u, b, &mut next));
    edges.extend(chain(u, v, p, &mut next));
    Graph::new(next, edges).map_err(|e| invalid("theta", e.to_string()))
}

fn chain(from: Vertex, to: Vertex, len: usize, next: &mut usize) -> Vec<(Vertex, Vertex)> {
    let mut edges = Vec::with_capacity(len);
    let mut at = from;
    for _ in 1..len {
        edges.push((at, *next));
        at = *next;
        *next += 1;
    }
    edges.push((at, to));
    edges
}

/// Odd cycle `0..n` with `feet[i]` pendant vertices on cycle vertex `i`;
/// feet are numbered from `n` in cycle order.
pub fn cycle_with_feet(n: usize, feet: &[usize]) -> Result<Graph, GenerateError> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(invalid("cycle_with_feet", "cycle length must be odd and at least 3"));
    }
    if feet.len() != n {
        return Err(invalid("cycle_with_feet", format!("expected {n} feet counts, got {}", feet.len())));
    }
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let mut next = n;
    for (i, &f) in feet.iter().enumerate() {
        for _ in 0..f {
            edges.push((i, next));
            next += 1;
        }
    }
    Ok(Graph::new(next, edges).unwrap())
}

/// Triangles 0-1-2 and 0-3-4.
pub fn two_triangles_shared_vertex() -> Graph {
    Graph::new(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap()
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, edges).unwrap()
}

/// Directed triangles 0→1→2→0 and 0→3→4→0.
pub fn bowtie_digraph() -> Digraph {
    Digraph::new(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap()
}

pub fn directed_cycle(n: usize) -> Result<Digraph, GenerateError> {
    if n < 2 {
        return Err(invalid("directed_cycle", "need at least 2 vertices"));
    }
    Ok(Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap())
}

const RANDOM_ATTEMPTS: usize = 100_000;

/// Erdős–Rényi G(n, p), resampled until connected. Deterministic in `seed`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph, GenerateError> {
    if n == 0 {
        return Err(invalid("random_connected", "need at least one vertex"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid("random_connected", "p must lie in [0, 1]"));
    }
    if p == 0.0 && n > 1 {
        return Err(invalid("random_connected", "p = 0 never yields a connected graph"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_ATTEMPTS {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(p) {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::new(n, edges).unwrap();
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(GenerateError::NoConnectedSample(RANDOM_ATTEMPTS))
}

/// Number of vertex pairs, i.e. bits in an edge mask on `n` vertices.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// The labeled graph on `n` vertices whose edges are the set bits of `mask`
/// (pairs enumerated lexicographically), if it is connected.
pub fn connected_graph_from_mask(n: usize, mask: u64) -> Option<Graph> {
    let mut adj = [0u64; 64];
    let mut bit = 0;
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if mask >> bit & 1 == 1 {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
                edges.push((a, b));
            }
            bit += 1;
        }
    }
    if n > 0 {
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        if seen != full {
            return None;
        }
    }
    Some(Graph::new(n, edges).unwrap())
}

/// Every connected labeled graph on exactly `n` vertices.
pub fn labeled_connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 11, "2^{} masks is too many to enumerate", pair_count(n));
    (0..1u64 << pair_count(n)).filter_map(move |mask| connected_graph_from_mask(n, mask))
}

/// Every connected labeled graph on 1..=`max_n` vertices.
pub fn labeled_connected_graphs_up_to(max_n: usize) -> impl Iterator<Item = Graph> {
    (1..=max_n).flat_map(labeled_connected_graphs)
}

/// Every labeled tree on 1..=`max_n` vertices, via Prüfer sequences.
pub fn labeled_trees_up_to(max_n: usize) -> Vec<Graph> {
    let mut out = vec![Graph::empty(1)];
    if max_n >= 2 {
        out.push(path(2).unwrap());
    }
    for n in 3..=max_n {
        let total = n.pow((n - 2) as u32);
        for code in 0..total {
            let mut seq = Vec::with_capacity(n - 2);
            let mut c = code;
            for _ in 0..n - 2 {
                seq.push(c % n);
                c /= n;
            }
            out.push(prufer_tree(n, &seq));
        }
    }
    out
}

fn prufer_tree(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<_> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).unwrap()
}
