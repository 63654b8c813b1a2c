//! Strongly connected orientations of 2-edge-connected graphs, and the
//! path-anchored orientation used inside blocks.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::decompose::{self, DecomposeError};
use crate::graph::{directed_reach, EdgeId, Graph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrientError {
    #[error("graph needs at least two vertices")]
    Trivial,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("edge {0} {1} is a bridge")]
    Bridge(Vertex, Vertex),
    #[error("anchor path is not a path of the graph")]
    BadPath,
    #[error("vertex {0} lacks two internally disjoint paths to distinct anchor-path vertices")]
    Anchor(Vertex),
    #[error("anchor ordering failed at vertex {0}")]
    AnchorOrder(Vertex),
}

/// Directions for (a subset of) the edges of an underlying graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    arcs: Vec<Option<(Vertex, Vertex)>>,
}

impl Orientation {
    pub fn unoriented(m: usize) -> Self {
        Self { arcs: vec![None; m] }
    }

    pub fn set(&mut self, g: &Graph, tail: Vertex, head: Vertex) {
        let e = g.edge_id(tail, head).expect("orienting a missing edge");
        self.arcs[e] = Some((tail, head));
    }

    pub fn arc(&self, e: EdgeId) -> Option<(Vertex, Vertex)> {
        self.arcs[e]
    }

    pub fn head(&self, e: EdgeId) -> Option<Vertex> {
        self.arcs[e].map(|(_, h)| h)
    }

    pub fn is_total(&self) -> bool {
        self.arcs.iter().all(Option::is_some)
    }

    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.arcs.iter().flatten().copied()
    }

    fn successors(&self, n: usize) -> Vec<Vec<Vertex>> {
        let mut succ = vec![Vec::new(); n];
        for (a, b) in self.arcs() {
            succ[a].push(b);
        }
        succ
    }

    /// Vertices reachable from `s` along oriented edges.
    pub fn reach(&self, n: usize, s: Vertex) -> Vec<bool> {
        let succ = self.successors(n);
        directed_reach(n, |v| succ[v].clone(), s)
    }

    pub fn is_strongly_connected(&self, n: usize) -> bool {
        (0..n).all(|s| self.reach(n, s).iter().all(|&r| r))
    }
}

/// DFS orientation: tree edges point away from the root, back edges toward
/// it. Strongly connected exactly when the graph is 2-edge-connected.
pub fn robbins_orientation(h: &Graph) -> Result<Orientation, OrientError> {
    if h.n() < 2 {
        return Err(OrientError::Trivial);
    }
    let bridges = decompose::bridges(h).map_err(|_| OrientError::Disconnected)?;
    if let Some(&e) = bridges.first() {
        let (a, b) = h.edge(e);
        return Err(OrientError::Bridge(a, b));
    }
    let mut orientation = Orientation::unoriented(h.m());
    let mut depth = vec![usize::MAX; h.n()];
    depth[0] = 0;
    let mut stack: Vec<(Vertex, usize)> = vec![(0, 0)];
    while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
        let Some(&(w, e)) = h.neighbors(v).get(*idx) else {
            stack.pop();
            continue;
        };
        *idx += 1;
        if orientation.arc(e).is_some() {
            continue;
        }
        if depth[w] == usize::MAX {
            depth[w] = depth[v] + 1;
            orientation.set(h, v, w);
            stack.push((w, 0));
        } else {
            // back edge from a descendant to an ancestor
            orientation.set(h, v, w);
        }
    }
    assert!(orientation.is_strongly_connected(h.n()), "orientation of a bridgeless graph must be strong");
    Ok(orientation)
}

/// For a vertex off the anchor path: a path vertex that reaches it and a
/// path vertex it reaches, with `q` strictly nearer the path's end.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Anchor {
    pub q: Vertex,
    pub r: Vertex,
}

pub type PathAnchors = BTreeMap<Vertex, Anchor>;

/// Orients a spanning subgraph of `h` so that `path` runs from its first to
/// its last vertex, the first vertex reaches everything, and every pair is
/// joined by a directed walk in at least one direction.
///
/// Grows the oriented subgraph one ear at a time: the lowest unreached
/// vertex gets its two disjoint paths to `path`, each cut at its first
/// vertex already reached; one is oriented toward the new vertex, the other
/// away from it, ordered so that the entry anchor lies strictly nearer the
/// end of `path` than the exit anchor.
pub fn lemma_orientation(h: &Graph, path: &[Vertex]) -> Result<(Orientation, PathAnchors), OrientError> {
    if path.is_empty() {
        return Err(OrientError::BadPath);
    }
    let mut pos = vec![usize::MAX; h.n()];
    for (i, &x) in path.iter().enumerate() {
        if x >= h.n() || pos[x] != usize::MAX {
            return Err(OrientError::BadPath);
        }
        pos[x] = i;
    }
    let mut orientation = Orientation::unoriented(h.m());
    for w in path.windows(2) {
        if !h.has_edge(w[0], w[1]) {
            return Err(OrientError::BadPath);
        }
        orientation.set(h, w[0], w[1]);
    }

    let off_path: Vec<Vertex> = (0..h.n()).filter(|&x| pos[x] == usize::MAX).collect();
    let mut disjoint = BTreeMap::new();
    for &w in &off_path {
        let paths = decompose::two_disjoint_paths(h, w, path).map_err(|e| match e {
            DecomposeError::NoDisjointPaths(_) | DecomposeError::BadTarget | DecomposeError::Disconnected => {
                OrientError::Anchor(w)
            }
        })?;
        disjoint.insert(w, paths);
    }

    // q = r = k for path vertices
    let mut anchor: Vec<Option<Anchor>> = (0..h.n()).map(|x| (pos[x] != usize::MAX).then_some(Anchor { q: x, r: x })).collect();
    let mut anchors = PathAnchors::new();
    while let Some(&w) = off_path.iter().find(|&&x| anchor[x].is_none()) {
        let (p1, p2) = &disjoint[&w];
        let cut = |p: &Vec<Vertex>| -> Vec<Vertex> {
            let end = p.iter().skip(1).position(|&x| anchor[x].is_some()).expect("paths end on the anchor path") + 1;
            p[..=end].to_vec()
        };
        let (mut l1, mut l2) = (cut(p1), cut(p2));
        let nearer = |a: &Vec<Vertex>, b: &Vec<Vertex>| {
            let qa = anchor[*a.last().unwrap()].unwrap().q;
            let rb = anchor[*b.last().unwrap()].unwrap().r;
            pos[qa] > pos[rb]
        };
        if !nearer(&l1, &l2) {
            std::mem::swap(&mut l1, &mut l2);
            if !nearer(&l1, &l2) {
                return Err(OrientError::AnchorOrder(w));
            }
        }
        let new = Anchor { q: anchor[*l1.last().unwrap()].unwrap().q, r: anchor[*l2.last().unwrap()].unwrap().r };
        // l1 is oriented from its contact toward w, l2 from w to its contact
        for s in l1.windows(2) {
            orientation.set(h, s[1], s[0]);
        }
        for s in l2.windows(2) {
            orientation.set(h, s[0], s[1]);
        }
        for &x in l1[..l1.len() - 1].iter().chain(&l2[1..l2.len() - 1]) {
            anchor[x] = Some(new);
            anchors.insert(x, new);
        }
    }
    Ok((orientation, anchors))
}
