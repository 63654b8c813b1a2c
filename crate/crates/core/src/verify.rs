//! Properly colored walk and path reachability.
//!
//! Walks are searched in the state graph whose states are
//! `(vertex, color of the last edge)`, with one extra start state per
//! source carrying no color. An edge may be taken from a state when its
//! color differs from the state's color.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{Color, Digraph, EdgeColoring, EdgeId, Graph, GraphError, Vertex, Walk};

/// Exhaustive simple-path search is limited to this many vertices.
pub const PATH_SEARCH_MAX_VERTICES: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error(transparent)]
    Coloring(#[from] GraphError),
    #[error("path search limited to {PATH_SEARCH_MAX_VERTICES} vertices, graph has {0}")]
    TooLarge(usize),
}

/// Outcome of an all-pairs check; the failing pair is the first in
/// lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairCheck {
    Pass,
    Fail { u: Vertex, v: Vertex },
}

impl PairCheck {
    pub fn is_pass(self) -> bool {
        self == PairCheck::Pass
    }
}

struct StateSearch {
    width: usize,
    parent: Vec<Option<(usize, EdgeId)>>,
    seen: Vec<bool>,
}

impl StateSearch {
    fn state(&self, v: Vertex, c: Color) -> usize {
        v * self.width + usize::from(c)
    }

    fn reached(&self, v: Vertex, colors: Option<&[Color]>) -> Option<usize> {
        (1..self.width)
            .map(|c| self.state(v, c as Color))
            .find(|&s| self.seen[s] && colors.is_none_or(|cs| cs.contains(&((s % self.width) as Color))))
    }

    fn vertex_reached(&self, v: Vertex) -> bool {
        self.reached(v, None).is_some()
    }

    fn walk_to(&self, source: Vertex, mut s: usize) -> Walk {
        let mut edges = Vec::new();
        while let Some((prev, e)) = self.parent[s] {
            edges.push(e);
            s = prev;
        }
        edges.reverse();
        Walk { start: source, edges }
    }
}

fn search<'a>(
    n: usize,
    c: &EdgeColoring,
    succ: impl Fn(Vertex) -> &'a [(Vertex, EdgeId)],
    source: Vertex,
    start_colors: Option<&[Color]>,
) -> StateSearch {
    let width = usize::from(c.k()) + 1;
    let mut st = StateSearch { width, parent: vec![None; n * width], seen: vec![false; n * width] };
    let start = st.state(source, 0);
    st.seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        let (v, last) = (s / width, (s % width) as Color);
        for &(w, e) in succ(v) {
            let col = c.color(e);
            if col == last || (last == 0 && start_colors.is_some_and(|cs| !cs.contains(&col))) {
                continue;
            }
            let t = st.state(w, col);
            if !st.seen[t] {
                st.seen[t] = true;
                st.parent[t] = Some((s, e));
                queue.push_back(t);
            }
        }
    }
    st
}

fn check_vertex(n: usize, v: Vertex) -> Result<(), VerifyError> {
    if v >= n {
        Err(VerifyError::UnknownVertex(v))
    } else {
        Ok(())
    }
}

/// A properly colored walk from `u` to `v` whose first edge color lies in
/// `start_colors` and last edge color in `end_colors`, when given.
///
/// Without constraints `u` reaches itself by the empty walk. The returned
/// walk is a fewest-edges walk in the state graph.
pub fn walk_reachable(
    g: &Graph,
    c: &EdgeColoring,
    u: Vertex,
    v: Vertex,
    start_colors: Option<&[Color]>,
    end_colors: Option<&[Color]>,
) -> Result<Option<Walk>, VerifyError> {
    c.check_len(g.m())?;
    check_vertex(g.n(), u)?;
    check_vertex(g.n(), v)?;
    if u == v && start_colors.is_none() && end_colors.is_none() {
        return Ok(Some(Walk { start: u, edges: Vec::new() }));
    }
    let st = search(g.n(), c, |x| g.neighbors(x), u, start_colors);
    Ok(st.reached(v, end_colors).map(|s| st.walk_to(u, s)))
}

/// Checks every unordered pair of distinct vertices, one state-graph search
/// per source.
pub fn verify_all_pairs(g: &Graph, c: &EdgeColoring) -> Result<PairCheck, VerifyError> {
    c.check_len(g.m())?;
    for u in 0..g.n() {
        let st = search(g.n(), c, |x| g.neighbors(x), u, None);
        if let Some(v) = (u + 1..g.n()).find(|&v| !st.vertex_reached(v)) {
            return Ok(PairCheck::Fail { u, v });
        }
    }
    Ok(PairCheck::Pass)
}

pub fn walk_reachable_directed(d: &Digraph, c: &EdgeColoring, u: Vertex, v: Vertex) -> Result<bool, VerifyError> {
    c.check_len(d.m())?;
    check_vertex(d.n(), u)?;
    check_vertex(d.n(), v)?;
    if u == v {
        return Ok(true);
    }
    Ok(search(d.n(), c, |x| d.out_arcs(x), u, None).vertex_reached(v))
}

/// Checks every ordered pair of distinct vertices.
pub fn verify_all_pairs_directed(d: &Digraph, c: &EdgeColoring) -> Result<PairCheck, VerifyError> {
    c.check_len(d.m())?;
    for u in 0..d.n() {
        let st = search(d.n(), c, |x| d.out_arcs(x), u, None);
        if let Some(v) = (0..d.n()).find(|&v| v != u && !st.vertex_reached(v)) {
            return Ok(PairCheck::Fail { u, v });
        }
    }
    Ok(PairCheck::Pass)
}

/// Marks every vertex reachable from `source` by a properly colored simple
/// path, stopping once `want` is all reached.
fn simple_paths<'a>(
    n: usize,
    c: &EdgeColoring,
    succ: &dyn Fn(Vertex) -> &'a [(Vertex, EdgeId)],
    source: Vertex,
    want: &dyn Fn(Vertex) -> bool,
) -> Vec<bool> {
    fn dfs<'a>(
        v: Vertex,
        last: Color,
        c: &EdgeColoring,
        succ: &dyn Fn(Vertex) -> &'a [(Vertex, EdgeId)],
        on_path: &mut [bool],
        reached: &mut [bool],
        missing: &mut usize,
        want: &dyn Fn(Vertex) -> bool,
    ) {
        for &(w, e) in succ(v) {
            if *missing == 0 {
                return;
            }
            let col = c.color(e);
            if col == last || on_path[w] {
                continue;
            }
            if !reached[w] {
                reached[w] = true;
                if want(w) {
                    *missing -= 1;
                }
            }
            on_path[w] = true;
            dfs(w, col, c, succ, on_path, reached, missing, want);
            on_path[w] = false;
        }
    }
    let mut on_path = vec![false; n];
    let mut reached = vec![false; n];
    let mut missing = (0..n).filter(|&v| v != source && want(v)).count();
    on_path[source] = true;
    reached[source] = true;
    dfs(source, 0, c, succ, &mut on_path, &mut reached, &mut missing, want);
    reached
}

fn guard(n: usize) -> Result<(), VerifyError> {
    if n > PATH_SEARCH_MAX_VERTICES {
        Err(VerifyError::TooLarge(n))
    } else {
        Ok(())
    }
}

/// Whether a properly colored simple path joins `u` and `v`. Exhaustive.
pub fn path_reachable(g: &Graph, c: &EdgeColoring, u: Vertex, v: Vertex) -> Result<bool, VerifyError> {
    guard(g.n())?;
    c.check_len(g.m())?;
    check_vertex(g.n(), u)?;
    check_vertex(g.n(), v)?;
    Ok(simple_paths(g.n(), c, &|x| g.neighbors(x), u, &|x| x == v)[v])
}

pub fn verify_all_pairs_path(g: &Graph, c: &EdgeColoring) -> Result<PairCheck, VerifyError> {
    guard(g.n())?;
    c.check_len(g.m())?;
    for u in 0..g.n() {
        let reached = simple_paths(g.n(), c, &|x| g.neighbors(x), u, &|x| x > u);
        if let Some(v) = (u + 1..g.n()).find(|&v| !reached[v]) {
            return Ok(PairCheck::Fail { u, v });
        }
    }
    Ok(PairCheck::Pass)
}

pub fn path_reachable_directed(d: &Digraph, c: &EdgeColoring, u: Vertex, v: Vertex) -> Result<bool, VerifyError> {
    guard(d.n())?;
    c.check_len(d.m())?;
    check_vertex(d.n(), u)?;
    check_vertex(d.n(), v)?;
    Ok(simple_paths(d.n(), c, &|x| d.out_arcs(x), u, &|x| x == v)[v])
}

pub fn verify_all_pairs_directed_path(d: &Digraph, c: &EdgeColoring) -> Result<PairCheck, VerifyError> {
    guard(d.n())?;
    c.check_len(d.m())?;
    for u in 0..d.n() {
        let reached = simple_paths(d.n(), c, &|x| d.out_arcs(x), u, &|x| x != u);
        if let Some(v) = (0..d.n()).find(|&v| !reached[v]) {
            return Ok(PairCheck::Fail { u, v });
        }
    }
    Ok(PairCheck::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{bowtie_digraph, complete, cycle, directed_cycle, path, star};

    fn col(k: Color, v: &[Color]) -> EdgeColoring {
        EdgeColoring::new(k, v.to_vec()).unwrap()
    }

    #[test]
    fn walk_examples() {
        let p = path(3).unwrap();
        assert_eq!(walk_reachable(&p, &col(1, &[1, 1]), 0, 2, None, None).unwrap(), None);
        let w = walk_reachable(&p, &col(2, &[1, 2]), 0, 2, None, None).unwrap().unwrap();
        assert_eq!(w.vertices(&p).unwrap(), vec![0, 1, 2]);
        let t = complete(3);
        for (u, v) in [(0, 1), (0, 2), (1, 2)] {
            let w = walk_reachable(&t, &EdgeColoring::uniform(3, 1), u, v, None, None).unwrap().unwrap();
            assert_eq!(w.len(), 1);
        }
        assert_eq!(walk_reachable(&p, &col(2, &[1, 2]), 0, 3, None, None), Err(VerifyError::UnknownVertex(3)));
        assert!(matches!(walk_reachable(&p, &col(2, &[1]), 0, 2, None, None), Err(VerifyError::Coloring(_))));
    }

    #[test]
    fn color_constrained_walks() {
        // C4 alternating: 0-1 (1), 1-2 (2), 2-3 (1), 0-3 (2)
        let c4 = cycle(4).unwrap();
        let c = EdgeColoring::new(
            2,
            c4.edges().iter().map(|&(a, b)| if (a, b) == (0, 3) { 2 } else { (a % 2 + 1) as Color }).collect(),
        )
        .unwrap();
        assert!(verify_all_pairs(&c4, &c).unwrap().is_pass());
        let w = walk_reachable(&c4, &c, 0, 0, Some(&[1]), None).unwrap().unwrap();
        assert_eq!(w.len(), 4);
        assert!(w.is_properly_colored(&c4, &c));
        assert_eq!(c.color(w.edges[0]), 1);
        // from 0 to 2: starting with color 1 forces ending with color 2
        assert!(walk_reachable(&c4, &c, 0, 2, Some(&[1]), Some(&[1])).unwrap().is_none());
        assert!(walk_reachable(&c4, &c, 0, 2, Some(&[1]), Some(&[2])).unwrap().is_some());
    }

    #[test]
    fn all_pairs_examples() {
        let c4 = cycle(4).unwrap();
        assert_eq!(verify_all_pairs(&c4, &EdgeColoring::uniform(4, 1)).unwrap(), PairCheck::Fail { u: 0, v: 2 });
        assert!(verify_all_pairs(&star(3), &col(3, &[1, 2, 3])).unwrap().is_pass());
        assert!(!verify_all_pairs(&star(3), &col(2, &[1, 2, 2])).unwrap().is_pass());
    }

    #[test]
    fn path_examples() {
        let t = complete(3);
        let c = col(2, &[1, 1, 2]);
        for (u, v) in [(0, 1), (0, 2), (1, 2)] {
            assert!(path_reachable(&t, &c, u, v).unwrap());
        }
        assert!(!path_reachable(&path(3).unwrap(), &col(1, &[1, 1]), 0, 2).unwrap());
        assert_eq!(verify_all_pairs_path(&path(17).unwrap(), &EdgeColoring::uniform(16, 1)), Err(VerifyError::TooLarge(17)));
    }

    #[test]
    fn walk_beats_path() {
        // triangle 0-1-2 (0-1 and 0-2 color 2, 1-2 color 1), tails 0-3 and 0-4 color 1
        let g = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)]).unwrap();
        let c = col(2, &[2, 2, 1, 1, 1]);
        let w = walk_reachable(&g, &c, 3, 4, None, None).unwrap().unwrap();
        assert_eq!(w.vertices(&g).unwrap(), vec![3, 0, 1, 2, 0, 4]);
        assert!(!path_reachable(&g, &c, 3, 4).unwrap());
        assert!(verify_all_pairs(&g, &c).unwrap().is_pass());
        assert_eq!(verify_all_pairs_path(&g, &c).unwrap(), PairCheck::Fail { u: 3, v: 4 });
    }

    #[test]
    fn directed_examples() {
        let d = directed_cycle(3).unwrap();
        assert!(!walk_reachable_directed(&d, &EdgeColoring::uniform(3, 1), 0, 2).unwrap());
        let c = col(3, &[1, 2, 3]);
        assert!(verify_all_pairs_directed(&d, &c).unwrap().is_pass());
        assert!(verify_all_pairs_directed_path(&d, &c).unwrap().is_pass());
        let b = bowtie_digraph();
        // arcs: 0→1, 0→3, 1→2, 2→0, 3→4, 4→0
        let c = col(2, &[1, 2, 2, 1, 1, 2]);
        assert!(verify_all_pairs_directed(&b, &c).unwrap().is_pass());
        assert!(!verify_all_pairs_directed_path(&b, &c).unwrap().is_pass());
    }
}
