//! Exhaustive minimum-color search for small graphs and digraphs.
//!
//! Colorings are enumerated in canonical form: the first edge gets color 1
//! and each color index first appears after all smaller ones, in canonical
//! edge order. That removes the k! color permutations of each coloring.
//! Within a level the first accepted coloring is the canonically smallest.

use thiserror::Error;

use crate::graph::{Color, Digraph, EdgeColoring, EdgeId, Graph, Vertex};
use crate::verify;

/// Vertex limit of the bitset walk checker.
pub const MAX_VERTICES: usize = 64;
/// Vertex limit for exhaustive path searches.
pub const MAX_PATH_VERTICES: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("digraph is not strongly connected")]
    NotStronglyConnected,
    #[error("{edges} edges exceed the budget of {limit} for k = {k}")]
    Budget { k: Color, edges: usize, limit: usize },
    #[error("{n} vertices exceed the limit of {limit}")]
    TooManyVertices { n: usize, limit: usize },
    #[error("no coloring with at most {max_k} colors ({explored} tested)")]
    ExceedsMaxK { max_k: Color, explored: u64 },
}

/// Largest edge count searched at each level.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub k2: usize,
    pub k3: usize,
    pub higher: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self { k2: 20, k3: 13, higher: 10 }
    }
}

impl Budget {
    pub fn uniform(edges: usize) -> Self {
        Self { k2: edges, k3: edges, higher: edges }
    }

    pub fn limit(&self, k: Color) -> usize {
        match k {
            0 | 1 => usize::MAX,
            2 => self.k2,
            3 => self.k3,
            _ => self.higher,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactResult {
    pub k: Color,
    pub witness: EdgeColoring,
    /// Colorings tested over all levels.
    pub explored: u64,
    /// Colorings tested at level `i + 1`.
    pub explored_per_k: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Walk,
    Path,
}

/// Calls `visit` on every canonical coloring of `m` edges with colors
/// `1..=k` until it returns true. Returns the accepted coloring and the
/// number of colorings visited.
pub fn for_each_canonical(m: usize, k: Color, mut visit: impl FnMut(&[Color]) -> bool) -> (Option<Vec<Color>>, u64) {
    fn rec(
        i: usize,
        used: Color,
        k: Color,
        colors: &mut Vec<Color>,
        visit: &mut dyn FnMut(&[Color]) -> bool,
        count: &mut u64,
    ) -> bool {
        if i == colors.len() {
            *count += 1;
            return visit(colors);
        }
        for c in 1..=(used + 1).min(k) {
            colors[i] = c;
            if rec(i + 1, used.max(c), k, colors, visit, count) {
                return true;
            }
        }
        false
    }
    let mut colors = vec![0; m];
    let mut count = 0;
    if k == 0 {
        return (None, 0);
    }
    let found = rec(0, 0, k, &mut colors, &mut visit, &mut count);
    (found.then_some(colors), count)
}

fn minimize(m: usize, max_k: Color, budget: Budget, mut accept: impl FnMut(&[Color]) -> bool) -> Result<ExactResult, ExactError> {
    let mut per_k = Vec::new();
    for k in 1..=max_k {
        let limit = budget.limit(k);
        if m > limit {
            return Err(ExactError::Budget { k, edges: m, limit });
        }
        let (found, count) = for_each_canonical(m, k, &mut accept);
        per_k.push(count);
        if let Some(colors) = found {
            return Ok(ExactResult {
                k,
                witness: EdgeColoring::new(k, colors).expect("canonical colors lie in 1..=k"),
                explored: per_k.iter().sum(),
                explored_per_k: per_k,
            });
        }
    }
    Err(ExactError::ExceedsMaxK { max_k, explored: per_k.iter().sum() })
}

/// Bitset reachability over `(vertex, last color)` states; `succ` lists
/// `(neighbor, edge id)` per vertex, either direction for graphs and
/// out-arcs for digraphs.
struct WalkChecker {
    n: usize,
    succ: Vec<Vec<(Vertex, EdgeId)>>,
    symmetric: bool,
}

impl WalkChecker {
    fn check(&self, colors: &[Color], k: Color) -> bool {
        let width = usize::from(k) + 1;
        let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let mut seen = [0u64; 256];
        let mut stack: Vec<(Vertex, Color)> = Vec::with_capacity(self.n * width);
        for s in 0..self.n {
            // symmetric reachability: only later vertices still need checking
            let need = if self.symmetric { all & !(u64::MAX >> (63 - s)) } else { all & !(1u64 << s) };
            if need == 0 {
                continue;
            }
            seen[..width].iter_mut().for_each(|x| *x = 0);
            let mut reached = 0u64;
            stack.clear();
            stack.push((s, 0));
            while let Some((v, last)) = stack.pop() {
                for &(w, e) in &self.succ[v] {
                    let c = colors[e];
                    if c == last || seen[usize::from(c)] >> w & 1 == 1 {
                        continue;
                    }
                    seen[usize::from(c)] |= 1 << w;
                    reached |= 1 << w;
                    stack.push((w, c));
                }
                if reached & need == need {
                    break;
                }
            }
            if reached & need != need {
                return false;
            }
        }
        true
    }
}

/// Simple-path reachability by DFS over `(vertex, last color, visited set)`.
struct PathChecker {
    n: usize,
    succ: Vec<Vec<(Vertex, EdgeId)>>,
    symmetric: bool,
}

impl PathChecker {
    fn check(&self, colors: &[Color]) -> bool {
        let all = (1u64 << self.n) - 1;
        for s in 0..self.n {
            let need = if self.symmetric { all & !(u64::MAX >> (63 - s)) } else { all & !(1u64 << s) };
            if need == 0 {
                continue;
            }
            let mut reached = 0u64;
            self.dfs(s, 0, 1 << s, colors, need, &mut reached);
            if reached & need != need {
                return false;
            }
        }
        true
    }

    fn dfs(&self, v: Vertex, last: Color, on_path: u64, colors: &[Color], need: u64, reached: &mut u64) {
        for &(w, e) in &self.succ[v] {
            if *reached & need == need {
                return;
            }
            let c = colors[e];
            if c == last || on_path >> w & 1 == 1 {
                continue;
            }
            *reached |= 1 << w;
            self.dfs(w, c, on_path | 1 << w, colors, need, reached);
        }
    }
}

fn undirected_succ(g: &Graph) -> Vec<Vec<(Vertex, EdgeId)>> {
    (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect()
}

fn directed_succ(d: &Digraph) -> Vec<Vec<(Vertex, EdgeId)>> {
    (0..d.n()).map(|v| d.out_arcs(v).to_vec()).collect()
}

fn guard_vertices(n: usize, limit: usize) -> Result<(), ExactError> {
    if n > limit {
        Err(ExactError::TooManyVertices { n, limit })
    } else {
        Ok(())
    }
}

/// Minimum number of colors giving a properly colored walk between every
/// pair of vertices.
pub fn exact_pw(g: &Graph, max_k: Color, budget: Budget) -> Result<ExactResult, ExactError> {
    if !g.is_connected() {
        return Err(ExactError::Disconnected);
    }
    guard_vertices(g.n(), MAX_VERTICES)?;
    let checker = WalkChecker { n: g.n(), succ: undirected_succ(g), symmetric: true };
    let result = minimize(g.m(), max_k, budget, |colors| checker.check(colors, max_k))?;
    assert!(
        verify::verify_all_pairs(g, &result.witness).expect("witness sized to the graph").is_pass(),
        "exact witness rejected by the reference verifier"
    );
    Ok(result)
}

/// Minimum number of colors giving a properly colored path between every
/// pair of vertices.
pub fn exact_pp(g: &Graph, max_k: Color, budget: Budget) -> Result<ExactResult, ExactError> {
    if !g.is_connected() {
        return Err(ExactError::Disconnected);
    }
    guard_vertices(g.n(), MAX_PATH_VERTICES)?;
    let walks = WalkChecker { n: g.n(), succ: undirected_succ(g), symmetric: true };
    let paths = PathChecker { n: g.n(), succ: undirected_succ(g), symmetric: true };
    let result = minimize(g.m(), max_k, budget, |colors| walks.check(colors, max_k) && paths.check(colors))?;
    assert!(
        verify::verify_all_pairs_path(g, &result.witness).expect("witness sized to the graph").is_pass(),
        "exact witness rejected by the reference path verifier"
    );
    Ok(result)
}

/// Directed walk or path version over all ordered pairs.
pub fn exact_directed(d: &Digraph, mode: Mode, max_k: Color, budget: Budget) -> Result<ExactResult, ExactError> {
    if !d.is_strongly_connected() {
        return Err(ExactError::NotStronglyConnected);
    }
    let walks = WalkChecker { n: d.n(), succ: directed_succ(d), symmetric: false };
    let result = match mode {
        Mode::Walk => {
            guard_vertices(d.n(), MAX_VERTICES)?;
            minimize(d.m(), max_k, budget, |colors| walks.check(colors, max_k))?
        }
        Mode::Path => {
            guard_vertices(d.n(), MAX_PATH_VERTICES)?;
            let paths = PathChecker { n: d.n(), succ: directed_succ(d), symmetric: false };
            minimize(d.m(), max_k, budget, |colors| walks.check(colors, max_k) && paths.check(colors))?
        }
    };
    let ok = match mode {
        Mode::Walk => verify::verify_all_pairs_directed(d, &result.witness),
        Mode::Path => verify::verify_all_pairs_directed_path(d, &result.witness),
    };
    assert!(ok.expect("witness sized to the digraph").is_pass(), "exact witness rejected by the reference verifier");
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{bowtie_digraph, complete, cycle, cycle_with_feet, directed_cycle, path, star};
    use crate::verify::verify_all_pairs;

    const B: Budget = Budget { k2: 20, k3: 13, higher: 10 };

    #[test]
    fn canonical_counts() {
        // 2^(m-1) at k = 2; Stirling-sum at k = 3 for m = 4 is 1 + 7 + 6 = 14
        assert_eq!(for_each_canonical(5, 2, |_| false).1, 16);
        assert_eq!(for_each_canonical(4, 3, |_| false).1, 14);
        assert_eq!(for_each_canonical(0, 2, |_| false).1, 1);
        let (first, _) = for_each_canonical(3, 2, |c| c == [1, 2, 1]);
        assert_eq!(first, Some(vec![1, 2, 1]));
    }

    #[test]
    fn undirected_examples() {
        assert_eq!(exact_pw(&complete(4), 3, B).unwrap().k, 1);
        assert_eq!(exact_pw(&star(3), 4, B).unwrap().k, 3);
        assert_eq!(exact_pw(&cycle(4).unwrap(), 3, B).unwrap().k, 2);
        assert_eq!(exact_pw(&cycle_with_feet(3, &[2, 2, 0]).unwrap(), 3, B).unwrap().k, 3);
        assert_eq!(exact_pp(&path(3).unwrap(), 3, B).unwrap().k, 2);
        assert_eq!(exact_pp(&complete(4), 3, B).unwrap().k, 1);
    }

    #[test]
    fn explored_counter_at_k2() {
        let g = cycle_with_feet(3, &[2, 2, 0]).unwrap();
        let r = exact_pw(&g, 3, B).unwrap();
        assert_eq!(r.explored_per_k[1], 1 << (g.m() - 1));
        assert_eq!(r.explored, r.explored_per_k.iter().sum::<u64>());
    }

    #[test]
    fn errors() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(exact_pw(&g, 3, B), Err(ExactError::Disconnected));
        assert!(matches!(exact_pw(&star(3), 2, B), Err(ExactError::ExceedsMaxK { max_k: 2, .. })));
        assert_eq!(exact_pw(&star(14), 3, B), Err(ExactError::Budget { k: 3, edges: 14, limit: 13 }));
        assert_eq!(exact_pw(&cycle(21).unwrap(), 2, B), Err(ExactError::Budget { k: 2, edges: 21, limit: 20 }));
        let d = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(exact_directed(&d, Mode::Walk, 3, B), Err(ExactError::NotStronglyConnected));
    }

    #[test]
    fn directed_examples() {
        let c5 = directed_cycle(5).unwrap();
        assert_eq!(exact_directed(&c5, Mode::Walk, 4, B).unwrap().k, 3);
        let bow = bowtie_digraph();
        assert_eq!(exact_directed(&bow, Mode::Walk, 4, B).unwrap().k, 2);
        assert_eq!(exact_directed(&bow, Mode::Path, 4, B).unwrap().k, 3);
    }

    /// Minimum over all k^m colorings, no symmetry pruning.
    fn brute_pw(g: &Graph, max_k: Color) -> Option<Color> {
        for k in 1..=max_k {
            let total = u64::from(k).pow(g.m() as u32);
            for code in 0..total {
                let mut c = code;
                let colors: Vec<Color> = (0..g.m())
                    .map(|_| {
                        let x = (c % u64::from(k)) as Color + 1;
                        c /= u64::from(k);
                        x
                    })
                    .collect();
                if verify_all_pairs(g, &EdgeColoring::new(k, colors).unwrap()).unwrap().is_pass() {
                    return Some(k);
                }
            }
        }
        None
    }

    #[test]
    fn agrees_with_unpruned_enumeration() {
        for g in crate::generate::labeled_connected_graphs_up_to(5).filter(|g| g.m() <= 4) {
            let brute = brute_pw(&g, 4).unwrap();
            assert_eq!(exact_pw(&g, 4, B).unwrap().k, brute, "{g:?}");
        }
    }
}
