//! Oracles written against plain edge lists, sharing no code with the
//! library beyond the `Graph` accessors.
#![allow(dead_code)]

use std::collections::VecDeque;

use properwalk::{Color, Graph};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<(usize, usize)>> {
    let mut adj = vec![Vec::new(); n];
    for (e, &(a, b)) in edges.iter().enumerate() {
        adj[a].push((b, e));
        adj[b].push((a, e));
    }
    adj
}

/// Every vertex reaches every other by a walk whose consecutive edges differ
/// in color.
pub fn walks_ok(g: &Graph, colors: &[Color]) -> bool {
    let n = g.n();
    let adj = adjacency(n, g.edges());
    let k = colors.iter().copied().max().unwrap_or(0) as usize;
    for s in 0..n {
        let mut seen = vec![vec![false; k + 1]; n];
        let mut reached = vec![false; n];
        reached[s] = true;
        seen[s][0] = true;
        let mut queue = VecDeque::from([(s, 0usize)]);
        while let Some((v, last)) = queue.pop_front() {
            for &(w, e) in &adj[v] {
                let c = colors[e] as usize;
                if c != last && !seen[w][c] {
                    seen[w][c] = true;
                    reached[w] = true;
                    queue.push_back((w, c));
                }
            }
        }
        if reached.iter().any(|&r| !r) {
            return false;
        }
    }
    true
}

/// Smallest k such that some k-coloring passes `walks_ok`, trying all k^m
/// colorings. Only for tiny graphs.
pub fn brute_pw(g: &Graph, max_k: usize) -> Option<usize> {
    let m = g.m();
    for k in 1..=max_k {
        let total = (k as u64).pow(m as u32);
        for code in 0..total {
            let mut x = code;
            let colors: Vec<Color> = (0..m)
                .map(|_| {
                    let c = (x % k as u64) as Color + 1;
                    x /= k as u64;
                    c
                })
                .collect();
            if walks_ok(g, &colors) {
                return Some(k);
            }
        }
    }
    None
}

fn connected_without(n: usize, edges: &[(usize, usize)], skip: Option<usize>) -> Vec<usize> {
    let adj = adjacency(n, edges);
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &(w, e) in &adj[v] {
                if Some(e) != skip && comp[w] == usize::MAX {
                    comp[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    comp
}

/// Edges whose removal disconnects their endpoints.
pub fn bridges(g: &Graph) -> Vec<usize> {
    (0..g.m())
        .filter(|&e| {
            let comp = connected_without(g.n(), g.edges(), Some(e));
            let (a, b) = g.edges()[e];
            comp[a] != comp[b]
        })
        .collect()
}

/// Every component of the graph minus its bridges meets at most two bridge
/// ends.
pub fn two_bridge_condition(g: &Graph) -> bool {
    let bridges = bridges(g);
    let kept: Vec<(usize, usize)> = (0..g.m()).filter(|e| !bridges.contains(e)).map(|e| g.edges()[e]).collect();
    let comp = connected_without(g.n(), &kept, None);
    let mut ends = vec![0; g.n()];
    for &e in &bridges {
        let (a, b) = g.edges()[e];
        ends[comp[a]] += 1;
        ends[comp[b]] += 1;
    }
    ends.iter().all(|&c| c <= 2)
}

pub fn is_bipartite(g: &Graph) -> bool {
    let adj = adjacency(g.n(), g.edges());
    let mut side = vec![u8::MAX; g.n()];
    for s in 0..g.n() {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &(w, _) in &adj[v] {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    stack.push(w);
                } else if side[w] == side[v] {
                    return false;
                }
            }
        }
    }
    true
}

pub fn max_degree(g: &Graph) -> usize {
    let mut deg = vec![0; g.n()];
    for &(a, b) in g.edges() {
        deg[a] += 1;
        deg[b] += 1;
    }
    deg.into_iter().max().unwrap_or(0)
}

pub fn is_complete(g: &Graph) -> bool {
    g.m() == g.n() * (g.n().saturating_sub(1)) / 2
}

/// Two odd cycles joined by a path (length 0 shares a vertex), with random
/// pendant trees, at most `max_n` vertices. Returns the graph and the two
/// cycles and connector as vertex lists.
pub fn two_odd_instance(rng: &mut ChaCha8Rng, max_n: usize) -> (Graph, Vec<usize>, Vec<usize>, Vec<usize>) {
    let (l1, l2, gap) = loop {
        let l1: usize = [3, 5, 7][rng.gen_range(0..3)];
        let l2: usize = [3, 5, 7][rng.gen_range(0..3)];
        let gap: usize = rng.gen_range(0..=3);
        if l1 + gap + l2 - 1 <= max_n {
            break (l1, l2, gap);
        }
    };
    let mut edges = Vec::new();
    let c1: Vec<usize> = (0..l1).collect();
    for i in 0..l1 {
        edges.push((i, (i + 1) % l1));
    }
    let mut connector = vec![0];
    let mut n = l1;
    for _ in 0..gap {
        edges.push((*connector.last().unwrap(), n));
        connector.push(n);
        n += 1;
    }
    let start = *connector.last().unwrap();
    let mut c2 = vec![start];
    for _ in 1..l2 {
        c2.push(n);
        n += 1;
    }
    for i in 0..l2 {
        edges.push((c2[i], c2[(i + 1) % l2]));
    }
    let extra = rng.gen_range(0..=max_n - n);
    for _ in 0..extra {
        let parent = rng.gen_range(0..n);
        edges.push((parent, n));
        n += 1;
    }
    (Graph::new(n, edges).unwrap(), c1, c2, connector)
}
