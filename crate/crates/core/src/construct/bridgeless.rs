use super::{
    certify, color_bipartite2, color_theta_block2, color_two_odd_cycles2, require_connected, BipartiteOutcome, ConstructError,
    TwoOddLayout, RED,
};
use crate::decompose::{self, bipartition, join_cycles, shortest_odd_cycle};
use crate::graph::{Color, ColoringResult, EdgeColoring, Graph, Route, Status, Vertex};
use crate::orient::robbins_orientation;

/// Two-coloring of a connected bridgeless graph that is not complete.
///
/// Two nonbipartite blocks give two edge-disjoint odd cycles. With none the
/// graph is bipartite. With exactly one, that block is colored on its own
/// and every other block by partite class of arc heads under a strong
/// orientation.
pub fn color_bridgeless2(g: &Graph) -> Result<ColoringResult, ConstructError> {
    require_connected(g)?;
    if g.n() < 3 {
        return Err(ConstructError::TooSmall(3));
    }
    if !decompose::is_bridgeless(g) {
        return Err(ConstructError::HasBridge);
    }
    if g.is_complete() {
        return Ok(ColoringResult {
            k: 1,
            coloring: EdgeColoring::uniform(g.m(), 1),
            status: Status::Exact,
            route: Route::Complete,
        });
    }
    let relabel = |r: ColoringResult| ColoringResult { route: Route::Bridgeless, ..r };
    let blocks = decompose::blocks(g)?;
    let odd: Vec<(Vec<Vertex>, Vec<Vertex>)> = blocks
        .iter()
        .filter_map(|b| {
            let (sub, map) = g.induced(&b.vertices);
            shortest_odd_cycle(&sub).map(|c| (b.vertices.clone(), c.into_iter().map(|x| map[x]).collect()))
        })
        .collect();
    match odd.as_slice() {
        [] => match color_bipartite2(g)? {
            BipartiteOutcome::Colored(r) => Ok(relabel(r)),
            BipartiteOutcome::Violation { .. } => {
                Err(ConstructError::Internal("bridgeless graph violates the bridge condition".into()))
            }
        },
        [(_, c1), (_, c2), ..] => {
            let pair = join_cycles(g, c1, c2).ok_or_else(|| ConstructError::Internal("blocks of a connected graph".into()))?;
            color_two_odd_cycles2(g, &TwoOddLayout::new(g, pair)?).map(relabel)
        }
        [(vertices, _)] => {
            let mut colors: Vec<Color> = vec![0; g.m()];
            let (h, map) = g.induced(vertices);
            if !h.is_complete() {
                let r = color_theta_block2(&h)?;
                for (e, &(a, b)) in h.edges().iter().enumerate() {
                    colors[g.edge_id(map[a], map[b]).unwrap()] = r.coloring.color(e);
                }
            }
            for b in blocks.iter().filter(|b| b.vertices != *vertices) {
                let (sub, map) = g.induced(&b.vertices);
                let side = bipartition(&sub).ok_or_else(|| ConstructError::Internal("second odd block".into()))?.side;
                let orientation = robbins_orientation(&sub)?;
                for (tail, head) in orientation.arcs() {
                    colors[g.edge_id(map[tail], map[head]).unwrap()] = side[head] + 1;
                }
            }
            for c in colors.iter_mut().filter(|c| **c == 0) {
                *c = RED;
            }
            certify(g, colors, Status::Exact, Route::Bridgeless)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, petersen, two_triangles_shared_vertex};

    #[test]
    fn routes() {
        assert_eq!(color_bridgeless2(&complete(4)).unwrap().route, Route::Complete);
        assert_eq!(color_bridgeless2(&cycle(6).unwrap()).unwrap().k, 2);
        assert_eq!(color_bridgeless2(&two_triangles_shared_vertex()).unwrap().k, 2);
        assert_eq!(color_bridgeless2(&petersen()).unwrap().k, 2);
        assert_eq!(color_bridgeless2(&crate::generate::path(4).unwrap()), Err(ConstructError::HasBridge));
    }

    #[test]
    fn complete_block_with_even_cycle() {
        // K4 on 0..4 sharing vertex 3 with the square 3-4-5-6
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        edges.extend([(3, 4), (4, 5), (5, 6), (6, 3)]);
        let g = Graph::new(7, edges).unwrap();
        assert_eq!(color_bridgeless2(&g).unwrap().k, 2);
        // odd cycle block plus a square
        let g = Graph::new(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3), (0, 5), (5, 6), (6, 7), (7, 0)]).unwrap();
        assert_eq!(color_bridgeless2(&g).unwrap().k, 2);
    }
}
