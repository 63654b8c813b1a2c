mod common;

use properwalk::construct::{
    color_bipartite2, color_bridgeless2, color_spanning_odd_cycle2, color_theta_block2, color_tree, color_two_odd_cycles2,
    color_unicyclic3, reduce_theta, BipartiteOutcome, ConstructError, ThetaReduction, TwoOddLayout,
};
use properwalk::decompose::OddCyclePair;
use properwalk::exact::{exact_pw, Budget};
use properwalk::generate::{complete, cycle, labeled_connected_graphs_up_to, petersen, random_connected, star, theta};
use properwalk::{Graph, Route, Status};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn exact_solver_matches_brute_force() {
    for g in labeled_connected_graphs_up_to(5).filter(|g| g.m() <= 6) {
        let brute = common::brute_pw(&g, 4).unwrap();
        let exact = exact_pw(&g, 4, Budget::default()).unwrap();
        assert_eq!(exact.k as usize, brute, "{:?}", g.edges());
        assert!(common::walks_ok(&g, exact.witness.colors()));
    }
}

#[test]
fn theta_family_is_two_colored() {
    for a in 1..=5 {
        for b in 1..=5 {
            for p in 1..=4 {
                let Ok(g) = theta(a, b, p) else { continue };
                if g.is_complete() {
                    continue;
                }
                let r = color_theta_block2(&g).unwrap_or_else(|e| panic!("theta({a}, {b}, {p}): {e}"));
                assert_eq!(r.k, 2);
                assert!(common::walks_ok(&g, r.coloring.colors()), "theta({a}, {b}, {p})");
            }
        }
    }
}

#[test]
fn petersen_reduces_and_colors() {
    let g = petersen();
    assert!(matches!(reduce_theta(&g).unwrap(), ThetaReduction::Theta(_) | ThetaReduction::TwoOdd(_)));
    let r = color_theta_block2(&g).unwrap();
    assert_eq!(r.k, 2);
    assert!(common::walks_ok(&g, r.coloring.colors()));
    assert_eq!(exact_pw(&g, 2, Budget::default()).unwrap().k, 2);
}

#[test]
fn spanning_odd_cycle_with_chords() {
    let mut edges: Vec<(usize, usize)> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
    edges.extend([(0, 2), (0, 4), (3, 6)]);
    let g = Graph::new(7, edges).unwrap();
    let r = color_spanning_odd_cycle2(&g, &[0, 1, 2, 3, 4, 5, 6]).unwrap();
    assert_eq!((r.k, r.route), (2, Route::SpanningOddCycle));
    assert!(common::walks_ok(&g, r.coloring.colors()));
    assert!(color_spanning_odd_cycle2(&g, &[0, 1, 2]).is_err());
    assert!(matches!(color_spanning_odd_cycle2(&complete(5), &[0, 1, 2, 3, 4]), Err(ConstructError::Complete)));
}

#[test]
fn trees_use_max_degree() {
    for leaves in 1..7 {
        let r = color_tree(&star(leaves)).unwrap();
        assert_eq!(r.k as usize, leaves.max(1));
    }
    for seed in 0..40 {
        let g = random_connected(9, 0.25, seed).unwrap();
        if !g.is_tree() {
            continue;
        }
        let r = color_tree(&g).unwrap();
        assert_eq!(r.k as usize, common::max_degree(&g));
        assert!(common::walks_ok(&g, r.coloring.colors()));
    }
}

#[test]
fn three_colors_suffice_for_cyclic_graphs() {
    for seed in 0..60 {
        let g = random_connected(10, 0.2, seed).unwrap();
        if g.is_tree() {
            assert_eq!(color_unicyclic3(&g), Err(ConstructError::Acyclic));
            continue;
        }
        let r = color_unicyclic3(&g).unwrap();
        assert!(r.k <= 3);
        assert_eq!(r.status, Status::UpperBound);
        assert!(common::walks_ok(&g, r.coloring.colors()), "seed {seed}");
    }
}

#[test]
fn bipartite_outcome_follows_bridge_condition() {
    let mut seen = [0usize; 2];
    for seed in 0..400 {
        let g = random_connected(9, 0.22, seed).unwrap();
        if !common::is_bipartite(&g) || g.is_tree() {
            continue;
        }
        let holds = common::two_bridge_condition(&g);
        match color_bipartite2(&g).unwrap() {
            BipartiteOutcome::Colored(r) => {
                assert!(holds, "seed {seed}");
                assert_eq!(r.k, 2);
                assert!(common::walks_ok(&g, r.coloring.colors()));
            }
            BipartiteOutcome::Violation { incident_bridges, .. } => {
                assert!(!holds, "seed {seed}");
                assert!(incident_bridges > 2);
            }
        }
        seen[holds as usize] += 1;
    }
    assert!(seen[0] > 0 && seen[1] > 0, "{seen:?}");
}

#[test]
fn bridgeless_random_graphs() {
    let mut tested = 0;
    for seed in 0..300 {
        let g = random_connected(11, 0.35, seed).unwrap();
        if !common::bridges(&g).is_empty() || common::is_complete(&g) {
            continue;
        }
        let r = color_bridgeless2(&g).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert_eq!(r.k, 2);
        assert!(common::walks_ok(&g, r.coloring.colors()), "seed {seed}");
        tested += 1;
    }
    assert!(tested > 50);
}

#[test]
fn two_odd_cycles_with_pendant_trees() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..200 {
        let (g, c1, c2, connector) = common::two_odd_instance(&mut rng, 24);
        let layout = TwoOddLayout::new(&g, OddCyclePair { c1, c2, connector }).unwrap();
        let r = color_two_odd_cycles2(&g, &layout).unwrap();
        assert_eq!(r.k, 2);
        assert!(common::walks_ok(&g, r.coloring.colors()), "{:?}", g.edges());
    }
}

#[test]
fn odd_cycles_are_not_bipartite_inputs() {
    assert_eq!(color_bipartite2(&cycle(5).unwrap()), Err(ConstructError::NotBipartite));
}
