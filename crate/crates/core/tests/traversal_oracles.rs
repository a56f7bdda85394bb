mod common;

use cbnet_core::graph::{
    accessibility_profile, assortativity, condense, degrees, diameter, is_acyclic, tarjan_scc,
};
use cbnet_core::Distance;
use cbnet_oracles as oracle;
use rand::Rng;

#[test]
fn scc_matches_mutual_reachability() {
    for seed in 0..300 {
        let mut rng = common::rng(seed);
        let n = rng.random_range(1..=60);
        let p = rng.random_range(0.0..4.0) / n as f64;
        let g = common::random_digraph(&mut rng, n, p);
        let mut ours = tarjan_scc(&g).components;
        for c in &mut ours {
            c.sort_unstable();
        }
        ours.sort();
        assert_eq!(ours, oracle::mutual_reachability_partition(&g.adjacency_lists()), "seed {seed}");
    }
}

#[test]
fn condensation_is_acyclic_and_faithful() {
    for seed in 0..200 {
        let mut rng = common::rng(1000 + seed);
        let n = rng.random_range(2..=40);
        let g = common::random_digraph(&mut rng, n, 2.0 / n as f64);
        let scc = tarjan_scc(&g);
        let dag = condense(&g, &scc).unwrap();
        assert!(oracle::is_acyclic(&dag.adjacency_lists()));
        assert_eq!(is_acyclic(&dag), oracle::is_acyclic(&dag.adjacency_lists()));
        for a in 0..dag.order() {
            for b in 0..dag.order() {
                let crossing = g.edges().any(|(u, v)| scc.component_of[u] == a && scc.component_of[v] == b);
                assert_eq!(dag.has_edge(a, b), a != b && crossing, "seed {seed}");
            }
        }
    }
}

#[test]
fn accessibility_and_eccentricity_match_distance_matrix() {
    for seed in 0..120 {
        let mut rng = common::rng(2000 + seed);
        let n = rng.random_range(1..=100);
        let p = rng.random_range(0.5..3.0) / n as f64;
        let g = common::random_digraph(&mut rng, n, p);
        let profile = accessibility_profile(&g);
        let expected = oracle::reach_and_eccentricity(&g.adjacency_lists());
        for v in 0..n {
            assert_eq!((profile.acc[v], profile.ecc[v]), expected[v], "seed {seed} vertex {v}");
        }
        let d = oracle::diameter(&g.adjacency_lists());
        assert_eq!(diameter(&g, None), d.map_or(Distance::Infinite, Distance::Finite));
    }
}

#[test]
fn degree_sums_equal_edge_count() {
    let mut rng = common::rng(7);
    let g = common::random_digraph(&mut rng, 30, 0.1);
    let d = degrees(&g);
    let adj = g.adjacency_lists();
    let m: usize = adj.iter().map(Vec::len).sum();
    assert_eq!(g.size(), m);
    assert_eq!(d.total_in(), m);
    assert_eq!(d.total_out(), m);
}

#[test]
fn assortativity_matches_direct_pearson() {
    for seed in 0..50 {
        let mut rng = common::rng(3000 + seed);
        let n = rng.random_range(2..=50);
        let g = common::random_digraph(&mut rng, n, 0.15);
        let direct = oracle::pearson(&oracle::out_in_degree_samples(&g.adjacency_lists()));
        match (assortativity(&g), direct) {
            (Some(a), Some(b)) => assert!((a - b).abs() < 1e-9, "seed {seed}: {a} vs {b}"),
            (a, b) => assert_eq!(a.is_some(), b.is_some(), "seed {seed}"),
        }
    }
}

#[test]
fn bidirected_star_pearson() {
    let star = cbnet_core::Digraph::from_arcs(5, (1..5).flat_map(|l| [(0, l), (l, 0)])).unwrap();
    let direct = oracle::pearson(&oracle::out_in_degree_samples(&star.adjacency_lists())).unwrap();
    assert!((assortativity(&star).unwrap() - direct).abs() < 1e-12);
}
