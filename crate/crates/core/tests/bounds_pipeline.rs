mod common;

use cbnet_core::bounds::{
    boost_min_outdegree, contract_two_cycles, diameter_bound, eulerianize, has_two_cycle,
};
use cbnet_core::graph::diameter;
use cbnet_oracles as oracle;
use rand::Rng;

#[test]
fn contraction_keeps_connectivity_and_never_grows_diameter() {
    for seed in 0..150 {
        let mut rng = common::rng(seed);
        let n = rng.random_range(2..=60);
        let p = rng.random_range(0.0..3.0) / n as f64;
        let g = common::random_scc(&mut rng, n, p);
        let c = contract_two_cycles(&g).unwrap();
        assert!(!has_two_cycle(&c.graph));
        if c.graph.order() > 1 {
            assert!(c.graph.is_strongly_connected());
        }
        let before = oracle::diameter(&g.adjacency_lists()).unwrap();
        let after = oracle::diameter(&c.graph.adjacency_lists()).unwrap();
        assert!(after <= before, "seed {seed}");
    }
}

#[test]
fn extension_balanced_simple_and_connected() {
    for seed in 0..200 {
        let mut rng = common::rng(500 + seed);
        let n = rng.random_range(3..=60);
        let p: f64 = rng.random_range(0.0..0.3);
        let g = common::random_oriented_scc(&mut rng, n, p.max(3.0 / n as f64));
        let ext = eulerianize(&g).unwrap();
        assert!(ext.is_balanced(), "seed {seed}");
        let boosted = boost_min_outdegree(ext.clone()).unwrap();
        assert!(boosted.is_balanced(), "seed {seed}");
        assert!(boosted.delta() >= ext.delta());
        let h = boosted.graph().unwrap();
        let adj = h.adjacency_lists();
        assert_eq!(oracle::mutual_reachability_partition(&adj).len(), 1, "seed {seed}");
        for (u, out) in adj.iter().enumerate() {
            assert!(!out.contains(&u));
            let mut sorted = out.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), out.len());
        }
        for (u, v) in g.edges() {
            assert!(h.has_edge(u, v));
        }
    }
}

#[test]
fn applicable_bound_holds_on_the_extension() {
    let (mut applicable, mut sharper_fails) = (0, 0);
    for seed in 0..300 {
        let mut rng = common::rng(900 + seed);
        let n = rng.random_range(8..=40);
        let p = rng.random_range(0.1..0.5);
        let g = common::random_oriented_scc(&mut rng, n, p);
        let r = diameter_bound(&g, None).unwrap();
        assert!(r.dankelmann_bound <= r.knyazev_bound + 1e-9 || r.delta < 2);
        if r.applicable {
            applicable += 1;
            let ext = boost_min_outdegree(eulerianize(&contract_two_cycles(&g).unwrap().graph).unwrap())
                .unwrap();
            let d = oracle::diameter(&ext.graph().unwrap().adjacency_lists()).unwrap();
            assert_eq!(r.extension_diameter.finite(), Some(d));
            assert!(d as f64 <= r.knyazev_bound + 1e-9, "seed {seed} {r:?}");
            if d as f64 > r.dankelmann_bound + 1e-9 {
                sharper_fails += 1;
            }
        }
    }
    assert!(applicable >= 50, "only {applicable} applicable reports");
    eprintln!("extension above 4n'/(2δ+1) - 4: {sharper_fails} of {applicable}");
}

#[test]
fn measured_diameter_is_contracted_base() {
    let mut rng = common::rng(4);
    let g = common::random_scc(&mut rng, 25, 0.1);
    let r = diameter_bound(&g, None).unwrap();
    let c = contract_two_cycles(&g).unwrap();
    assert_eq!(r.measured_diameter, diameter(&c.graph, None));
    assert_eq!(r.contracted_order, c.graph.order());
    assert_eq!(r.n_prime, r.contracted_order + r.omega_size);
}

/// Circulant on 15 vertices with jumps 1..4: Eulerian, no 2-cycle, every
/// degree 4, diameter 4 while 4n/(2δ+1) - 4 is 8/3.
#[test]
fn sharper_bound_fails_on_small_circulant() {
    let n = 15;
    let g = cbnet_core::Digraph::from_arcs(n, (0..n).flat_map(|u| (1..=4).map(move |j| (u, (u + j) % n))))
        .unwrap();
    assert!(!has_two_cycle(&g));
    assert!((0..n).all(|v| g.in_degree(v) == 4 && g.out_degree(v) == 4));
    let d = oracle::diameter(&g.adjacency_lists()).unwrap();
    assert_eq!(d, 4);
    assert!((d as f64) > cbnet_core::bounds::dankelmann_bound(n, 4));
    assert!((d as f64) <= cbnet_core::bounds::knyazev_bound(n, 4));
    let r = diameter_bound(&g, None).unwrap();
    assert!(r.applicable);
    assert_eq!(r.omega_size, 0);
    assert!(!r.bound_holds());
}
