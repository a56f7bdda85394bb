use cbnet_core::accessibility::{analyze_structure, CoreConfig, MacroVerdict};
use cbnet_core::graph::{assortativity, tarjan_scc};
use cbnet_core::io::{generate, to_edge_list, GeneratorConfig};
use cbnet_core::VertexKind;

#[test]
fn same_seed_same_bytes() {
    let cfg = GeneratorConfig { sender_count: 30, receiver_count: 30, ..Default::default() };
    assert_eq!(to_edge_list(&generate(&cfg).unwrap().graph), to_edge_list(&generate(&cfg).unwrap().graph));
}

#[test]
fn branches_share_their_parent_scc() {
    for seed in 0..5 {
        let net = generate(&GeneratorConfig { seed, ..Default::default() }).unwrap();
        let g = &net.graph;
        let scc = tarjan_scc(g);
        for v in 0..g.order() {
            if let Some(parent) = &g.vertex(v).parent_id {
                let p = g.index_of(parent).unwrap();
                assert_eq!(scc.component_of[v], scc.component_of[p]);
            }
        }
    }
}

#[test]
fn planted_structure_is_detected() {
    for seed in 0..5 {
        let net = generate(&GeneratorConfig { seed, ..Default::default() }).unwrap();
        let r = analyze_structure(&net.graph, &CoreConfig::default()).report.unwrap();
        assert_eq!(r.gscc, net.expected_gscc, "seed {seed}");
        assert!(net.parents.is_subset(&r.gscc));
        assert!(r.gscc.len() <= r.k + 1);
        assert!(r.k.abs_diff(net.planted_k) <= 1, "seed {seed}: {} vs {}", r.k, net.planted_k);
        assert_eq!(r.macro_verdict, MacroVerdict::BridgeLike);
        assert!(!r.has_model_violation());
        let banks = net.graph.bank_subgraph();
        assert!(assortativity(&banks.graph).unwrap() < 0.0);
    }
}

#[test]
fn scaled_network_plateau() {
    let cfg = GeneratorConfig {
        branch_mean: 0.5,
        sender_correspondents: 150,
        receiver_correspondents: 2800,
        ..Default::default()
    };
    let net = generate(&cfg).unwrap();
    let r = analyze_structure(&net.graph, &CoreConfig::default()).report.unwrap();
    assert!(net.graph.order() >= 2900);
    assert!(r.k.abs_diff(net.planted_k) <= 1, "{} vs {}", r.k, net.planted_k);
    assert!(net.parents.is_subset(&r.gscc));
}

#[test]
fn gscc_separates_sender_and_receiver_sides() {
    let net = generate(&GeneratorConfig::default()).unwrap();
    let g = &net.graph;
    let r = analyze_structure(g, &CoreConfig::default()).report.unwrap();
    let rest: cbnet_core::VertexSet = (0..g.order()).filter(|v| !r.gscc.contains(v)).collect();
    let sub = g.induced_subgraph(&rest);
    let adj = sub.graph.adjacency_lists();
    let reach = cbnet_oracles::reachability_matrix(&adj);
    for (a, &s) in sub.to_parent.iter().enumerate() {
        if !net.sender_side.contains(&s) {
            continue;
        }
        for (b, &t) in sub.to_parent.iter().enumerate() {
            if net.receiver_side.contains(&t) {
                assert!(!reach[a][b], "{} reaches {} around the GSCC", g.id(s), g.id(t));
            }
        }
    }
}

fn zeta(a: f64) -> f64 {
    const CUT: usize = 20_000;
    (1..CUT).map(|k| (k as f64).powf(-a)).sum::<f64>() + (CUT as f64).powf(1.0 - a) / (a - 1.0)
}

/// Log-likelihoods of the best discrete power law (x >= 1, exponent by grid
/// search) and the best geometric law on positive bank out-degrees.
fn tail_fits(seed: u64) -> (f64, f64) {
    let net = generate(&GeneratorConfig { seed, ..Default::default() }).unwrap();
    let g = &net.graph;
    let xs: Vec<f64> = (0..g.order())
        .filter(|&v| g.kind(v) == VertexKind::Bank && g.out_degree(v) > 0)
        .map(|v| g.out_degree(v) as f64)
        .collect();
    let n = xs.len() as f64;
    let log_sum: f64 = xs.iter().map(|x| x.ln()).sum();
    let ll_pow = (0..300)
        .map(|i| 1.05 + 0.01 * i as f64)
        .map(|a| -a * log_sum - n * zeta(a).ln())
        .fold(f64::NEG_INFINITY, f64::max);
    let mean_excess = xs.iter().map(|x| x - 1.0).sum::<f64>() / n;
    let lambda = (1.0 + 1.0 / mean_excess).ln();
    let ll_geo: f64 = xs.iter().map(|x| (1.0 - (-lambda).exp()).ln() - lambda * (x - 1.0)).sum();
    (ll_pow, ll_geo)
}

#[test]
fn out_degree_tail_prefers_power_law() {
    let (pow, geo) = tail_fits(GeneratorConfig::default().seed);
    assert!(pow > geo, "power {pow} vs geometric {geo}");
    let wins = (0..10).filter(|&s| {
        let (p, g) = tail_fits(s);
        p > g
    });
    assert!(wins.count() >= 6);
}
