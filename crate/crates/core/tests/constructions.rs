mod common;

use cbnet_core::accessibility::{analyze_structure, CoreConfig};
use cbnet_core::constructions::{
    construct_mka, construct_mpc, hamiltonian_cycle, mstar, oracle_min_pclan, solve_model1, Agreement,
    Family, Model1Method,
};
use cbnet_core::graph::tarjan_scc;
use cbnet_core::Distance;
use cbnet_oracles as oracle;

/// All compositions of n (positive parts), scored without pruning.
fn brute_model1(n: usize, k: usize) -> Option<u64> {
    fn walk(n: usize, k: usize, parts: &mut Vec<usize>, left: usize, best: &mut Option<u64>) {
        if left == 0 {
            if parts.len() < 2 {
                return;
            }
            let s: usize = parts.iter().enumerate().map(|(e, x)| e * x).sum();
            if 2 * s + n > 2 * k * n && 2 * s < (2 * k + 1) * n {
                let w: u64 = parts
                    .iter()
                    .enumerate()
                    .map(|(e, &x)| (x * e.abs_diff(k) * e.abs_diff(k)) as u64)
                    .sum();
                *best = Some(best.map_or(w, |b| b.min(w)));
            }
            return;
        }
        for x in 1..=left {
            parts.push(x);
            walk(n, k, parts, left - x, best);
            parts.pop();
        }
    }
    let mut best = None;
    walk(n, k, &mut Vec::new(), n, &mut best);
    best
}

#[test]
fn model1_search_matches_brute_force() {
    for n in 4..=14 {
        for k in 1..n {
            let w = (k + 1) * (k + 2);
            if !(n < w && w < 3 * n) {
                assert!(solve_model1(n, k).is_err());
                continue;
            }
            let sol = solve_model1(n, k).unwrap();
            assert_eq!(sol.method, Model1Method::Exhaustive);
            assert_eq!(Some(sol.weighted_objective), brute_model1(n, k), "N={n} k={k}");
            assert_eq!(sol.counts.iter().sum::<usize>(), n);
        }
    }
}

#[test]
fn mka_certified_against_oracles() {
    for n in 3..=40 {
        for k in (n / 2)..n {
            if 2 * k + 2 <= n {
                continue;
            }
            let c = construct_mka(n, k).unwrap();
            let adj = c.graph.adjacency_lists();
            assert_eq!(c.graph.size(), n);
            let mut sizes: Vec<usize> =
                oracle::mutual_reachability_partition(&adj).iter().map(Vec::len).collect();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(sizes[0], k + 1);
            assert!(sizes[1..].iter().all(|&s| s == 1));
            let reach: usize = oracle::reach_and_eccentricity(&adj).iter().map(|r| r.0).sum();
            assert_eq!(reach, (k + 1) * (n - 1), "N={n} k={k}");
            let sq: usize = oracle::reach_and_eccentricity(&adj)
                .iter()
                .map(|r| r.0.abs_diff(k) * r.0.abs_diff(k))
                .sum();
            assert_eq!(sq, n - k - 1);
        }
    }
}

#[test]
fn mka_round_trip_through_detection() {
    for (n, k) in [(10, 6), (20, 12), (50, 30), (101, 99)] {
        let g = construct_mka(n, k).unwrap().graph;
        let a = analyze_structure(&g, &CoreConfig::default());
        let r = a.report.unwrap();
        assert_eq!(r.k, k);
        assert_eq!(r.gscc.len(), k + 1);
        assert_eq!(r.gscc_edges, k + 1);
    }
}

#[test]
fn mpc_diameter_and_edges_against_oracles() {
    for n in 3..=30 {
        for p in 2..n {
            let c = construct_mpc(n, p).unwrap();
            let d = oracle::diameter(&c.graph.adjacency_lists());
            assert_eq!(d, Some(p), "N={n} p={p}");
            let m = mstar(n, p).unwrap();
            let expected = match c.family {
                Family::MpcStar => 2 * (n - 1),
                Family::MpcMultifold => m.formula_value,
                Family::MpcSemistar => 2 * n - p,
                other => panic!("{other:?}"),
            };
            assert_eq!(c.graph.size(), expected, "N={n} p={p}");
        }
    }
}

#[test]
fn oracle_table_values() {
    let table = [
        ((3, 1), 6),
        ((4, 1), 12),
        ((5, 1), 20),
        ((3, 2), 3),
        ((4, 2), 6),
        ((4, 3), 4),
        ((5, 2), 8),
        ((5, 3), 7),
        ((5, 4), 5),
    ];
    for ((n, p), m) in table {
        let r = oracle_min_pclan(n, p).unwrap();
        assert_eq!(r.min_edges, m, "N={n} p={p}");
        let w = r.witness.adjacency_lists();
        assert_eq!(w.iter().map(Vec::len).sum::<usize>(), m);
        assert!(oracle::diameter(&w).is_some_and(|d| d <= p));
    }
    for (n, p) in [(3, 2), (4, 3), (5, 4)] {
        let r = mstar(n, p).unwrap().with_oracle(oracle_min_pclan(n, p).unwrap().min_edges);
        assert_eq!(r.agreement, Some(Agreement::FormulaHigh));
    }
}

#[test]
fn best_construction_matches_oracle_up_to_five() {
    for n in 3..=5 {
        for p in 2..n {
            let built = construct_mpc(n, p).unwrap().graph.size();
            let ham = hamiltonian_cycle(n).unwrap();
            let ham_ok = ham.certified.diameter == Distance::Finite(n - 1) && n - 1 <= p;
            let best = if ham_ok { built.min(n) } else { built };
            assert_eq!(best, oracle_min_pclan(n, p).unwrap().min_edges, "N={n} p={p}");
        }
    }
}

#[test]
fn hamiltonian_cycle_certificate() {
    let c = hamiltonian_cycle(8).unwrap();
    assert_eq!(c.certified.diameter, Distance::Finite(7));
    assert_eq!(tarjan_scc(&c.graph).components.len(), 1);
    assert_eq!(oracle::longest_cycle(&c.graph.adjacency_lists()), 8);
}
