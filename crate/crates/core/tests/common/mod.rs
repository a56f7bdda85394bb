#![allow(dead_code)]

use std::collections::BTreeSet;

use cbnet_core::Digraph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p) without loops.
pub fn random_digraph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.random_bool(p.min(1.0)) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::from_arcs(n, arcs).unwrap()
}

/// Arcs only go from lower to higher rank in a random order.
pub fn random_dag(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Digraph {
    let mut rank: Vec<usize> = (0..n).collect();
    rank.shuffle(rng);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p.min(1.0)) {
                arcs.push((rank[i], rank[j]));
            }
        }
    }
    Digraph::from_arcs(n, arcs).unwrap()
}

/// A random Hamiltonian cycle plus G(n, p) arcs.
pub fn random_scc(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Digraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut arcs: Vec<(usize, usize)> = (0..n).map(|i| (order[i], order[(i + 1) % n])).collect();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.random_bool(p.min(1.0)) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::from_arcs(n, arcs).unwrap()
}

/// An oriented random Hamiltonian cycle plus, for every other unordered
/// pair, one arc of random direction with probability `p`. No 2-cycles;
/// needs n >= 3.
pub fn random_oriented_scc(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Digraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut arcs: Vec<(usize, usize)> = (0..n).map(|i| (order[i], order[(i + 1) % n])).collect();
    let mut used: BTreeSet<(usize, usize)> = arcs.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    for u in 0..n {
        for v in u + 1..n {
            if used.insert((u, v)) && rng.random_bool(p.min(1.0)) {
                arcs.push(if rng.random_bool(0.5) { (u, v) } else { (v, u) });
            }
        }
    }
    Digraph::from_arcs(n, arcs).unwrap()
}

/// Same arcs under new ids: vertex v becomes `perm[v]`.
pub fn relabel(g: &Digraph, perm: &[usize]) -> Digraph {
    Digraph::from_arcs(g.order(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}
