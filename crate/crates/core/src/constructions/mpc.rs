use super::{measure, ConstructionResult, Family};
use crate::error::{Error, Result};
use crate::graph::{Digraph, Distance};

/// Minimal p-Clan candidate of order N.
///
/// * p = 2: bi-directed star around v0.
/// * p even and p | 2(N-1): with K = p/2, (N-1)/K directed cycles of
///   length K+1, all passing through the hub v0.
/// * otherwise: a p-cycle on v0..v{p-1} with every other vertex joined to v0
///   by a 2-cycle.
///
/// The diameter is measured and must equal p.
pub fn construct_mpc(n: usize, p: usize) -> Result<ConstructionResult> {
    if n < 3 || p < 2 || p >= n {
        return Err(Error::Precondition(format!("need N >= 3 and 2 <= p <= N-1, got N = {n}, p = {p}")));
    }
    let divisible = (2 * (n - 1)) % p == 0;
    let mut note = None;
    let (family, arcs): (Family, Vec<(usize, usize)>) = if p == 2 {
        (Family::MpcStar, (1..n).flat_map(|l| [(0, l), (l, 0)]).collect())
    } else if divisible && p % 2 == 0 {
        let k = p / 2;
        let mut arcs = Vec::new();
        for petal in 0..(n - 1) / k {
            let first = 1 + petal * k;
            arcs.push((0, first));
            for i in first..first + k - 1 {
                arcs.push((i, i + 1));
            }
            arcs.push((first + k - 1, 0));
        }
        (Family::MpcMultifold, arcs)
    } else {
        if divisible {
            note = Some(format!(
                "p = {p} is odd; cycles of p/2 vertices do not exist, built the semi-star instead"
            ));
        }
        let arcs = (0..p)
            .map(|i| (i, (i + 1) % p))
            .chain((p..n).flat_map(|l| [(0, l), (l, 0)]))
            .collect();
        (Family::MpcSemistar, arcs)
    };
    let graph = Digraph::from_arcs(n, arcs)?;
    let certified = measure(&graph, Some(n - 1));
    if certified.diameter != Distance::Finite(p) {
        return Err(Error::Invariant(format!(
            "construction for N = {n}, p = {p} has diameter {}",
            certified.diameter
        )));
    }
    Ok(ConstructionResult { graph, family, certified, note })
}

/// Directed N-cycle.
pub fn hamiltonian_cycle(n: usize) -> Result<ConstructionResult> {
    if n < 3 {
        return Err(Error::Precondition(format!("need N >= 3, got {n}")));
    }
    let graph = Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n)))?;
    let certified = measure(&graph, Some(n - 1));
    if certified.diameter != Distance::Finite(n - 1) || certified.edge_count != n {
        return Err(Error::Invariant(format!("{n}-cycle failed certification")));
    }
    Ok(ConstructionResult { graph, family: Family::HamiltonianCycle, certified, note: None })
}

/// K_N with both arc directions between every pair.
pub fn complete_digraph(n: usize) -> Result<Digraph> {
    Digraph::from_arcs(n, (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star() {
        let r = construct_mpc(5, 2).unwrap();
        assert_eq!(r.family, Family::MpcStar);
        assert_eq!(r.certified.edge_count, 8);
    }

    #[test]
    fn multifold_nine_four() {
        let r = construct_mpc(9, 4).unwrap();
        assert_eq!(r.family, Family::MpcMultifold);
        assert_eq!(r.certified.edge_count, 12);
        assert_eq!(r.certified.diameter, Distance::Finite(4));
    }

    #[test]
    fn semistar_six_four() {
        let r = construct_mpc(6, 4).unwrap();
        assert_eq!(r.family, Family::MpcSemistar);
        assert_eq!(r.certified.edge_count, 8);
    }

    #[test]
    fn odd_divisible_falls_through() {
        let r = construct_mpc(7, 3).unwrap();
        assert_eq!(r.family, Family::MpcSemistar);
        assert_eq!(r.certified.edge_count, 11);
        assert!(r.note.is_some());
    }

    #[test]
    fn cycles() {
        let r = hamiltonian_cycle(8).unwrap();
        assert_eq!(r.certified.edge_count, 8);
        assert_eq!(r.certified.diameter, Distance::Finite(7));
        assert_eq!(complete_digraph(4).unwrap().size(), 12);
    }
}
