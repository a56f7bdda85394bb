use super::{measure, ConstructionResult, Family};
use crate::error::{Error, Result};
use crate::graph::{accessibility_profile, Digraph, Distance};

/// Minimal k-accessible digraph: a directed (k+1)-cycle on v0..vk plus
/// N-k-1 sources, each with a single arc into the cycle (round robin).
pub fn construct_mka(n: usize, k: usize) -> Result<ConstructionResult> {
    if 2 * (k + 1) <= n || k + 1 > n || k == 0 {
        return Err(Error::Precondition(format!(
            "need N/2 - 1 < k <= N - 1 with k >= 1, got N = {n}, k = {k}"
        )));
    }
    let cycle = k + 1;
    let arcs = (0..cycle)
        .map(|i| (i, (i + 1) % cycle))
        .chain((cycle..n).map(|s| (s, (s - cycle) % cycle)));
    let graph = Digraph::from_arcs(n, arcs)?;

    // Exact checks before reporting the floating-point values.
    let profile = accessibility_profile(&graph);
    let sq = profile.squared_deviation(k, 0..n);
    let certified = measure(&graph, Some(k));
    let expected_diameter = if n == cycle { Distance::Finite(k) } else { Distance::Infinite };
    let checks = [
        (certified.edge_count == n, "edge count differs from N"),
        (
            certified.scc_orders.first() == Some(&cycle)
                && certified.scc_orders.iter().skip(1).all(|&s| s == 1),
            "SCC structure differs from a single (k+1)-cycle",
        ),
        (profile.acc_sum() == (cycle * (n - 1)) as u64, "mean accessibility is not (k+1)(1-1/N)"),
        (sq == (n - cycle) as u128, "MSD from k is not 1-(k+1)/N"),
        (certified.diameter == expected_diameter, "unexpected diameter"),
    ];
    if let Some((_, what)) = checks.iter().find(|(ok, _)| !ok) {
        return Err(Error::Invariant(format!("M^kA({n}, {k}): {what}")));
    }
    Ok(ConstructionResult { graph, family: Family::Mka, certified, note: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ten_six() {
        let r = construct_mka(10, 6).unwrap();
        assert_eq!(r.certified.edge_count, 10);
        assert_eq!(r.certified.scc_orders[0], 7);
        assert!((r.certified.mean_acc - 6.3).abs() < 1e-12);
        assert!((r.certified.msd_from_k.unwrap() - 0.3).abs() < 1e-12);
    }

    #[test]
    fn full_cycle() {
        let r = construct_mka(5, 4).unwrap();
        assert_eq!(r.certified.edge_count, 5);
        assert_eq!(r.certified.scc_orders, vec![5]);
        assert_eq!(r.certified.msd_from_k, Some(0.0));
    }

    #[test]
    fn window_is_strict() {
        assert!(matches!(construct_mka(10, 4), Err(Error::Precondition(_))));
        assert!(construct_mka(10, 5).is_ok());
        assert!(construct_mka(10, 10).is_err());
    }
}
