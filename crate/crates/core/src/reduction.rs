//! What-if removal of banks from the giant SCC.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{mstar, oracle_min_pclan, MStarResult, ORACLE_MAX_ORDER};
use crate::error::{Error, Result};
use crate::graph::{diameter, tarjan_scc, Digraph, Distance, VertexSet};

/// Smallest GSCC order a removal may leave behind.
pub const MIN_SURVIVING_ORDER: usize = 2;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RemovalVerdict {
    pub removed: VertexSet,
    pub still_strongly_connected: bool,
    pub diameter_before: Distance,
    pub diameter_after: Distance,
    pub order_after: usize,
    pub edge_count_after: usize,
    /// m*(order_after, p) with p the original diameter capped at order_after - 1.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mstar_threshold: Option<MStarResult>,
    /// Advisory: edge_count_after >= threshold. Does not affect `feasible`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mstar_screen_passed: Option<bool>,
    pub feasible: bool,
    /// Neighbours of removed vertices that lie outside the GSCC.
    pub impacted: VertexSet,
}

fn check_candidates(gscc: &VertexSet, candidates: &VertexSet) -> Result<()> {
    if let Some(v) = candidates.iter().find(|v| !gscc.contains(v)) {
        return Err(Error::Precondition(format!("candidate at position {v} is outside the GSCC")));
    }
    if gscc.len() - candidates.len() < MIN_SURVIVING_ORDER {
        return Err(Error::Precondition(format!(
            "removal would leave fewer than {MIN_SURVIVING_ORDER} GSCC vertices"
        )));
    }
    Ok(())
}

/// Evaluates removing `candidates` from `gscc`. Feasible means the rest of the
/// GSCC stays strongly connected and its diameter does not grow.
pub fn check_removal(g: &Digraph, gscc: &VertexSet, candidates: &VertexSet) -> Result<RemovalVerdict> {
    check_candidates(gscc, candidates)?;
    let before = diameter(g, Some(gscc));
    evaluate(g, gscc, candidates, before, true)
}

fn evaluate(
    g: &Digraph,
    gscc: &VertexSet,
    candidates: &VertexSet,
    before: Distance,
    screen: bool,
) -> Result<RemovalVerdict> {
    let rest: VertexSet = gscc.difference(candidates).copied().collect();
    let sub = g.induced_subgraph(&rest);
    let connected = tarjan_scc(&sub.graph).components.len() == 1;
    let after = diameter(g, Some(&rest));
    let order_after = rest.len();
    let edge_count_after = sub.graph.size();
    let feasible = connected && after <= before;

    let mstar_threshold = match (screen, before) {
        (true, Distance::Finite(d)) if order_after >= 3 => {
            let p = d.clamp(1, order_after - 1);
            let mut r = mstar(order_after, p)?;
            if order_after <= ORACLE_MAX_ORDER {
                r = r.with_oracle(oracle_min_pclan(order_after, p)?.min_edges);
            }
            Some(r)
        }
        _ => None,
    };
    let mstar_screen_passed = mstar_threshold.as_ref().map(|t| edge_count_after >= t.threshold());

    let mut impacted = VertexSet::new();
    for &v in candidates {
        for &u in g.out_neighbors(v).iter().chain(g.in_neighbors(v)) {
            if !gscc.contains(&u) {
                impacted.insert(u);
            }
        }
    }
    Ok(RemovalVerdict {
        removed: candidates.clone(),
        still_strongly_connected: connected,
        diameter_before: before,
        diameter_after: after,
        order_after,
        edge_count_after,
        mstar_threshold,
        mstar_screen_passed,
        feasible,
        impacted,
    })
}

/// Greedily removes single GSCC vertices while the removal stays feasible.
///
/// Each round evaluates every remaining vertex (in parallel) and removes the
/// feasible one with the highest cost, ties to the smallest id; vertices
/// without a cost count as 0. The diameter bound is always the original
/// GSCC's. Stops when no single removal is feasible or the surviving order
/// would drop below [`MIN_SURVIVING_ORDER`].
pub fn greedy_max_removal(
    g: &Digraph,
    gscc: &VertexSet,
    cost: Option<&BTreeMap<usize, f64>>,
) -> Result<(VertexSet, RemovalVerdict)> {
    if gscc.len() < 3 {
        return Err(Error::Precondition(format!("GSCC order {} below 3", gscc.len())));
    }
    if let Some(v) = cost.and_then(|c| c.iter().find(|(_, &w)| !(w >= 0.0)).map(|(&v, _)| v)) {
        return Err(Error::Precondition(format!("cost of position {v} is negative or NaN")));
    }
    let before = diameter(g, Some(gscc));
    let weight = |v: usize| cost.and_then(|c| c.get(&v)).copied().unwrap_or(0.0);
    let mut removed = VertexSet::new();
    while gscc.len() - removed.len() > MIN_SURVIVING_ORDER {
        let remaining: Vec<usize> = gscc.difference(&removed).copied().collect();
        let feasible: Vec<usize> = remaining
            .par_iter()
            .map(|&v| {
                let mut trial = removed.clone();
                trial.insert(v);
                evaluate(g, gscc, &trial, before, false).map(|r| r.feasible.then_some(v))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        // Highest cost, then smallest position (= smallest id).
        let pick = feasible.into_iter().fold(None, |best: Option<usize>, v| match best {
            Some(b) if weight(b) >= weight(v) => Some(b),
            _ => Some(v),
        });
        let Some(v) = pick else { break };
        removed.insert(v);
    }
    let verdict = check_removal(g, gscc, &removed)?;
    Ok((removed, verdict))
}
