use serde::Serialize;

use super::circumference::{circumference_bounds, CircumferenceInterval};
use super::contraction::{contract_two_cycles, has_two_cycle};
use super::eulerian::{boost_min_outdegree, eulerianize, Checksum};
use crate::error::{Error, Result};
use crate::graph::{diameter, Digraph, Distance};

/// 4n'/(2δ+1) - 4
pub fn dankelmann_bound(n_prime: usize, delta: usize) -> f64 {
    4.0 * n_prime as f64 / (2 * delta + 1) as f64 - 4.0
}

/// 5n'/(2δ+2)
pub fn knyazev_bound(n_prime: usize, delta: usize) -> f64 {
    5.0 * n_prime as f64 / (2 * delta + 2) as f64
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub original_order: usize,
    pub contracted_order: usize,
    pub omega_size: usize,
    pub n_prime: usize,
    /// Smallest final degree over the contracted vertices.
    pub delta: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega_min_degree: Option<usize>,
    pub boost_steps: usize,
    pub added_edges: usize,
    pub checksum: Checksum,
    pub dankelmann_bound: f64,
    pub knyazev_bound: f64,
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Diameter of the contracted digraph.
    pub measured_diameter: Distance,
    /// Diameter of the final Eulerian extension, the graph the bounds are
    /// stated for.
    pub extension_diameter: Distance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub circumference_interval: Option<CircumferenceInterval>,
}

impl BoundReport {
    /// Measured diameter within the primary bound (vacuous when the bound
    /// does not apply).
    pub fn bound_holds(&self) -> bool {
        !self.applicable
            || self.measured_diameter.finite().is_some_and(|d| d as f64 <= self.dankelmann_bound + 1e-9)
    }
}

/// Contract 2-cycles, extend to an Eulerian digraph, boost the minimum degree
/// and evaluate both diameter bounds. `p`, when given, adds the circumference
/// interval of `g`.
pub fn diameter_bound(g: &Digraph, p: Option<usize>) -> Result<BoundReport> {
    if !g.is_strongly_connected() {
        return Err(Error::Precondition("diameter bound needs a strongly connected digraph".into()));
    }
    let contraction = contract_two_cycles(g)?;
    let ext = boost_min_outdegree(eulerianize(&contraction.graph)?)?;
    let n_prime = ext.order();
    let delta = ext.delta();
    let extended = ext.graph()?;
    let reason = if delta < 2 {
        Some("δ < 2".to_string())
    } else if 2 * delta > n_prime {
        Some("δ > n'/2".to_string())
    } else if ext.omega_min_degree().is_some_and(|d| d < delta) {
        Some("nominal vertex degree below δ".to_string())
    } else if has_two_cycle(&extended) {
        Some("extension contains a 2-cycle".to_string())
    } else {
        None
    };
    let circumference_interval = p.map(|p| circumference_bounds(g, p)).transpose()?;
    Ok(BoundReport {
        original_order: g.order(),
        contracted_order: contraction.graph.order(),
        omega_size: ext.omega_size,
        n_prime,
        delta,
        omega_min_degree: ext.omega_min_degree(),
        boost_steps: ext.boost_steps,
        added_edges: ext.added_edges.len(),
        checksum: ext.checksum,
        dankelmann_bound: dankelmann_bound(n_prime, delta),
        knyazev_bound: knyazev_bound(n_prime, delta),
        applicable: reason.is_none(),
        reason,
        measured_diameter: diameter(&contraction.graph, None),
        extension_diameter: diameter(&extended, None),
        circumference_interval,
    })
}
