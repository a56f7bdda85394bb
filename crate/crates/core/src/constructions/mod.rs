//! Extremal digraphs: optimal accessibility count vectors, minimal
//! k-accessible digraphs, minimal p-Clan digraphs, the m*(N, p) formula and
//! the exhaustive minimum-edge oracle.

mod mka;
mod model1;
mod mpc;
mod mstar;
mod oracle;

pub use mka::construct_mka;
pub use model1::{closed_form_objective, solve_model1, Model1Method, Model1Solution};
pub use mpc::{complete_digraph, construct_mpc, hamiltonian_cycle};
pub use mstar::{mstar, Agreement, MStarBranch, MStarResult};
pub use oracle::{oracle_min_pclan, OracleCache, OracleResult, ORACLE_MAX_ORDER};

use serde::Serialize;

use crate::graph::{accessibility_profile, diameter, tarjan_scc, Digraph, Distance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Mka,
    MpcStar,
    MpcMultifold,
    MpcSemistar,
    HamiltonianCycle,
}

/// Properties measured on a built graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certified {
    pub edge_count: usize,
    /// Orders of all SCCs, largest first.
    pub scc_orders: Vec<usize>,
    pub diameter: Distance,
    pub mean_acc: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub msd_from_k: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstructionResult {
    #[serde(skip)]
    pub graph: Digraph,
    pub family: Family,
    pub certified: Certified,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub(crate) fn measure(g: &Digraph, k: Option<usize>) -> Certified {
    let profile = accessibility_profile(g);
    let mut scc_orders = tarjan_scc(g).sizes();
    scc_orders.sort_unstable_by(|a, b| b.cmp(a));
    Certified {
        edge_count: g.size(),
        scc_orders,
        diameter: diameter(g, None),
        mean_acc: profile.mean(),
        msd_from_k: k.map(|k| profile.msd(k)),
    }
}
