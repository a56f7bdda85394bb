use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Pareto;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Digraph, VertexRecord, VertexSet};

/// Upper limit on branches per parent.
const MAX_BRANCHES: usize = 60;
/// Chance that a branch gets an extra arc to another parent.
const BRANCH_LINK_PROB: f64 = 0.3;
/// Chance that a sender correspondent routes via an earlier one.
const SENDER_CHAIN_PROB: f64 = 0.05;
/// Chance that a receiver correspondent is also fed by an earlier one.
const RECEIVER_FEED_PROB: f64 = 0.05;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeneratorConfig {
    pub seed: u64,
    /// Headquarters banks; they form the strongly connected core.
    pub parents: usize,
    /// Mean branches per parent (heavy tailed).
    pub branch_mean: f64,
    /// Tail exponent of the branch-count distribution (> 2).
    pub branch_exponent: f64,
    /// Probability of each extra parent-to-parent arc.
    pub core_density: f64,
    /// Banks that only feed the core.
    pub sender_correspondents: usize,
    /// Banks that only receive from the core.
    pub receiver_correspondents: usize,
    /// Customers attached to sender correspondents.
    pub sender_count: usize,
    /// Customers attached to receiver correspondents.
    pub receiver_count: usize,
    /// Exponent applied to degrees when choosing attachment targets.
    pub attach_exponent: f64,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            seed: 42,
            parents: 31,
            branch_mean: 2.0,
            branch_exponent: 2.5,
            core_density: 0.08,
            sender_correspondents: 60,
            receiver_correspondents: 400,
            sender_count: 0,
            receiver_count: 0,
            attach_exponent: 1.0,
        }
    }
}

/// A generated network plus what was planted in it. Sets hold positions in
/// `graph`.
#[derive(Debug, Clone)]
pub struct GeneratedNetwork {
    pub graph: Digraph,
    pub parents: VertexSet,
    /// Parents and their branches.
    pub expected_gscc: VertexSet,
    pub sender_side: VertexSet,
    pub receiver_side: VertexSet,
    /// Accessibility of every core bank in the bank subgraph.
    pub planted_k: usize,
}

struct Builder {
    records: Vec<VertexRecord>,
    arcs: Vec<(usize, usize)>,
    in_deg: Vec<usize>,
    out_deg: Vec<usize>,
}

impl Builder {
    fn vertex(&mut self, rec: VertexRecord) -> usize {
        self.records.push(rec);
        self.in_deg.push(0);
        self.out_deg.push(0);
        self.records.len() - 1
    }

    fn arc(&mut self, u: usize, v: usize) {
        if u != v && !self.arcs.contains(&(u, v)) {
            self.arcs.push((u, v));
            self.out_deg[u] += 1;
            self.in_deg[v] += 1;
        }
    }

    /// Picks from `pool` with weight (1 + degree)^alpha.
    fn pick(&self, rng: &mut ChaCha8Rng, pool: &[usize], by_in: bool, alpha: f64) -> usize {
        let weights: Vec<f64> = pool
            .iter()
            .map(|&v| {
                let d = if by_in { self.in_deg[v] } else { self.out_deg[v] };
                (1.0 + d as f64).powf(alpha)
            })
            .collect();
        let dist = WeightedIndex::new(&weights).expect("attachment weights are positive");
        pool[dist.sample(rng)]
    }
}

fn validate(c: &GeneratorConfig) -> Result<()> {
    let counts = [("parents", c.parents), ("sender_correspondents", c.sender_correspondents)];
    for (name, v) in counts {
        if v == 0 {
            return Err(Error::Precondition(format!("{name} must be at least 1")));
        }
    }
    if c.parents < 2 {
        return Err(Error::Precondition("parents must be at least 2".into()));
    }
    if !(0.0..=1.0).contains(&c.core_density) {
        return Err(Error::Precondition("core_density must lie in [0, 1]".into()));
    }
    if !(c.branch_exponent > 2.0) || !(c.branch_mean >= 0.0) {
        return Err(Error::Precondition("branch_exponent must exceed 2 and branch_mean be >= 0".into()));
    }
    if !c.attach_exponent.is_finite() {
        return Err(Error::Precondition("attach_exponent must be finite".into()));
    }
    Ok(())
}

/// Builds a seeded synthetic correspondent-banking network:
///
/// * parents on a random Hamiltonian cycle plus random arcs at
///   `core_density`;
/// * branches joined to their parent by a 2-cycle, with occasional arcs to
///   other parents chosen by in-degree;
/// * sender correspondents with heavy-tailed fan-out into the core, targets
///   chosen by in-degree;
/// * receiver correspondents fed by 1-2 core banks chosen by out-degree;
/// * optional customers on both ends.
///
/// Identical configs give identical graphs.
pub fn generate(config: &GeneratorConfig) -> Result<GeneratedNetwork> {
    validate(config)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut b = Builder { records: Vec::new(), arcs: Vec::new(), in_deg: Vec::new(), out_deg: Vec::new() };
    let alpha = config.attach_exponent;

    let parents: Vec<usize> =
        (0..config.parents).map(|i| b.vertex(VertexRecord::bank(format!("p{i:04}")))).collect();
    let mut order = parents.clone();
    order.shuffle(&mut rng);
    for i in 0..order.len() {
        b.arc(order[i], order[(i + 1) % order.len()]);
    }
    for &u in &parents {
        for &v in &parents {
            if u != v && rng.random_bool(config.core_density) {
                b.arc(u, v);
            }
        }
    }

    // Branch counts: floor of a Pareto variable with the requested mean.
    let shape = config.branch_exponent - 1.0;
    let scale = (config.branch_mean * (shape - 1.0) / shape).max(f64::MIN_POSITIVE);
    let pareto = Pareto::new(scale, shape).map_err(|e| Error::Precondition(e.to_string()))?;
    let mut core = parents.clone();
    for &p in &parents {
        let count = (pareto.sample(&mut rng).floor() as usize).min(MAX_BRANCHES);
        let pid = b.records[p].id.clone();
        for j in 0..count {
            let br = b.vertex(VertexRecord::branch(format!("{pid}b{j:02}"), pid.clone()));
            b.arc(br, p);
            b.arc(p, br);
            core.push(br);
        }
    }
    let branches: Vec<usize> = core[parents.len()..].to_vec();
    for &br in &branches {
        if rng.random_bool(BRANCH_LINK_PROB) {
            let target = b.pick(&mut rng, &parents, true, alpha);
            b.arc(br, target);
        }
    }

    let mut senders = Vec::new();
    for i in 0..config.sender_correspondents {
        let s = b.vertex(VertexRecord::bank(format!("s{i:04}")));
        if !senders.is_empty() && rng.random_bool(SENDER_CHAIN_PROB) {
            let via = senders[rng.random_range(0..senders.len())];
            b.arc(s, via);
        } else {
            let fan_out = 1 + (pareto.sample(&mut rng).floor() as usize).min(core.len() - 1);
            for _ in 0..fan_out {
                let target = b.pick(&mut rng, &core, true, alpha);
                b.arc(s, target);
            }
        }
        senders.push(s);
    }
    let mut receivers = Vec::new();
    for i in 0..config.receiver_correspondents {
        let r = b.vertex(VertexRecord::bank(format!("r{i:04}")));
        for _ in 0..rng.random_range(1..=2) {
            let source = b.pick(&mut rng, &core, false, alpha);
            b.arc(source, r);
        }
        if !receivers.is_empty() && rng.random_bool(RECEIVER_FEED_PROB) {
            let from = receivers[rng.random_range(0..receivers.len())];
            b.arc(from, r);
        }
        receivers.push(r);
    }

    for i in 0..config.sender_count {
        let c = b.vertex(VertexRecord::customer(format!("cs{i:05}")));
        let bank = b.pick(&mut rng, &senders, false, alpha);
        b.arc(c, bank);
    }
    if !receivers.is_empty() {
        for i in 0..config.receiver_count {
            let c = b.vertex(VertexRecord::customer(format!("cr{i:05}")));
            let bank = b.pick(&mut rng, &receivers, true, alpha);
            b.arc(bank, c);
        }
    }

    let planted_k = core.len() - 1 + receivers.len();
    let graph = Digraph::from_indexed(b.records.clone(), b.arcs.iter().copied())?;
    let map = |set: &[usize]| -> VertexSet {
        set.iter().map(|&v| graph.index_of(&b.records[v].id).expect("generated id")).collect()
    };
    Ok(GeneratedNetwork {
        parents: map(&parents),
        expected_gscc: map(&core),
        sender_side: map(&senders),
        receiver_side: map(&receivers),
        planted_k,
        graph,
    })
}
