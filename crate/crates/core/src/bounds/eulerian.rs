use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Digraph, VertexRecord};

/// Prefix of the ids given to nominal vertices.
pub const OMEGA_PREFIX: &str = "~omega";

/// Σ max(I, O) - m against 2|Ω|. The two sides agree only for special degree
/// sequences, so the comparison is reported rather than enforced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Checksum {
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
}

/// A digraph extended by nominal vertices until every vertex is balanced.
///
/// Positions 0..base.order() are the base vertices, the following
/// `omega_size` positions the nominal ones.
#[derive(Debug, Clone)]
pub struct EulerianExtension {
    pub base: Digraph,
    pub omega_size: usize,
    pub arcs: BTreeSet<(usize, usize)>,
    /// Arcs not present in `base`, in insertion order.
    pub added_edges: Vec<(usize, usize)>,
    pub checksum: Checksum,
    pub boost_steps: usize,
}

impl EulerianExtension {
    /// n' = base order + |Ω|.
    pub fn order(&self) -> usize {
        self.base.order() + self.omega_size
    }

    pub fn is_omega(&self, v: usize) -> bool {
        v >= self.base.order()
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.order()];
        for &(u, _) in &self.arcs {
            d[u] += 1;
        }
        d
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.order()];
        for &(_, v) in &self.arcs {
            d[v] += 1;
        }
        d
    }

    pub fn is_balanced(&self) -> bool {
        self.out_degrees() == self.in_degrees()
    }

    /// Current degree d_i of every base vertex.
    pub fn base_degrees(&self) -> Vec<usize> {
        let mut d = self.out_degrees();
        d.truncate(self.base.order());
        d
    }

    /// Smallest degree over base vertices.
    pub fn delta(&self) -> usize {
        self.base_degrees().into_iter().min().unwrap_or(0)
    }

    /// Smallest degree over nominal vertices, if any.
    pub fn omega_min_degree(&self) -> Option<usize> {
        self.out_degrees()[self.base.order()..].iter().copied().min()
    }

    /// Nominal vertices sharing no arc with base vertex `i`.
    pub fn zeta(&self, i: usize) -> BTreeSet<usize> {
        (self.base.order()..self.order())
            .filter(|&w| !self.arcs.contains(&(i, w)) && !self.arcs.contains(&(w, i)))
            .collect()
    }

    /// The extended digraph with nominal vertices named `~omega0..`.
    pub fn graph(&self) -> Result<Digraph> {
        let mut records: Vec<VertexRecord> = self.base.vertices().to_vec();
        for i in 0..self.omega_size {
            let id = format!("{OMEGA_PREFIX}{i}");
            if self.base.index_of(&id).is_some() {
                return Err(Error::Invariant(format!("nominal id {id} collides with a vertex")));
            }
            records.push(VertexRecord::bank(id));
        }
        Digraph::from_indexed(records, self.arcs.iter().copied())
    }

    fn add(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v || !self.arcs.insert((u, v)) {
            return Err(Error::Invariant(format!("arc ({u}, {v}) is a loop or already present")));
        }
        self.added_edges.push((u, v));
        Ok(())
    }
}

/// Balances a strongly connected digraph with |Ω| = max |I_i - O_i| nominal
/// vertices. Surplus arcs are dealt to nominal vertices round robin, in
/// vertex order, with one pointer for arcs into Ω and one for arcs out of Ω;
/// both hand out the same total, so every nominal vertex ends balanced.
pub fn eulerianize(g: &Digraph) -> Result<EulerianExtension> {
    if !g.is_strongly_connected() {
        return Err(Error::Precondition("Eulerian extension needs a strongly connected digraph".into()));
    }
    let n = g.order();
    let imbalance: Vec<isize> =
        (0..n).map(|v| g.in_degree(v) as isize - g.out_degree(v) as isize).collect();
    let omega_size = imbalance.iter().map(|d| d.unsigned_abs()).max().unwrap_or(0);
    let mut ext = EulerianExtension {
        base: g.clone(),
        omega_size,
        arcs: g.edges().collect(),
        added_edges: Vec::new(),
        checksum: Checksum { lhs: 0, rhs: 2 * omega_size, holds: false },
        boost_steps: 0,
    };
    let (mut to_omega, mut from_omega) = (0, 0);
    for (v, &d) in imbalance.iter().enumerate() {
        for _ in 0..d.unsigned_abs() {
            if d > 0 {
                ext.add(v, n + to_omega)?;
                to_omega = (to_omega + 1) % omega_size;
            } else {
                ext.add(n + from_omega, v)?;
                from_omega = (from_omega + 1) % omega_size;
            }
        }
    }
    let lhs = (0..n).map(|v| g.in_degree(v).max(g.out_degree(v))).sum::<usize>() - g.size();
    ext.checksum = Checksum { lhs, rhs: 2 * omega_size, holds: lhs == 2 * omega_size };
    audit(&ext)?;
    Ok(ext)
}

/// Raises low base degrees by routing through pairs of nominal vertices.
///
/// Each round takes j with the smallest degree (ties: lowest position) and
/// the partner q != j with d_q <= n'/2 and at least two nominal vertices
/// adjacent to neither, preferring small d_q then low position. With v < w
/// the two smallest such nominal vertices, arcs q->v, w->q, j->w, v->j are
/// added. Stops when j has no partner.
pub fn boost_min_outdegree(mut ext: EulerianExtension) -> Result<EulerianExtension> {
    let n_prime = ext.order();
    let base_n = ext.base.order();
    loop {
        let d = ext.base_degrees();
        let Some(j) = (0..base_n).min_by_key(|&i| (d[i], i)) else { break };
        let zj = ext.zeta(j);
        if zj.len() < 2 {
            break;
        }
        let partner = (0..base_n)
            .filter(|&q| q != j && 2 * d[q] <= n_prime)
            .filter_map(|q| {
                let common: Vec<usize> = ext.zeta(q).intersection(&zj).copied().take(2).collect();
                (common.len() == 2).then(|| (d[q], q, common[0], common[1]))
            })
            .min();
        let Some((_, q, v, w)) = partner else { break };
        for (a, b) in [(q, v), (w, q), (j, w), (v, j)] {
            ext.add(a, b)?;
        }
        ext.boost_steps += 1;
        if !ext.is_balanced() {
            return Err(Error::Invariant(format!("boost step {} unbalanced the digraph", ext.boost_steps)));
        }
    }
    audit(&ext)?;
    Ok(ext)
}

fn audit(ext: &EulerianExtension) -> Result<()> {
    if !ext.is_balanced() {
        return Err(Error::Invariant("extension is not balanced".into()));
    }
    if !ext.graph()?.is_strongly_connected() {
        return Err(Error::Invariant("extension lost strong connectivity".into()));
    }
    Ok(())
}
