//! Directed-graph representation and the traversal primitives used by every
//! other module.
//!
//! A [`Digraph`] is immutable once built. Vertices are stored sorted by id and
//! addressed by their position in that order, so every adjacency list is
//! ordered by vertex id and all iteration orders are deterministic.

mod assortativity;
mod degrees;
mod scc;
mod traversal;

pub use assortativity::assortativity;
pub use degrees::{degrees, DegreeVector, VertexDegrees};
pub use scc::{condense, is_acyclic, tarjan_scc, SccPartition};
pub use traversal::{
    accessibility_profile, bfs_distances, diameter, AccessibilityProfile, Distance,
};

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Set of vertex positions within one particular [`Digraph`].
pub type VertexSet = BTreeSet<usize>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexKind {
    Customer,
    Bank,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub id: String,
    pub kind: VertexKind,
    /// Parent bank of a branch.
    pub parent_id: Option<String>,
}

impl VertexRecord {
    pub fn bank(id: impl Into<String>) -> Self {
        VertexRecord { id: id.into(), kind: VertexKind::Bank, parent_id: None }
    }

    pub fn customer(id: impl Into<String>) -> Self {
        VertexRecord { id: id.into(), kind: VertexKind::Customer, parent_id: None }
    }

    pub fn branch(id: impl Into<String>, parent: impl Into<String>) -> Self {
        VertexRecord { id: id.into(), kind: VertexKind::Bank, parent_id: Some(parent.into()) }
    }
}

/// Loopless simple digraph with labeled vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    vertices: Vec<VertexRecord>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    edge_count: usize,
}

/// An induced subgraph together with the positions its vertices had in the
/// graph it was cut from.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: Digraph,
    pub to_parent: Vec<usize>,
}

impl Subgraph {
    /// Position in the subgraph of a parent-graph vertex, if kept.
    pub fn from_parent(&self, parent: usize) -> Option<usize> {
        self.to_parent.binary_search(&parent).ok()
    }

    pub fn set_to_parent(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|&v| self.to_parent[v]).collect()
    }
}

impl Digraph {
    /// Builds a digraph from id pairs. Duplicate edges collapse; vertices
    /// that appear only in `edges` default to banks.
    pub fn build<I, S>(edges: I, vertex_meta: Option<&[VertexRecord]>) -> Result<Self>
    where
        I: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let mut records: BTreeMap<String, VertexRecord> = BTreeMap::new();
        if let Some(meta) = vertex_meta {
            for rec in meta {
                if rec.id.is_empty() {
                    return Err(Error::Metadata("empty vertex id".into()));
                }
                if records.insert(rec.id.clone(), rec.clone()).is_some() {
                    return Err(Error::Metadata(format!("duplicate vertex id: {}", rec.id)));
                }
            }
        }
        let mut pairs = Vec::new();
        for (src, dst) in edges {
            let (src, dst) = (src.as_ref(), dst.as_ref());
            if src.is_empty() || dst.is_empty() {
                return Err(Error::Metadata("empty vertex id in edge".into()));
            }
            if src == dst {
                return Err(Error::SelfLoop(src.to_string()));
            }
            for id in [src, dst] {
                if !records.contains_key(id) {
                    records.insert(id.to_string(), VertexRecord::bank(id));
                }
            }
            pairs.push((src.to_string(), dst.to_string()));
        }
        for rec in records.values() {
            if let Some(parent) = &rec.parent_id {
                if rec.kind == VertexKind::Customer {
                    return Err(Error::Metadata(format!("customer {} has a parent", rec.id)));
                }
                match records.get(parent) {
                    Some(p) if p.kind == VertexKind::Bank => {}
                    _ => {
                        return Err(Error::Metadata(format!(
                            "parent {} of {} is not a known bank",
                            parent, rec.id
                        )))
                    }
                }
            }
        }
        let index: BTreeMap<&str, usize> =
            records.keys().enumerate().map(|(i, id)| (id.as_str(), i)).collect();
        let arcs: Vec<(usize, usize)> =
            pairs.iter().map(|(s, d)| (index[s.as_str()], index[d.as_str()])).collect();
        let vertices: Vec<VertexRecord> = records.into_values().collect();
        Ok(Self::assemble(vertices, arcs))
    }

    /// Builds from records in any order plus arcs given as positions into
    /// `records`. Used by constructions that generate graphs directly.
    pub fn from_indexed(
        records: Vec<VertexRecord>,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut order: Vec<usize> = (0..records.len()).collect();
        order.sort_by(|&a, &b| records[a].id.cmp(&records[b].id));
        for w in order.windows(2) {
            if records[w[0]].id == records[w[1]].id {
                return Err(Error::Metadata(format!("duplicate vertex id: {}", records[w[0]].id)));
            }
        }
        let mut new_pos = vec![0; records.len()];
        for (new, &old) in order.iter().enumerate() {
            new_pos[old] = new;
        }
        let mut mapped = Vec::new();
        for (u, v) in arcs {
            if u >= records.len() || v >= records.len() {
                return Err(Error::UnknownVertex(format!("position {}", u.max(v))));
            }
            if u == v {
                return Err(Error::SelfLoop(records[u].id.clone()));
            }
            mapped.push((new_pos[u], new_pos[v]));
        }
        let mut slots: Vec<Option<VertexRecord>> = records.into_iter().map(Some).collect();
        let vertices = order.iter().map(|&old| slots[old].take().unwrap()).collect();
        Ok(Self::assemble(vertices, mapped))
    }

    /// Vertices named `prefix0 .. prefix{n-1}`, zero padded so that id order
    /// matches numeric order. Handy for synthetic graphs.
    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::from_indexed(numbered_banks("v", n), arcs)
    }

    fn assemble(vertices: Vec<VertexRecord>, arcs: Vec<(usize, usize)>) -> Self {
        let n = vertices.len();
        let set: BTreeSet<(usize, usize)> = arcs.into_iter().collect();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in &set {
            out_adj[u].push(v);
        }
        // Iterating the ordered set by head keeps in-lists sorted too.
        let mut by_head: Vec<(usize, usize)> = set.iter().map(|&(u, v)| (v, u)).collect();
        by_head.sort_unstable();
        for (v, u) in by_head {
            in_adj[v].push(u);
        }
        let g = Digraph { vertices, out_adj, in_adj, edge_count: set.len() };
        debug_assert!(g.transpose_consistent());
        g
    }

    /// N
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// m
    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> &[VertexRecord] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &VertexRecord {
        &self.vertices[v]
    }

    pub fn id(&self, v: usize) -> &str {
        &self.vertices[v].id
    }

    pub fn kind(&self, v: usize) -> VertexKind {
        self.vertices[v].kind
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.vertices.binary_search_by(|r| r.id.as_str().cmp(id)).ok()
    }

    /// Resolves a list of ids, failing on the first unknown one.
    pub fn indices_of<'a>(&self, ids: impl IntoIterator<Item = &'a str>) -> Result<VertexSet> {
        ids.into_iter()
            .map(|id| self.index_of(id).ok_or_else(|| Error::UnknownVertex(id.to_string())))
            .collect()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out_adj[u].binary_search(&v).is_ok()
    }

    /// Arcs in (tail, head) order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_adj.iter().enumerate().flat_map(|(u, hs)| hs.iter().map(move |&v| (u, v)))
    }

    /// Arcs as id pairs.
    pub fn edge_ids(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.edges().map(|(u, v)| (self.id(u), self.id(v)))
    }

    /// Plain adjacency lists, the format the reference oracles consume.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        self.out_adj.clone()
    }

    pub fn has_customers(&self) -> bool {
        self.vertices.iter().any(|r| r.kind == VertexKind::Customer)
    }

    pub fn transpose_consistent(&self) -> bool {
        let forward = self.out_adj.iter().enumerate().all(|(u, hs)| {
            hs.iter().all(|&v| self.in_adj[v].binary_search(&u).is_ok())
        });
        let in_total: usize = self.in_adj.iter().map(Vec::len).sum();
        forward && in_total == self.edge_count
    }

    /// Number of arcs with both endpoints in `set`.
    pub fn internal_edge_count(&self, set: &VertexSet) -> usize {
        set.iter()
            .map(|&u| self.out_adj[u].iter().filter(|v| set.contains(v)).count())
            .sum()
    }

    /// Subgraph induced by `keep`. Parent links that leave the subgraph are
    /// dropped.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Subgraph {
        let to_parent: Vec<usize> = keep.iter().copied().collect();
        let mut records: Vec<VertexRecord> =
            to_parent.iter().map(|&v| self.vertices[v].clone()).collect();
        for rec in &mut records {
            if let Some(p) = &rec.parent_id {
                let kept = self.index_of(p).is_some_and(|pi| keep.contains(&pi));
                if !kept {
                    rec.parent_id = None;
                }
            }
        }
        let mut arcs = Vec::new();
        for (new_u, &u) in to_parent.iter().enumerate() {
            for &v in &self.out_adj[u] {
                if let Ok(new_v) = to_parent.binary_search(&v) {
                    arcs.push((new_u, new_v));
                }
            }
        }
        // Positions are already id-sorted, so no remapping is needed.
        Subgraph { graph: Self::assemble(records, arcs), to_parent }
    }

    /// Subgraph on bank vertices.
    pub fn bank_subgraph(&self) -> Subgraph {
        let banks: VertexSet =
            (0..self.order()).filter(|&v| self.kind(v) == VertexKind::Bank).collect();
        self.induced_subgraph(&banks)
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.order() > 0 && tarjan_scc(self).components.len() == 1
    }

    /// Same vertex set plus extra arcs.
    pub fn with_added_arcs(&self, extra: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut arcs: Vec<(usize, usize)> = self.edges().collect();
        for (u, v) in extra {
            if u == v {
                return Err(Error::SelfLoop(self.id(u).to_string()));
            }
            arcs.push((u, v));
        }
        Ok(Self::assemble(self.vertices.clone(), arcs))
    }
}

/// `prefix0 ..` bank records, zero padded to a common width.
pub fn numbered_banks(prefix: &str, n: usize) -> Vec<VertexRecord> {
    let width = n.saturating_sub(1).to_string().len();
    (0..n).map(|i| VertexRecord::bank(format!("{prefix}{i:0width$}"))).collect()
}
