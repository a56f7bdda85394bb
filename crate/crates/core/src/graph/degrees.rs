use serde::Serialize;

use super::{Digraph, VertexKind};

/// In/out degree of one vertex, split by the kind of the other endpoint.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct VertexDegrees {
    pub in_total: usize,
    pub out_total: usize,
    pub in_from_customers: usize,
    pub in_from_banks: usize,
    pub out_to_customers: usize,
    pub out_to_banks: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeVector(pub Vec<VertexDegrees>);

impl DegreeVector {
    pub fn get(&self, v: usize) -> &VertexDegrees {
        &self.0[v]
    }

    pub fn total_in(&self) -> usize {
        self.0.iter().map(|d| d.in_total).sum()
    }

    pub fn total_out(&self) -> usize {
        self.0.iter().map(|d| d.out_total).sum()
    }
}

pub fn degrees(g: &Digraph) -> DegreeVector {
    let mut out = vec![VertexDegrees::default(); g.order()];
    for (u, v) in g.edges() {
        out[u].out_total += 1;
        out[v].in_total += 1;
        match g.kind(v) {
            VertexKind::Customer => out[u].out_to_customers += 1,
            VertexKind::Bank => out[u].out_to_banks += 1,
        }
        match g.kind(u) {
            VertexKind::Customer => out[v].in_from_customers += 1,
            VertexKind::Bank => out[v].in_from_banks += 1,
        }
    }
    DegreeVector(out)
}
