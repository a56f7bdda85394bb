use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Digraph, VertexSet};

/// Result of collapsing 2-cycles.
#[derive(Debug, Clone)]
pub struct Contraction {
    pub graph: Digraph,
    /// Original vertices fused into each contracted vertex.
    pub members: Vec<VertexSet>,
    /// Contracted vertex of each original vertex.
    pub class_of: Vec<usize>,
    pub rounds: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ContractionSummary {
    pub original_order: usize,
    pub contracted_order: usize,
    pub rounds: usize,
}

impl Contraction {
    pub fn summary(&self) -> ContractionSummary {
        ContractionSummary {
            original_order: self.class_of.len(),
            contracted_order: self.graph.order(),
            rounds: self.rounds,
        }
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Merges the endpoints of every 2-cycle, repeating until none is left.
/// A merged vertex keeps the record of its smallest member; loops and
/// duplicate arcs created by merging are dropped.
pub fn contract_two_cycles(g: &Digraph) -> Result<Contraction> {
    if !g.is_strongly_connected() {
        return Err(Error::Precondition("2-cycle contraction needs a strongly connected digraph".into()));
    }
    let mut graph = g.clone();
    let mut class_of: Vec<usize> = (0..g.order()).collect();
    let mut rounds = 0;
    loop {
        let n = graph.order();
        let mut parent: Vec<usize> = (0..n).collect();
        let mut merged = false;
        for (u, v) in graph.edges() {
            if u < v && graph.has_edge(v, u) {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    // Keep the smaller root so classes are named by min member.
                    parent[a.max(b)] = a.min(b);
                    merged = true;
                }
            }
        }
        if !merged {
            break;
        }
        rounds += 1;
        let roots: Vec<usize> = (0..n).map(|v| find(&mut parent, v)).collect();
        let mut new_index = vec![usize::MAX; n];
        let mut records = Vec::new();
        for v in 0..n {
            if roots[v] == v {
                new_index[v] = records.len();
                let mut rec = graph.vertex(v).clone();
                rec.parent_id = None;
                records.push(rec);
            }
        }
        let arcs: Vec<(usize, usize)> = graph
            .edges()
            .map(|(u, v)| (new_index[roots[u]], new_index[roots[v]]))
            .filter(|(a, b)| a != b)
            .collect();
        for c in class_of.iter_mut() {
            *c = new_index[roots[*c]];
        }
        // Roots are in increasing position order, so ids stay sorted.
        graph = Digraph::from_indexed(records, arcs)?;
    }
    let mut members = vec![VertexSet::new(); graph.order()];
    for (v, &c) in class_of.iter().enumerate() {
        members[c].insert(v);
    }
    Ok(Contraction { graph, members, class_of, rounds })
}

/// True if some arc has its reverse.
pub fn has_two_cycle(g: &Digraph) -> bool {
    g.edges().any(|(u, v)| g.has_edge(v, u))
}
