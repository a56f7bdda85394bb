use serde::Serialize;

use super::{Digraph, VertexRecord};
use crate::error::{Error, Result};

/// Strongly connected components. Components are listed with members
/// sorted and ordered by their smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SccPartition {
    pub component_of: Vec<usize>,
    pub components: Vec<Vec<usize>>,
}

impl SccPartition {
    pub fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(Vec::len).collect()
    }

    /// Components of order at least two.
    pub fn nontrivial(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.components.iter().filter(|c| c.len() >= 2)
    }
}

/// Tarjan's algorithm with an explicit call stack.
pub fn tarjan_scc(g: &Digraph) -> SccPartition {
    const NONE: usize = usize::MAX;
    let n = g.order();
    let mut index = vec![NONE; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut raw: Vec<Vec<usize>> = Vec::new();
    let mut next = 0;
    // (vertex, position in its out-list)
    let mut calls: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != NONE {
            continue;
        }
        calls.push((root, 0));
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (u, ref mut pos)) = calls.last_mut() {
            let succ = g.out_neighbors(u);
            if *pos < succ.len() {
                let v = succ[*pos];
                *pos += 1;
                if index[v] == NONE {
                    index[v] = next;
                    low[v] = next;
                    next += 1;
                    stack.push(v);
                    on_stack[v] = true;
                    calls.push((v, 0));
                } else if on_stack[v] {
                    low[u] = low[u].min(index[v]);
                }
                continue;
            }
            calls.pop();
            if let Some(&(parent, _)) = calls.last() {
                low[parent] = low[parent].min(low[u]);
            }
            if low[u] == index[u] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == u {
                        break;
                    }
                }
                comp.sort_unstable();
                raw.push(comp);
            }
        }
    }

    raw.sort_unstable_by_key(|c| c[0]);
    let mut component_of = vec![0; n];
    for (ci, comp) in raw.iter().enumerate() {
        for &v in comp {
            component_of[v] = ci;
        }
    }
    SccPartition { component_of, components: raw }
}

/// Contracts every class of `partition` to one vertex named after its
/// smallest member. Fails if the partition does not describe the SCCs of `g`.
pub fn condense(g: &Digraph, partition: &SccPartition) -> Result<Digraph> {
    let n = g.order();
    if partition.component_of.len() != n {
        return Err(Error::Invariant(format!(
            "partition covers {} vertices, graph has {n}",
            partition.component_of.len()
        )));
    }
    let mut seen = vec![false; n];
    for (ci, comp) in partition.components.iter().enumerate() {
        if comp.is_empty() {
            return Err(Error::Invariant("empty component".into()));
        }
        for &v in comp {
            if v >= n || seen[v] || partition.component_of[v] != ci {
                return Err(Error::Invariant(format!("vertex {v} misassigned")));
            }
            seen[v] = true;
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::Invariant("partition does not cover every vertex".into()));
    }
    if *partition != tarjan_scc(g) {
        return Err(Error::Invariant("partition is not the SCC partition of the graph".into()));
    }

    let records: Vec<VertexRecord> =
        partition.components.iter().map(|c| g.vertex(c[0]).clone()).collect();
    let records = records
        .into_iter()
        .map(|mut r| {
            r.parent_id = None;
            r
        })
        .collect();
    let arcs: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| (partition.component_of[u], partition.component_of[v]))
        .filter(|(a, b)| a != b)
        .collect();
    let c = Digraph::from_indexed(records, arcs)?;
    if !is_acyclic(&c) {
        return Err(Error::Invariant("condensation contains a cycle".into()));
    }
    Ok(c)
}

/// Kahn's topological sort succeeds.
pub fn is_acyclic(g: &Digraph) -> bool {
    let mut indeg: Vec<usize> = (0..g.order()).map(|v| g.in_degree(v)).collect();
    let mut ready: Vec<usize> = (0..g.order()).filter(|&v| indeg[v] == 0).collect();
    let mut done = 0;
    while let Some(u) = ready.pop() {
        done += 1;
        for &v in g.out_neighbors(u) {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                ready.push(v);
            }
        }
    }
    done == g.order()
}
