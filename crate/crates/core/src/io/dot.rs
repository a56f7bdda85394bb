use std::fmt::Write as _;

use crate::graph::{Digraph, VertexKind, VertexSet};

fn quote(id: &str) -> String {
    format!("\"{}\"", id.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz text with one statement per vertex and per arc, in position
/// order. Vertices in `highlight` are filled; customers are drawn as boxes.
pub fn export_dot(g: &Digraph, highlight: Option<&VertexSet>) -> String {
    let mut s = String::from("digraph cbnet {\n");
    for v in 0..g.order() {
        let mut attrs = Vec::new();
        if g.kind(v) == VertexKind::Customer {
            attrs.push("shape=box");
        }
        if highlight.is_some_and(|h| h.contains(&v)) {
            attrs.push("style=filled");
            attrs.push("fillcolor=gold");
        }
        let _ = if attrs.is_empty() {
            writeln!(s, "  {};", quote(g.id(v)))
        } else {
            writeln!(s, "  {} [{}];", quote(g.id(v)), attrs.join(","))
        };
    }
    for (u, v) in g.edge_ids() {
        let _ = writeln!(s, "  {} -> {};", quote(u), quote(v));
    }
    s.push_str("}\n");
    s
}
