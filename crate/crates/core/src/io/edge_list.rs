use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Digraph, VertexKind, VertexRecord};

/// Lines of `text` with their 1-based numbers, skipping blanks and `#`
/// comments. CRLF endings are accepted.
pub(crate) fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.trim_end_matches('\r').trim();
        (!line.is_empty() && !line.starts_with('#')).then_some((i + 1, line))
    })
}

pub(crate) fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Parses `src,dst` lines (optional `src,dst` header) into a digraph.
pub fn parse_edge_list(text: &str) -> Result<Digraph> {
    parse_edge_list_with(text, None)
}

/// As [`parse_edge_list`], with vertex metadata from a vertex table.
pub fn parse_edge_list_with(text: &str, meta: Option<&[VertexRecord]>) -> Result<Digraph> {
    let mut edges = Vec::new();
    for (idx, (line_no, line)) in data_lines(text).enumerate() {
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if idx == 0 && fields == ["src", "dst"] {
            continue;
        }
        let [src, dst] = fields[..] else {
            return Err(parse_err(line_no, format!("expected `src,dst`, found {} fields", fields.len())));
        };
        if src.is_empty() || dst.is_empty() {
            return Err(parse_err(line_no, "empty vertex id"));
        }
        if src == dst {
            return Err(parse_err(line_no, format!("self-loop: {src}")));
        }
        edges.push((src, dst));
    }
    Digraph::build(edges, meta)
}

/// Edge list with header, arcs in id order.
pub fn to_edge_list(g: &Digraph) -> String {
    let mut s = String::from("src,dst\n");
    for (u, v) in g.edge_ids() {
        let _ = writeln!(s, "{u},{v}");
    }
    s
}

/// Parses `id,kind,parent_id` lines (header optional; kind is `bank` or
/// `customer`; parent may be empty).
pub fn parse_vertex_table(text: &str) -> Result<Vec<VertexRecord>> {
    let mut out = Vec::new();
    for (idx, (line_no, line)) in data_lines(text).enumerate() {
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if idx == 0 && fields.first() == Some(&"id") {
            continue;
        }
        let (id, kind, parent) = match fields[..] {
            [id, kind] => (id, kind, ""),
            [id, kind, parent] => (id, kind, parent),
            _ => return Err(parse_err(line_no, "expected `id,kind[,parent_id]`")),
        };
        if id.is_empty() {
            return Err(parse_err(line_no, "empty vertex id"));
        }
        let kind = match kind {
            "bank" => VertexKind::Bank,
            "customer" => VertexKind::Customer,
            other => return Err(parse_err(line_no, format!("unknown kind `{other}`"))),
        };
        let parent_id = (!parent.is_empty()).then(|| parent.to_string());
        out.push(VertexRecord { id: id.to_string(), kind, parent_id });
    }
    Ok(out)
}

pub fn to_vertex_table(g: &Digraph) -> String {
    let mut s = String::from("id,kind,parent_id\n");
    for r in g.vertices() {
        let kind = match r.kind {
            VertexKind::Bank => "bank",
            VertexKind::Customer => "customer",
        };
        let _ = writeln!(s, "{},{kind},{}", r.id, r.parent_id.as_deref().unwrap_or(""));
    }
    s
}
