use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::edge_list::{data_lines, parse_err};
use crate::error::{Error, Result};
use crate::graph::{Digraph, VertexRecord};

pub const SENDER_SUFFIX: &str = "#snd";
pub const RECEIVER_SUFFIX: &str = "#rcv";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PaymentRecord {
    pub sender: String,
    pub receiver: String,
    /// Banks in transit order.
    pub path: Vec<String>,
}

/// Reads `sender,receiver,bank1|bank2|...` lines (optional
/// `sender,receiver,path` header).
pub fn parse_payment_records(text: &str) -> Result<Vec<PaymentRecord>> {
    let mut out = Vec::new();
    for (idx, (line_no, line)) in data_lines(text).enumerate() {
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if idx == 0 && fields == ["sender", "receiver", "path"] {
            continue;
        }
        let [sender, receiver, path] = fields[..] else {
            return Err(parse_err(line_no, "expected `sender,receiver,bank1|bank2|...`"));
        };
        if sender.is_empty() || receiver.is_empty() {
            return Err(parse_err(line_no, "empty customer id"));
        }
        let path: Vec<String> = path
            .split('|')
            .map(str::trim)
            .filter(|b| !b.is_empty())
            .map(String::from)
            .collect();
        if path.is_empty() {
            return Err(parse_err(line_no, "empty bank path"));
        }
        out.push(PaymentRecord { sender: sender.into(), receiver: receiver.into(), path });
    }
    Ok(out)
}

/// Turns payment records into a customer/bank digraph. A customer that
/// both sends and receives is split into `id#snd` and `id#rcv`.
pub fn payments_to_digraph(records: &[PaymentRecord]) -> Result<Digraph> {
    let senders: BTreeSet<&str> = records.iter().map(|r| r.sender.as_str()).collect();
    let receivers: BTreeSet<&str> = records.iter().map(|r| r.receiver.as_str()).collect();
    let banks: BTreeSet<&str> = records.iter().flat_map(|r| r.path.iter().map(String::as_str)).collect();
    let split: BTreeSet<&str> = senders.intersection(&receivers).copied().collect();
    let name = |id: &str, suffix: &str| {
        if split.contains(id) {
            format!("{id}{suffix}")
        } else {
            id.to_string()
        }
    };

    let mut meta: BTreeMap<String, VertexRecord> = BTreeMap::new();
    for &b in &banks {
        meta.insert(b.to_string(), VertexRecord::bank(b));
    }
    let mut edges: Vec<(String, String)> = Vec::new();
    for r in records {
        let s = name(&r.sender, SENDER_SUFFIX);
        let t = name(&r.receiver, RECEIVER_SUFFIX);
        for c in [&s, &t] {
            if banks.contains(c.as_str()) {
                return Err(Error::Metadata(format!("{c} is used both as customer and bank")));
            }
            meta.insert(c.clone(), VertexRecord::customer(c.as_str()));
        }
        edges.push((s, r.path[0].clone()));
        for w in r.path.windows(2) {
            if w[0] == w[1] {
                return Err(Error::SelfLoop(w[0].clone()));
            }
            edges.push((w[0].clone(), w[1].clone()));
        }
        edges.push((r.path[r.path.len() - 1].clone(), t));
    }
    let meta: Vec<VertexRecord> = meta.into_values().collect();
    Digraph::build(edges.iter().map(|(a, b)| (a.as_str(), b.as_str())), Some(&meta))
}

/// Parses payment records and builds their digraph.
pub fn parse_payment_paths(text: &str) -> Result<Digraph> {
    payments_to_digraph(&parse_payment_records(text)?)
}
