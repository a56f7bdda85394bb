use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::accessibility::{KDetection, Role, StructureAnalysis};
use crate::graph::{assortativity, AccessibilityProfile, Digraph, VertexSet};
use crate::reduction::RemovalVerdict;

/// Significant digits kept for floats.
pub const FLOAT_DIGITS: usize = 12;

/// A key-sorted document assembled from named sections.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    root: Map<String, Value>,
}

fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", FLOAT_DIGITS - 1, x).parse().unwrap_or(x)
}

fn normalise(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round_sig(n.as_f64().unwrap_or(f64::NAN));
            serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(normalise).collect()),
        Value::Object(map) => {
            Value::Object(map.into_iter().filter(|(_, v)| !v.is_null()).map(|(k, v)| (k, normalise(v))).collect())
        }
        other => other,
    }
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut root = Map::new();
        root.insert("command".into(), Value::String(command.into()));
        Report { root }
    }

    /// Adds a section; `None` sections are left out entirely.
    pub fn section<T: Serialize>(&mut self, key: &str, value: Option<T>) -> &mut Self {
        if let Some(v) = value {
            let v = serde_json::to_value(v).expect("report sections serialise");
            self.root.insert(key.to_string(), normalise(v));
        }
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.root.get(key)
    }

    pub fn to_value(&self) -> Value {
        Value::Object(self.root.clone())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.root).expect("json");
        s.push('\n');
        s
    }

    /// One `dotted.key = value` line per leaf, in key order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        flatten("", &Value::Object(self.root.clone()), &mut out);
        out
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) if !map.is_empty() => {
            for (k, child) in map {
                flatten(&join(k), child, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, child) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), child, out);
            }
        }
        leaf => {
            let _ = writeln!(out, "{prefix} = {leaf}");
        }
    }
}

pub fn ids(g: &Digraph, set: &VertexSet) -> Vec<String> {
    set.iter().map(|&v| g.id(v).to_string()).collect()
}

/// Summary moments of an accessibility profile.
pub fn profile_section(profile: &AccessibilityProfile) -> Value {
    json!({
        "order": profile.order(),
        "acc_sum": profile.acc_sum(),
        "mean_acc": profile.mean(),
        "max_ecc": profile.ecc.iter().max().copied().unwrap_or(0),
        "histogram": profile.histogram.iter().map(|(a, c)| json!([a, c])).collect::<Vec<_>>(),
    })
}

/// Per-vertex accessibility rows for `g` (positions must match `profile`).
pub fn vertex_rows(g: &Digraph, profile: &AccessibilityProfile) -> Value {
    let rows: Vec<Value> = (0..g.order())
        .map(|v| {
            json!({
                "id": g.id(v),
                "acc": profile.acc[v],
                "ecc": profile.ecc[v],
                "on_cycle": profile.on_cycle[v],
            })
        })
        .collect();
    Value::Array(rows)
}

/// The structure pipeline output with ids in place of positions.
pub fn structure_section(g: &Digraph, analysis: &StructureAnalysis) -> Value {
    let mut m = Map::new();
    match &analysis.detection {
        KDetection::NotAccessible { reason } => {
            m.insert("verdict".into(), json!("not_accessible"));
            m.insert("reason".into(), json!(reason));
        }
        KDetection::Accessible { .. } => {
            m.insert("verdict".into(), json!("accessible"));
        }
    }
    if let Some(r) = &analysis.report {
        let roles: BTreeMap<Role, usize> = [
            Role::Sender,
            Role::Receiver,
            Role::CorrespondentSender,
            Role::CorrespondentReceiver,
            Role::Intermediary,
            Role::GsccMember,
            Role::SenderSide,
            Role::ReceiverSide,
        ]
        .into_iter()
        .map(|role| (role, r.roles.count(role)))
        .collect();
        m.insert("bank_order".into(), json!(r.bank_order));
        m.insert("k".into(), json!(r.k));
        m.insert("core_size".into(), json!(r.core.len()));
        m.insert("core".into(), json!(ids(g, &r.core)));
        m.insert("gscc_order".into(), json!(r.gscc.len()));
        m.insert("gscc".into(), json!(ids(g, &r.gscc)));
        m.insert("gscc_edges".into(), json!(r.gscc_edges));
        if let Some(d) = &r.gscc_diagnostic {
            m.insert("gscc_diagnostic".into(), serde_json::to_value(d).expect("json"));
        }
        m.insert("msd_core".into(), json!(r.msd_core));
        m.insert("msd_threshold".into(), json!(r.msd_threshold));
        m.insert("macro_verdict".into(), serde_json::to_value(r.macro_verdict).expect("json"));
        m.insert("gscc_within_core".into(), json!(r.gscc_within_core));
        m.insert("gscc_order_within_bound".into(), json!(r.gscc_order_within_bound));
        m.insert("role_counts".into(), serde_json::to_value(roles).expect("json"));
        if !r.roles.violations.is_empty() {
            m.insert("violations".into(), json!(r.roles.violations));
        }
    }
    Value::Object(m)
}

/// Global graph statistics.
pub fn graph_section(g: &Digraph) -> Value {
    let banks = g.bank_subgraph();
    let mut m = Map::new();
    m.insert("order".into(), json!(g.order()));
    m.insert("size".into(), json!(g.size()));
    m.insert("bank_order".into(), json!(banks.graph.order()));
    m.insert("bank_size".into(), json!(banks.graph.size()));
    if let Some(r) = assortativity(&banks.graph) {
        m.insert("assortativity_out_in".into(), json!(r));
    }
    Value::Object(m)
}

pub fn removal_section(g: &Digraph, v: &RemovalVerdict) -> Value {
    let mut value = serde_json::to_value(v).expect("json");
    if let Value::Object(m) = &mut value {
        m.insert("removed".into(), json!(ids(g, &v.removed)));
        m.insert("impacted".into(), json!(ids(g, &v.impacted)));
    }
    value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::construct_mka;

    #[test]
    fn floats_keep_twelve_digits() {
        assert_eq!(round_sig(1.0 / 3.0), 0.333333333333);
        assert_eq!(round_sig(6.3), 6.3);
        assert_eq!(round_sig(0.30000000000000004), 0.3);
    }

    #[test]
    fn mka_report_values() {
        let c = construct_mka(10, 6).unwrap();
        let mut r = Report::new("construct");
        r.section("construction", Some(&c)).section::<u8>("missing", None);
        let v = r.to_value();
        assert_eq!(v["construction"]["certified"]["mean_acc"], json!(6.3));
        assert_eq!(v["construction"]["certified"]["msd_from_k"], json!(0.3));
        assert!(v.get("missing").is_none());
        assert_eq!(r.to_json(), r.clone().to_json());
    }

    #[test]
    fn text_lines_sorted() {
        let mut r = Report::new("x");
        r.section("b", Some(json!({"z": 1, "a": [1, 2]}))).section("a", Some(2));
        assert_eq!(r.to_text(), "a = 2\nb.a = [1,2]\nb.z = 1\ncommand = \"x\"\n");
    }
}
