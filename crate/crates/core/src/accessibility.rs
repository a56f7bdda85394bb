//! k-accessibility core detection, giant-SCC extraction, vertex roles and the
//! sink/bridge verdict.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::graph::{
    accessibility_profile, degrees, tarjan_scc, AccessibilityProfile, Digraph, Subgraph,
    VertexKind, VertexSet,
};

/// Core detection parameters. `None` selects the size-dependent default.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CoreConfig {
    pub min_core_size: Option<usize>,
    /// Allowed spread of accessibility inside the core, as a fraction of N.
    pub plateau_tolerance: Option<f64>,
}

impl CoreConfig {
    /// Defaults: at least max(10, 0.5% of N) vertices (never more than N)
    /// spread over at most max(1, floor(1% of N)) accessibility values.
    pub fn resolve(&self, n: usize) -> (usize, usize) {
        let min_size = self
            .min_core_size
            .unwrap_or_else(|| n.min(10.max(n.div_ceil(200))))
            .max(1);
        let width = match self.plateau_tolerance {
            Some(tol) => ((tol * n as f64).floor() as usize).max(1),
            None => (n / 100).max(1),
        };
        (min_size, width)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum KDetection {
    Accessible { k: usize, core: VertexSet },
    NotAccessible { reason: String },
}

impl KDetection {
    pub fn k(&self) -> Option<usize> {
        match self {
            KDetection::Accessible { k, .. } => Some(*k),
            KDetection::NotAccessible { .. } => None,
        }
    }
}

/// Finds the largest cluster of vertices whose accessibilities lie within the
/// plateau width of each other. Vertices with empty reach never join a core.
/// Among equally large clusters the one with the larger k wins.
pub fn detect_k(profile: &AccessibilityProfile, config: &CoreConfig) -> KDetection {
    let n = profile.order();
    let (min_size, width) = config.resolve(n);
    let mut sorted: Vec<(usize, usize)> =
        (0..n).filter(|&v| profile.acc[v] > 0).map(|v| (profile.acc[v], v)).collect();
    sorted.sort_unstable();

    let mut best: Option<(usize, usize, usize, usize)> = None; // (size, k, start, end)
    let mut end = 0;
    for start in 0..sorted.len() {
        if start > 0 && sorted[start].0 == sorted[start - 1].0 {
            continue;
        }
        end = end.max(start);
        while end < sorted.len() && sorted[end].0 - sorted[start].0 <= width {
            end += 1;
        }
        let size = end - start;
        let sum: u64 = sorted[start..end].iter().map(|&(a, _)| a as u64).sum();
        let k = rounded_mean(sum, size as u64);
        if best.is_none_or(|(bs, bk, _, _)| (size, k) >= (bs, bk)) {
            best = Some((size, k, start, end));
        }
    }
    match best {
        Some((size, k, start, end)) if size >= min_size => KDetection::Accessible {
            k,
            core: sorted[start..end].iter().map(|&(_, v)| v).collect(),
        },
        Some((size, ..)) => KDetection::NotAccessible {
            reason: format!(
                "largest accessibility plateau has {size} vertices, below the minimum of {min_size}"
            ),
        },
        None => KDetection::NotAccessible { reason: "no vertex reaches another vertex".into() },
    }
}

/// Round half up of sum / count.
fn rounded_mean(sum: u64, count: u64) -> usize {
    ((2 * sum + count) / (2 * count)) as usize
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GsccDiagnostic {
    /// Every SCC meeting the core is a single vertex.
    NoNontrivialScc,
    /// Several SCCs of the maximal order meet the core.
    NotUnique { order: usize, count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gscc {
    pub members: VertexSet,
    pub internal_edges: usize,
    pub diagnostic: Option<GsccDiagnostic>,
}

impl Gscc {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn is_model_violation(&self) -> bool {
        matches!(self.diagnostic, Some(GsccDiagnostic::NotUnique { .. }))
    }
}

/// Largest SCC of order at least two that meets `core`. When the maximum is
/// shared, the component with the smallest member is returned together with
/// a `NotUnique` diagnostic.
pub fn extract_gscc(g: &Digraph, core: &VertexSet) -> Gscc {
    let scc = tarjan_scc(g);
    let mut candidates: Vec<&Vec<usize>> =
        scc.nontrivial().filter(|c| c.iter().any(|v| core.contains(v))).collect();
    let Some(order) = candidates.iter().map(|c| c.len()).max() else {
        return Gscc {
            members: VertexSet::new(),
            internal_edges: 0,
            diagnostic: Some(GsccDiagnostic::NoNontrivialScc),
        };
    };
    candidates.retain(|c| c.len() == order);
    let members: VertexSet = candidates[0].iter().copied().collect();
    let diagnostic = (candidates.len() > 1)
        .then_some(GsccDiagnostic::NotUnique { order, count: candidates.len() });
    Gscc { internal_edges: g.internal_edge_count(&members), members, diagnostic }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Sender,
    Receiver,
    CorrespondentSender,
    CorrespondentReceiver,
    Intermediary,
    GsccMember,
    /// Bank with accessibility above k that reaches the GSCC.
    SenderSide,
    /// Bank with 0 < acc < k that cannot reach the GSCC.
    ReceiverSide,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoleAssignment {
    pub roles: Vec<BTreeSet<Role>>,
    pub violations: Vec<String>,
}

impl RoleAssignment {
    pub fn count(&self, role: Role) -> usize {
        self.roles.iter().filter(|r| r.contains(&role)).count()
    }
}

/// Assigns roles to every vertex of `g`.
///
/// `banks` is the bank subgraph of `g`; `profile`, `k` and `gscc` refer to
/// positions in `banks.graph`. Side checks are enforced (reported as
/// violations) only when k >= N/2, N being the bank count.
pub fn classify_roles(
    g: &Digraph,
    banks: &Subgraph,
    profile: &AccessibilityProfile,
    k: usize,
    gscc: &VertexSet,
) -> RoleAssignment {
    let deg = degrees(g);
    let mut roles = vec![BTreeSet::new(); g.order()];
    for (v, r) in roles.iter_mut().enumerate() {
        let d = deg.get(v);
        match g.kind(v) {
            VertexKind::Customer => {
                if d.in_total == 0 {
                    r.insert(Role::Sender);
                }
                if d.out_total == 0 {
                    r.insert(Role::Receiver);
                }
            }
            VertexKind::Bank => {
                if d.in_from_customers > 0 {
                    r.insert(Role::CorrespondentSender);
                }
                if d.out_to_customers > 0 {
                    r.insert(Role::CorrespondentReceiver);
                }
                if d.in_from_banks > 0 && d.out_to_banks > 0 {
                    r.insert(Role::Intermediary);
                }
            }
        }
    }

    let bg = &banks.graph;
    let n = bg.order();
    let strict = 2 * k >= n;
    let reaches_gscc = backward_closure(bg, gscc);
    let mut violations = Vec::new();
    for v in 0..n {
        let parent = banks.to_parent[v];
        if gscc.contains(&v) {
            roles[parent].insert(Role::GsccMember);
            continue;
        }
        let acc = profile.acc[v];
        if acc > k {
            if reaches_gscc[v] {
                roles[parent].insert(Role::SenderSide);
            } else if strict && !gscc.is_empty() {
                violations.push(format!(
                    "{} has accessibility {acc} > k = {k} but no path into the GSCC",
                    bg.id(v)
                ));
            }
        } else if acc > 0 && acc < k {
            if !reaches_gscc[v] {
                roles[parent].insert(Role::ReceiverSide);
            } else if strict {
                violations.push(format!(
                    "{} has accessibility {acc} < k = {k} yet reaches the GSCC",
                    bg.id(v)
                ));
            }
        }
    }
    RoleAssignment { roles, violations }
}

/// Vertices with a path into `targets` (targets included).
fn backward_closure(g: &Digraph, targets: &VertexSet) -> Vec<bool> {
    let mut seen = vec![false; g.order()];
    let mut queue: VecDeque<usize> = targets.iter().copied().collect();
    for &t in targets {
        seen[t] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &p in g.in_neighbors(u) {
            if !seen[p] {
                seen[p] = true;
                queue.push_back(p);
            }
        }
    }
    seen
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MacroVerdict {
    SinkLike,
    BridgeLike,
}

/// sink_like iff msd <= 1 - (k+1)/N, decided in exact integer arithmetic
/// from the core's summed squared deviation.
pub fn macro_structure(n: usize, k: usize, core_sq_dev: u128, core_size: usize) -> MacroVerdict {
    // sq / size <= (n - k - 1) / n  <=>  sq * n <= (n - k - 1) * size
    let lhs = core_sq_dev as i128 * n as i128;
    let rhs = (n as i128 - k as i128 - 1) * core_size as i128;
    if lhs <= rhs {
        MacroVerdict::SinkLike
    } else {
        MacroVerdict::BridgeLike
    }
}

/// Same rule for already-rounded inputs.
pub fn macro_structure_from_msd(msd: f64, threshold: f64) -> MacroVerdict {
    if msd <= threshold + 1e-12 {
        MacroVerdict::SinkLike
    } else {
        MacroVerdict::BridgeLike
    }
}

/// Result of the structure pipeline on one network. Vertex positions refer
/// to the analysed graph, not its bank subgraph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StructureReport {
    pub bank_order: usize,
    pub k: usize,
    pub core: VertexSet,
    pub gscc: VertexSet,
    pub gscc_edges: usize,
    pub gscc_diagnostic: Option<GsccDiagnostic>,
    pub msd_core: f64,
    pub msd_threshold: f64,
    pub macro_verdict: MacroVerdict,
    pub gscc_within_core: bool,
    pub gscc_order_within_bound: bool,
    pub roles: RoleAssignment,
}

impl StructureReport {
    pub fn has_model_violation(&self) -> bool {
        matches!(self.gscc_diagnostic, Some(GsccDiagnostic::NotUnique { .. }))
            || !self.roles.violations.is_empty()
    }
}

/// Everything the structure pipeline computes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StructureAnalysis {
    pub bank_profile: AccessibilityProfile,
    pub detection: KDetection,
    pub report: Option<StructureReport>,
}

/// Runs profile, k detection, GSCC extraction, roles and the macro verdict on
/// the bank subgraph of `g`.
pub fn analyze_structure(g: &Digraph, config: &CoreConfig) -> StructureAnalysis {
    let banks = g.bank_subgraph();
    let profile = accessibility_profile(&banks.graph);
    let detection = detect_k(&profile, config);
    let KDetection::Accessible { k, core } = &detection else {
        return StructureAnalysis { bank_profile: profile, detection, report: None };
    };
    let (k, n) = (*k, banks.graph.order());
    let gscc = extract_gscc(&banks.graph, core);
    let roles = classify_roles(g, &banks, &profile, k, &gscc.members);
    let sq = profile.squared_deviation(k, core.iter().copied());
    let report = StructureReport {
        bank_order: n,
        k,
        core: banks.set_to_parent(core),
        gscc: banks.set_to_parent(&gscc.members),
        gscc_edges: gscc.internal_edges,
        gscc_diagnostic: gscc.diagnostic.clone(),
        msd_core: profile.msd_over(k, core),
        msd_threshold: 1.0 - (k + 1) as f64 / n as f64,
        macro_verdict: macro_structure(n, k, sq, core.len()),
        gscc_within_core: gscc.members.is_subset(core),
        gscc_order_within_bound: gscc.order() <= k + 1,
        roles,
    };
    StructureAnalysis { bank_profile: profile, detection, report: Some(report) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Digraph, VertexRecord};

    fn complete(n: usize) -> Digraph {
        let arcs = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)));
        Digraph::from_arcs(n, arcs).unwrap()
    }

    #[test]
    fn complete_graph_is_n_minus_one_accessible() {
        let g = complete(5);
        let p = accessibility_profile(&g);
        match detect_k(&p, &CoreConfig::default()) {
            KDetection::Accessible { k, core } => {
                assert_eq!(k, 4);
                assert_eq!(core.len(), 5);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn defaults_scale_with_order() {
        assert_eq!(CoreConfig::default().resolve(10), (10, 1));
        assert_eq!(CoreConfig::default().resolve(3000), (15, 30));
        assert_eq!(CoreConfig::default().resolve(5), (5, 1));
    }

    #[test]
    fn dag_has_no_gscc() {
        let g = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let core: VertexSet = (0..4).collect();
        let r = extract_gscc(&g, &core);
        assert!(r.members.is_empty());
        assert_eq!(r.diagnostic, Some(GsccDiagnostic::NoNontrivialScc));
    }

    #[test]
    fn twin_sccs_flagged() {
        let g = Digraph::from_arcs(7, [(0, 1), (1, 0), (2, 3), (3, 2), (4, 0), (4, 2), (5, 6)])
            .unwrap();
        let core: VertexSet = (0..7).collect();
        let r = extract_gscc(&g, &core);
        assert_eq!(r.diagnostic, Some(GsccDiagnostic::NotUnique { order: 2, count: 2 }));
        assert!(r.is_model_violation());
    }

    #[test]
    fn tie_prefers_larger_k() {
        // Two disjoint plateaus of equal size: the higher one wins.
        let profile = AccessibilityProfile {
            acc: vec![2, 2, 2, 9, 9, 9],
            ecc: vec![1; 6],
            on_cycle: vec![false; 6],
            histogram: Default::default(),
        };
        let cfg = CoreConfig { min_core_size: Some(3), plateau_tolerance: Some(0.0) };
        assert_eq!(detect_k(&profile, &cfg).k(), Some(9));
    }

    #[test]
    fn small_plateau_is_not_accessible() {
        let g = Digraph::from_arcs(3, [(0, 1)]).unwrap();
        let p = accessibility_profile(&g);
        assert!(matches!(detect_k(&p, &CoreConfig::default()), KDetection::NotAccessible { .. }));
    }

    #[test]
    fn customer_roles() {
        let meta = [VertexRecord::customer("s"), VertexRecord::customer("r")];
        let g = Digraph::build([("s", "b1"), ("b1", "b2"), ("b2", "r")], Some(&meta)).unwrap();
        let banks = g.bank_subgraph();
        let p = accessibility_profile(&banks.graph);
        let roles = classify_roles(&g, &banks, &p, 1, &VertexSet::new());
        let s = g.index_of("s").unwrap();
        let r = g.index_of("r").unwrap();
        let b1 = g.index_of("b1").unwrap();
        let b2 = g.index_of("b2").unwrap();
        assert!(roles.roles[s].contains(&Role::Sender));
        assert!(roles.roles[r].contains(&Role::Receiver));
        assert!(roles.roles[b1].contains(&Role::CorrespondentSender));
        assert!(roles.roles[b2].contains(&Role::CorrespondentReceiver));
        assert!(!roles.roles[b1].contains(&Role::Intermediary));
    }

    #[test]
    fn verdict_examples() {
        assert_eq!(macro_structure_from_msd(4.75, 0.1681), MacroVerdict::BridgeLike);
        assert_eq!(macro_structure_from_msd(0.0, 0.1681), MacroVerdict::SinkLike);
        // msd exactly on the threshold: N = 10, k = 6, 3 of 10 core vertices off by one.
        assert_eq!(macro_structure(10, 6, 3, 10), MacroVerdict::SinkLike);
        assert_eq!(macro_structure(10, 6, 4, 10), MacroVerdict::BridgeLike);
    }
}
