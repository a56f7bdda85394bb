use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::{Digraph, VertexSet};

/// Hop length that may be unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u64(*d as u64),
            Distance::Infinite => s.serialize_str("infinite"),
        }
    }
}

const UNSEEN: usize = usize::MAX;

/// Hop distances from `src`; `None` for unreachable vertices. When `within`
/// is given, paths may only pass through vertices flagged true there.
pub fn bfs_distances(g: &Digraph, src: usize, within: Option<&[bool]>) -> Vec<Option<usize>> {
    let dist = bfs_raw(g, src, within);
    dist.into_iter().map(|d| (d != UNSEEN).then_some(d)).collect()
}

fn bfs_raw(g: &Digraph, src: usize, within: Option<&[bool]>) -> Vec<usize> {
    let mut dist = vec![UNSEEN; g.order()];
    dist[src] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        for &v in g.out_neighbors(u) {
            if dist[v] == UNSEEN && within.is_none_or(|w| w[v]) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Per-vertex accessibility and eccentricity.
///
/// `acc[v]` counts the vertices reachable from `v`, excluding `v` itself;
/// `ecc[v]` is the largest hop distance from `v` to one of them (0 for a
/// vertex with empty reach). `on_cycle[v]` records whether `v` can reach
/// itself, i.e. whether its forward search would re-enter it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AccessibilityProfile {
    pub acc: Vec<usize>,
    pub ecc: Vec<usize>,
    pub on_cycle: Vec<bool>,
    pub histogram: BTreeMap<usize, usize>,
}

impl AccessibilityProfile {
    pub fn order(&self) -> usize {
        self.acc.len()
    }

    pub fn acc_sum(&self) -> u64 {
        self.acc.iter().map(|&a| a as u64).sum()
    }

    /// Mean accessibility.
    pub fn mean(&self) -> f64 {
        if self.acc.is_empty() {
            return 0.0;
        }
        self.acc_sum() as f64 / self.order() as f64
    }

    /// Sum over `members` of (acc - k)^2, exact.
    pub fn squared_deviation(&self, k: usize, members: impl IntoIterator<Item = usize>) -> u128 {
        members
            .into_iter()
            .map(|v| {
                let d = self.acc[v].abs_diff(k) as u128;
                d * d
            })
            .sum()
    }

    /// Mean squared deviation of all accessibilities from `k`.
    pub fn msd(&self, k: usize) -> f64 {
        if self.acc.is_empty() {
            return 0.0;
        }
        self.squared_deviation(k, 0..self.order()) as f64 / self.order() as f64
    }

    /// Mean squared deviation from `k` restricted to `members`.
    pub fn msd_over(&self, k: usize, members: &VertexSet) -> f64 {
        if members.is_empty() {
            return 0.0;
        }
        self.squared_deviation(k, members.iter().copied()) as f64 / members.len() as f64
    }
}

/// Runs one BFS per vertex (in parallel; the result does not depend on the
/// thread count).
pub fn accessibility_profile(g: &Digraph) -> AccessibilityProfile {
    let rows: Vec<(usize, usize, bool)> = (0..g.order())
        .into_par_iter()
        .map(|v| {
            let dist = bfs_raw(g, v, None);
            let mut acc = 0;
            let mut ecc = 0;
            for (u, &d) in dist.iter().enumerate() {
                if u != v && d != UNSEEN {
                    acc += 1;
                    ecc = ecc.max(d);
                }
            }
            let on_cycle = g.in_neighbors(v).iter().any(|&p| dist[p] != UNSEEN);
            (acc, ecc, on_cycle)
        })
        .collect();
    let mut histogram = BTreeMap::new();
    for &(a, _, _) in &rows {
        *histogram.entry(a).or_insert(0) += 1;
    }
    AccessibilityProfile {
        acc: rows.iter().map(|r| r.0).collect(),
        ecc: rows.iter().map(|r| r.1).collect(),
        on_cycle: rows.iter().map(|r| r.2).collect(),
        histogram,
    }
}

/// Largest shortest-path length over ordered pairs of distinct vertices,
/// optionally restricted to the subgraph induced by `within`.
pub fn diameter(g: &Digraph, within: Option<&VertexSet>) -> Distance {
    let mask: Option<Vec<bool>> = within.map(|set| {
        let mut m = vec![false; g.order()];
        for &v in set {
            m[v] = true;
        }
        m
    });
    let sources: Vec<usize> = match within {
        Some(set) => set.iter().copied().collect(),
        None => (0..g.order()).collect(),
    };
    let per_source: Vec<Distance> = sources
        .par_iter()
        .map(|&s| {
            let dist = bfs_raw(g, s, mask.as_deref());
            let mut worst = 0;
            for &t in &sources {
                if t == s {
                    continue;
                }
                if dist[t] == UNSEEN {
                    return Distance::Infinite;
                }
                worst = worst.max(dist[t]);
            }
            Distance::Finite(worst)
        })
        .collect();
    per_source.into_iter().max().unwrap_or(Distance::Finite(0))
}
