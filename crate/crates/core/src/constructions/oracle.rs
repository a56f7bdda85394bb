use std::collections::BTreeMap;
use std::path::Path;
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Digraph;

/// Largest order the exhaustive search accepts.
pub const ORACLE_MAX_ORDER: usize = 6;

#[derive(Debug, Clone, Serialize)]
pub struct OracleResult {
    pub n: usize,
    pub p: usize,
    pub min_edges: usize,
    /// Lexicographically smallest optimal arc set.
    #[serde(skip)]
    pub witness: Digraph,
}

static MEMO: OnceLock<Mutex<BTreeMap<(usize, usize), OracleResult>>> = OnceLock::new();

/// Smallest m such that some m-arc digraph on N labelled vertices is
/// strongly connected with diameter at most p, found by enumerating arc
/// subsets in increasing size. Results are memoised per process.
pub fn oracle_min_pclan(n: usize, p: usize) -> Result<OracleResult> {
    if n > ORACLE_MAX_ORDER {
        return Err(Error::Capacity(format!(
            "exhaustive search is limited to N <= {ORACLE_MAX_ORDER} (got {n}); \
             use the constructions for certified upper bounds"
        )));
    }
    if n < 2 || p == 0 || p >= n {
        return Err(Error::Precondition(format!("need N >= 2 and 1 <= p <= N-1, got N = {n}, p = {p}")));
    }
    let memo = MEMO.get_or_init(Default::default);
    if let Some(hit) = memo.lock().expect("oracle memo poisoned").get(&(n, p)) {
        return Ok(hit.clone());
    }
    let result = search(n, p)?;
    memo.lock().expect("oracle memo poisoned").insert((n, p), result.clone());
    Ok(result)
}

fn search(n: usize, p: usize) -> Result<OracleResult> {
    let arcs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
    let start = if p == 1 { arcs.len() } else { n };
    for m in start..=arcs.len() {
        // Each task fixes the first arc; the first task in order that
        // finds anything holds the lexicographically smallest set.
        let found = (0..=arcs.len() - m)
            .into_par_iter()
            .map(|first| {
                let mut e = Enumerator::new(n, p, &arcs, m);
                e.push(first);
                e.run(first + 1).then(|| e.chosen.clone())
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .next();
        if let Some(chosen) = found {
            let witness = Digraph::from_arcs(n, chosen.iter().map(|&i| arcs[i]))?;
            return Ok(OracleResult { n, p, min_edges: m, witness });
        }
    }
    Err(Error::Invariant(format!("no arc set works for N = {n}, p = {p}")))
}

struct Enumerator<'a> {
    n: usize,
    p: usize,
    arcs: &'a [(usize, usize)],
    m: usize,
    chosen: Vec<usize>,
    out_mask: [u32; ORACLE_MAX_ORDER],
    in_deg: [usize; ORACLE_MAX_ORDER],
}

impl<'a> Enumerator<'a> {
    fn new(n: usize, p: usize, arcs: &'a [(usize, usize)], m: usize) -> Self {
        Enumerator {
            n,
            p,
            arcs,
            m,
            chosen: Vec::with_capacity(m),
            out_mask: [0; ORACLE_MAX_ORDER],
            in_deg: [0; ORACLE_MAX_ORDER],
        }
    }

    fn push(&mut self, i: usize) {
        let (u, v) = self.arcs[i];
        self.chosen.push(i);
        self.out_mask[u] |= 1 << v;
        self.in_deg[v] += 1;
    }

    fn pop(&mut self) {
        let i = self.chosen.pop().expect("pop on empty selection");
        let (u, v) = self.arcs[i];
        self.out_mask[u] &= !(1 << v);
        self.in_deg[v] -= 1;
    }

    fn run(&mut self, pos: usize) -> bool {
        let need = self.m - self.chosen.len();
        if need == 0 {
            return self.accepts();
        }
        if self.arcs.len() - pos < need {
            return false;
        }
        let no_in = (0..self.n).filter(|&v| self.in_deg[v] == 0).count();
        let no_out = (0..self.n).filter(|&v| self.out_mask[v] == 0).count();
        if no_in > need || no_out > need {
            return false;
        }
        for i in pos..=self.arcs.len() - need {
            let tail = self.arcs[i].0;
            // Arcs are sorted by tail, so a smaller vertex left without an
            // out-arc can never get one.
            if (0..tail).any(|w| self.out_mask[w] == 0) {
                break;
            }
            self.push(i);
            if self.run(i + 1) {
                return true;
            }
            self.pop();
        }
        false
    }

    /// Every vertex reaches every other within p steps.
    fn accepts(&self) -> bool {
        let all = (1u32 << self.n) - 1;
        (0..self.n).all(|s| {
            let mut reach = 1u32 << s;
            for _ in 0..self.p {
                let mut next = reach;
                let mut bits = reach;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    next |= self.out_mask[v];
                }
                if next == reach {
                    break;
                }
                reach = next;
            }
            reach == all
        })
    }
}

/// Minimum edge counts persisted as text, one `N p min_m` triple per line.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OracleCache {
    entries: BTreeMap<(usize, usize), usize>,
}

impl OracleCache {
    pub fn get(&self, n: usize, p: usize) -> Option<usize> {
        self.entries.get(&(n, p)).copied()
    }

    pub fn insert(&mut self, n: usize, p: usize, min_m: usize) {
        self.entries.insert((n, p), min_m);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut cache = OracleCache::default();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<usize> = line
                .split_whitespace()
                .map(str::parse)
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::Parse { line: i + 1, message: format!("{e}") })?;
            let [n, p, m] = fields[..] else {
                return Err(Error::Parse { line: i + 1, message: "expected `N p min_m`".into() });
            };
            cache.insert(n, p, m);
        }
        Ok(cache)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("# N p min_m\n");
        for (&(n, p), &m) in &self.entries {
            s.push_str(&format!("{n} {p} {m}\n"));
        }
        s
    }

    /// Loads a cache file; a missing file yields an empty cache.
    pub fn load(path: &Path) -> Result<Self> {
        match std::fs::read_to_string(path) {
            Ok(text) => Self::parse(&text),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(Self::default()),
            Err(e) => Err(e.into()),
        }
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }

    /// Cached value, or a fresh oracle run that is then recorded.
    pub fn lookup(&mut self, n: usize, p: usize) -> Result<usize> {
        if let Some(m) = self.get(n, p) {
            return Ok(m);
        }
        let m = oracle_min_pclan(n, p)?.min_edges;
        self.insert(n, p, m);
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_three_is_a_cycle() {
        let r = oracle_min_pclan(4, 3).unwrap();
        assert_eq!(r.min_edges, 4);
        assert!(r.witness.is_strongly_connected());
        assert!((0..4).all(|v| r.witness.out_degree(v) == 1));
    }

    #[test]
    fn small_values() {
        assert_eq!(oracle_min_pclan(4, 2).unwrap().min_edges, 6);
        assert_eq!(oracle_min_pclan(3, 1).unwrap().min_edges, 6);
        assert_eq!(oracle_min_pclan(3, 2).unwrap().min_edges, 3);
    }

    #[test]
    fn capacity() {
        assert!(matches!(oracle_min_pclan(7, 3), Err(Error::Capacity(_))));
        assert_eq!(oracle_min_pclan(7, 3).unwrap_err().exit_code(), 3);
    }

    #[test]
    fn cache_round_trip() {
        let mut c = OracleCache::default();
        c.insert(4, 2, 6);
        c.insert(3, 2, 3);
        let back = OracleCache::parse(&c.to_text()).unwrap();
        assert_eq!(back, c);
        assert!(OracleCache::parse("1 2\n").is_err());
    }
}
