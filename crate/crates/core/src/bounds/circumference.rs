use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{diameter, Digraph, Distance};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CircumferenceInterval {
    pub lower: f64,
    pub upper: usize,
}

impl CircumferenceInterval {
    pub fn contains(&self, c: usize) -> bool {
        self.lower <= c as f64 + 1e-12 && c <= self.upper
    }
}

/// Interval [m/(N-1), p+1] for the longest cycle of a minimal p-Clan
/// digraph. The diameter is checked against p.
pub fn circumference_bounds(g: &Digraph, p: usize) -> Result<CircumferenceInterval> {
    let n = g.order();
    if n < 2 || p < 2 {
        return Err(Error::Precondition(format!("need N >= 2 and p >= 2, got N = {n}, p = {p}")));
    }
    match diameter(g, None) {
        Distance::Finite(d) if d <= p => {}
        d => return Err(Error::Precondition(format!("diameter {d} exceeds p = {p}"))),
    }
    Ok(CircumferenceInterval { lower: g.size() as f64 / (n - 1) as f64, upper: p + 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_and_cycle() {
        let star = Digraph::from_arcs(5, (1..5).flat_map(|l| [(0, l), (l, 0)])).unwrap();
        let i = circumference_bounds(&star, 2).unwrap();
        assert_eq!((i.lower, i.upper), (2.0, 3));
        // The directed triangle is the minimal 2-Clan on 3 vertices.
        let tri = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(circumference_bounds(&tri, 2).unwrap().contains(3));
        let cyc = Digraph::from_arcs(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let i = circumference_bounds(&cyc, 5).unwrap();
        assert!((i.lower - 1.2).abs() < 1e-12);
        assert_eq!(i.upper, 6);
        assert!(i.contains(6));
    }

    #[test]
    fn too_wide() {
        let cyc = Digraph::from_arcs(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert!(circumference_bounds(&cyc, 3).is_err());
        assert!(circumference_bounds(&cyc, 1).is_err());
    }
}
