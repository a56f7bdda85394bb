use serde::Serialize;

use crate::error::{Error, Result};

/// Largest order solved by exhaustive search.
const EXHAUSTIVE_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Model1Method {
    Exhaustive,
    ClosedForm,
}

/// Accessibility count vector minimising the squared deviation from k over
/// acyclic layouts.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Model1Solution {
    pub n: usize,
    pub k: usize,
    /// `counts[e]` vertices have accessibility e.
    pub counts: Vec<usize>,
    /// N times the objective, exact.
    pub weighted_objective: u64,
    pub objective: f64,
    pub method: Model1Method,
    /// Number of optimal count vectors (exhaustive search only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub optimal_ties: Option<usize>,
    /// Objective of the tree-shaped vector (1, .., 1, N-k-1).
    pub closed_form_objective: f64,
    pub matches_closed_form: bool,
}

/// k(k+1)(2k+1)/(6N) + 1 - (k+1)/N.
pub fn closed_form_objective(n: usize, k: usize) -> f64 {
    let (n, k) = (n as f64, k as f64);
    k * (k + 1.0) * (2.0 * k + 1.0) / (6.0 * n) + 1.0 - (k + 1.0) / n
}

fn check_window(n: usize, k: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::Precondition(format!("order {n} below 4")));
    }
    let w = (k + 1) * (k + 2);
    if !(n < w && w < 3 * n) {
        return Err(Error::Infeasible(format!(
            "(k+1)(k+2) = {w} must lie strictly between N = {n} and 3N = {}",
            3 * n
        )));
    }
    Ok(())
}

fn weighted(counts: &[usize], k: usize) -> u64 {
    counts
        .iter()
        .enumerate()
        .map(|(e, &x)| {
            let d = e.abs_diff(k) as u64;
            x as u64 * d * d
        })
        .sum()
}

fn tree_vector(n: usize, k: usize) -> Vec<usize> {
    let mut x = vec![0; n];
    x[..=k].fill(1);
    if k + 1 < n {
        x[k + 1] = n - k - 1;
    }
    x
}

/// Solves the count-vector model for (N, k).
///
/// Up to N = 20 every vector with contiguous support starting at e = 0,
/// 1 <= x_0 <= N-1, sum N and mean strictly within k +- 1/2 is scored; the
/// lexicographically smallest optimum is returned. Beyond that the
/// tree-shaped vector is returned without a search.
pub fn solve_model1(n: usize, k: usize) -> Result<Model1Solution> {
    check_window(n, k)?;
    let closed = closed_form_objective(n, k);
    if n > EXHAUSTIVE_LIMIT {
        let counts = tree_vector(n, k);
        let w = weighted(&counts, k);
        return Ok(Model1Solution {
            n,
            k,
            objective: w as f64 / n as f64,
            weighted_objective: w,
            counts,
            method: Model1Method::ClosedForm,
            optimal_ties: None,
            closed_form_objective: closed,
            matches_closed_form: true,
        });
    }

    let mut search = Search { n, k, best: None, ties: 0, current: Vec::with_capacity(n) };
    for x0 in 1..n {
        search.current.push(x0);
        search.extend(n - x0, 0, weighted(&[x0], k));
        search.current.pop();
    }
    let (w, mut counts) = search
        .best
        .ok_or_else(|| Error::Infeasible(format!("no count vector has rounded mean {k}")))?;
    counts.resize(n, 0);
    let objective = w as f64 / n as f64;
    Ok(Model1Solution {
        n,
        k,
        counts,
        weighted_objective: w,
        objective,
        method: Model1Method::Exhaustive,
        optimal_ties: Some(search.ties),
        closed_form_objective: closed,
        matches_closed_form: (objective - closed).abs() <= 1e-12,
    })
}

struct Search {
    n: usize,
    k: usize,
    best: Option<(u64, Vec<usize>)>,
    ties: usize,
    current: Vec<usize>,
}

impl Search {
    /// `left` vertices still to place; `sum` is the accessibility total so
    /// far; `cost` the partial weighted objective.
    fn extend(&mut self, left: usize, sum: usize, cost: u64) {
        if self.best.as_ref().is_some_and(|(b, _)| cost > *b) {
            return;
        }
        let (n, k) = (self.n, self.k);
        if left == 0 {
            // k - 1/2 < sum / n < k + 1/2
            if 2 * sum + n > 2 * k * n && 2 * sum < (2 * k + 1) * n {
                match &self.best {
                    Some((b, _)) if cost == *b => self.ties += 1,
                    _ => {
                        self.best = Some((cost, self.current.clone()));
                        self.ties = 1;
                    }
                }
            }
            return;
        }
        let e = self.current.len();
        let d = e.abs_diff(k) as u64;
        for x in 1..=left {
            self.current.push(x);
            self.extend(left - x, sum + e * x, cost + x as u64 * d * d);
            self.current.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window() {
        assert!(matches!(solve_model1(10, 6), Err(Error::Infeasible(_))));
        assert!(matches!(solve_model1(3, 1), Err(Error::Precondition(_))));
        assert!(solve_model1(10, 3).is_ok());
    }

    #[test]
    fn tree_vector_objective() {
        // Direct score of (1,1,1,1,6): (9 + 4 + 1 + 0 + 6) / 10.
        let x = tree_vector(10, 3);
        assert_eq!(x[..5], [1, 1, 1, 1, 6]);
        assert_eq!(weighted(&x, 3), 20);
        assert!((closed_form_objective(10, 3) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn exhaustive_beats_tree_at_ten_three() {
        // (1,1,1,5,2): 9 + 4 + 1 + 0 + 2 = 16, mean 26/10 rounds to 3.
        let s = solve_model1(10, 3).unwrap();
        assert_eq!(s.method, Model1Method::Exhaustive);
        assert_eq!(s.weighted_objective, 16);
        assert!(!s.matches_closed_form);
        assert_eq!(s.counts.iter().sum::<usize>(), 10);
    }

    #[test]
    fn large_orders_use_tree_vector() {
        let s = solve_model1(30, 6).unwrap();
        assert_eq!(s.method, Model1Method::ClosedForm);
        assert!((s.objective - closed_form_objective(30, 6)).abs() < 1e-12);
    }
}
