//! Slow, obviously-correct reference routines.
//!
//! Everything here works on plain adjacency lists (`adj[u]` lists the heads of
//! arcs leaving `u`) and deliberately avoids sharing code with `cbnet-core`, so
//! that the test suites compare two independent computations.

/// Reachability matrix via repeated relaxation (transitive closure).
/// `reach[u][v]` is true iff a directed path of length >= 1 leads from u to v.
pub fn reachability_matrix(adj: &[Vec<usize>]) -> Vec<Vec<bool>> {
    let n = adj.len();
    let mut reach = vec![vec![false; n]; n];
    for (u, heads) in adj.iter().enumerate() {
        for &v in heads {
            reach[u][v] = true;
        }
    }
    // Warshall
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    reach
}

/// Partition into classes of mutually reachable vertices, each class sorted,
/// classes sorted by their smallest member.
pub fn mutual_reachability_partition(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let reach = reachability_matrix(adj);
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for u in 0..n {
        if assigned[u] {
            continue;
        }
        let mut class = vec![u];
        assigned[u] = true;
        for v in (u + 1)..n {
            if !assigned[v] && reach[u][v] && reach[v][u] {
                class.push(v);
                assigned[v] = true;
            }
        }
        classes.push(class);
    }
    classes
}

/// All-pairs hop distances by Floyd-Warshall. `None` means unreachable.
/// The diagonal is 0.
pub fn distance_matrix(adj: &[Vec<usize>]) -> Vec<Vec<Option<usize>>> {
    let n = adj.len();
    let mut d = vec![vec![None; n]; n];
    for u in 0..n {
        d[u][u] = Some(0);
        for &v in &adj[u] {
            if u != v {
                d[u][v] = Some(1);
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            let Some(ik) = d[i][k] else { continue };
            for j in 0..n {
                if let Some(kj) = d[k][j] {
                    let via = ik + kj;
                    if d[i][j].is_none_or(|cur| via < cur) {
                        d[i][j] = Some(via);
                    }
                }
            }
        }
    }
    d
}

/// Diameter over ordered pairs u != v, `None` when some pair is unreachable.
pub fn diameter(adj: &[Vec<usize>]) -> Option<usize> {
    let d = distance_matrix(adj);
    let n = adj.len();
    let mut best = 0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                best = best.max(d[i][j]?);
            }
        }
    }
    Some(best)
}

/// Per-vertex (number of other vertices reachable, max distance to them).
pub fn reach_and_eccentricity(adj: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let d = distance_matrix(adj);
    (0..adj.len())
        .map(|u| {
            let mut count = 0;
            let mut ecc = 0;
            for (v, dist) in d[u].iter().enumerate() {
                if v != u {
                    if let Some(x) = dist {
                        count += 1;
                        ecc = ecc.max(*x);
                    }
                }
            }
            (count, ecc)
        })
        .collect()
}

/// Kahn's algorithm; true iff the digraph has no directed cycle.
pub fn is_acyclic(adj: &[Vec<usize>]) -> bool {
    let n = adj.len();
    let mut indeg = vec![0usize; n];
    for heads in adj {
        for &v in heads {
            indeg[v] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(u) = stack.pop() {
        seen += 1;
        for &v in &adj[u] {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                stack.push(v);
            }
        }
    }
    seen == n
}

/// Length of the longest directed cycle by exhaustive simple-path search.
/// Returns 0 for acyclic inputs. Exponential; intended for N <= 10.
pub fn longest_cycle(adj: &[Vec<usize>]) -> usize {
    fn extend(
        adj: &[Vec<usize>],
        start: usize,
        u: usize,
        len: usize,
        on_path: &mut [bool],
        best: &mut usize,
    ) {
        for &v in &adj[u] {
            if v == start {
                *best = (*best).max(len);
            } else if v > start && !on_path[v] {
                on_path[v] = true;
                extend(adj, start, v, len + 1, on_path, best);
                on_path[v] = false;
            }
        }
    }
    let n = adj.len();
    let mut best = 0;
    let mut on_path = vec![false; n];
    // Each cycle is found from its smallest vertex.
    for start in 0..n {
        on_path[start] = true;
        extend(adj, start, start, 1, &mut on_path, &mut best);
        on_path[start] = false;
    }
    best
}

/// Pearson correlation of (x, y) samples written out term by term.
/// `None` when either margin has zero variance or fewer than two samples.
pub fn pearson(samples: &[(f64, f64)]) -> Option<f64> {
    let n = samples.len();
    if n < 2 {
        return None;
    }
    let nf = n as f64;
    let mean_x = samples.iter().map(|s| s.0).sum::<f64>() / nf;
    let mean_y = samples.iter().map(|s| s.1).sum::<f64>() / nf;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for &(x, y) in samples {
        sxy += (x - mean_x) * (y - mean_y);
        sxx += (x - mean_x) * (x - mean_x);
        syy += (y - mean_y) * (y - mean_y);
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some(sxy / (sxx.sqrt() * syy.sqrt()))
}

/// Directed out->in degree samples, one per arc: (out-degree of tail,
/// in-degree of head).
pub fn out_in_degree_samples(adj: &[Vec<usize>]) -> Vec<(f64, f64)> {
    let n = adj.len();
    let mut indeg = vec![0usize; n];
    for heads in adj {
        for &v in heads {
            indeg[v] += 1;
        }
    }
    let mut out = Vec::new();
    for (u, heads) in adj.iter().enumerate() {
        for &v in heads {
            out.push((adj[u].len() as f64, indeg[v] as f64));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| vec![(i + 1) % n]).collect()
    }

    #[test]
    fn cycle_basics() {
        let c = cycle(5);
        assert_eq!(diameter(&c), Some(4));
        assert_eq!(longest_cycle(&c), 5);
        assert_eq!(mutual_reachability_partition(&c).len(), 1);
        assert!(!is_acyclic(&c));
    }

    #[test]
    fn path_is_acyclic() {
        let p = vec![vec![1], vec![2], vec![]];
        assert!(is_acyclic(&p));
        assert_eq!(longest_cycle(&p), 0);
        assert_eq!(diameter(&p), None);
        assert_eq!(reach_and_eccentricity(&p)[0], (2, 2));
    }
}
