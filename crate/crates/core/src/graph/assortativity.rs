use super::Digraph;

/// Directed out->in degree assortativity: Pearson correlation, over all
/// arcs (u, v), between the out-degree of u and the in-degree of v.
/// `None` when fewer than two arcs exist or either margin is constant.
pub fn assortativity(g: &Digraph) -> Option<f64> {
    let m = g.size();
    if m < 2 {
        return None;
    }
    let (mut sx, mut sy, mut sxx, mut syy, mut sxy) = (0i128, 0i128, 0i128, 0i128, 0i128);
    for (u, v) in g.edges() {
        let x = g.out_degree(u) as i128;
        let y = g.in_degree(v) as i128;
        sx += x;
        sy += y;
        sxx += x * x;
        syy += y * y;
        sxy += x * y;
    }
    // Integer moments keep the zero-variance test exact.
    let m = m as i128;
    let cov = m * sxy - sx * sy;
    let var_x = m * sxx - sx * sx;
    let var_y = m * syy - sy * sy;
    if var_x == 0 || var_y == 0 {
        return None;
    }
    Some(cov as f64 / ((var_x as f64).sqrt() * (var_y as f64).sqrt()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_is_undefined() {
        let g = Digraph::from_arcs(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert_eq!(assortativity(&g), None);
    }

    #[test]
    fn bidirected_star_is_disassortative() {
        let g = Digraph::from_arcs(5, (1..5).flat_map(|l| [(0, l), (l, 0)])).unwrap();
        // Hub arcs pair (4, 1); leaf arcs pair (1, 4): perfect anticorrelation.
        assert!((assortativity(&g).unwrap() + 1.0).abs() < 1e-12);
    }
}
