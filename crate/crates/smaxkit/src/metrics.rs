//! Scalar graph statistics: the s-metric, its arithmetic lower bound, the
//! normalized S variants, degree assortativity, and the coefficient of
//! variation of a degree sequence.

use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};
use crate::extremal::bcd;
use crate::graph::Graph;

/// `s(g) = sum over edges of d_u * d_v`, degrees measured in `g` itself.
pub fn s_metric(g: &Graph) -> u64 {
    let deg = g.degrees();
    g.edges()
        .iter()
        .map(|&(u, v)| u64::from(deg[u as usize]) * u64::from(deg[v as usize]))
        .sum()
}

/// Arithmetic lower bound on the minimal s-metric over realizations:
/// `1/2 * sum_i d_i * d_{n+1-i}` (a half-integer in general).
pub fn s_min_approx(d: &DegreeSequence) -> f64 {
    let deg = d.degrees();
    let n = deg.len();
    let twice: u64 = (0..n)
        .map(|i| u64::from(deg[i]) * u64::from(deg[n - 1 - i]))
        .sum();
    twice as f64 / 2.0
}

/// Population coefficient of variation of the degree sequence:
/// `sqrt(Var(D)) / E(D)`.
pub fn coefficient_of_variation(d: &DegreeSequence) -> Result<f64> {
    let deg = d.degrees();
    let n = deg.len() as f64;
    let mean = d.total() as f64 / n;
    if mean == 0.0 {
        return Err(Error::Domain("zero mean degree".into()));
    }
    let var = deg
        .iter()
        .map(|&x| {
            let diff = f64::from(x) - mean;
            diff * diff
        })
        .sum::<f64>()
        / n;
    Ok(var.sqrt() / mean)
}

/// Pearson correlation of degrees at edge endpoints (each edge counted in
/// both orientations). Returns `None` when the endpoint degrees are
/// constant, where the correlation is undefined.
pub fn assortativity(g: &Graph) -> Option<f64> {
    if g.edge_count() < 2 {
        return None;
    }
    let deg = g.degrees();
    let m = g.edge_count() as f64;
    let mut sum_prod = 0.0;
    let mut sum_half = 0.0;
    let mut sum_sq_half = 0.0;
    for &(u, v) in g.edges() {
        let (ju, kv) = (f64::from(deg[u as usize]), f64::from(deg[v as usize]));
        sum_prod += ju * kv;
        sum_half += 0.5 * (ju + kv);
        sum_sq_half += 0.5 * (ju * ju + kv * kv);
    }
    let mean = sum_half / m;
    let num = sum_prod / m - mean * mean;
    let den = sum_sq_half / m - mean * mean;
    if den.abs() < 1e-12 {
        None
    } else {
        Some(num / den)
    }
}

/// Full s-metric report for one graph.
#[derive(Debug, Clone)]
pub struct SMetricReport {
    pub n: usize,
    pub m: usize,
    pub s: u64,
    pub s_min_approx: f64,
    /// `s` of the greedy near-maximal construction for the same degree
    /// sequence; a proxy for the true maximum.
    pub s_max_approx: u64,
    pub s_ratio: f64,
    pub s_normalized: f64,
    /// Set when `s_min_approx == s_max_approx` and the affine normalization
    /// degenerates; `s_normalized` is then reported as 1.
    pub degenerate: bool,
    pub cv: f64,
    /// `None` when endpoint degrees are constant.
    pub r: Option<f64>,
}

impl SMetricReport {
    pub const CSV_HEADER: &'static str = "n,m,s,smin_approx,smax_approx,S_ratio,S_norm,cv,r";

    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.n,
            self.m,
            self.s,
            self.s_min_approx,
            self.s_max_approx,
            self.s_ratio,
            self.s_normalized,
            self.cv,
            match self.r {
                Some(r) => r.to_string(),
                None => "nan".to_string(),
            }
        )
    }
}

/// Computes the report: `s`, the arithmetic lower bound, the constructed
/// maximum proxy, and both S normalizations.
pub fn s_report(g: &Graph) -> Result<SMetricReport> {
    let d = g.degree_sequence()?;
    let s = s_metric(g);
    let smin = s_min_approx(&d);
    let gmax = bcd(&d)?;
    let smax = s_metric(&gmax);
    let s_ratio = if smax == 0 { 1.0 } else { s as f64 / smax as f64 };
    let span = smax as f64 - smin;
    let (s_normalized, degenerate) = if span.abs() < f64::EPSILON {
        (1.0, true)
    } else {
        ((s as f64 - smin) / span, false)
    };
    Ok(SMetricReport {
        n: g.n(),
        m: g.edge_count(),
        s,
        s_min_approx: smin,
        s_max_approx: smax,
        s_ratio,
        s_normalized,
        degenerate,
        cv: coefficient_of_variation(&d)?,
        r: assortativity(g),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::exact_extrema;

    fn ds(v: &[u32]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    fn star(n: usize) -> Graph {
        Graph::new(n, (1..n as u32).map(|i| (0, i)).collect()).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (0..n as u32 - 1).map(|i| (i, i + 1)).collect()).unwrap()
    }

    #[test]
    fn s_metric_examples() {
        assert_eq!(s_metric(&Graph::new(2, vec![(0, 1)]).unwrap()), 1);
        assert_eq!(s_metric(&star(4)), 9);
        let triangle = Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(s_metric(&triangle), 12);
    }

    #[test]
    fn s_min_approx_examples() {
        assert_eq!(s_min_approx(&ds(&[3, 1, 1, 1])), 4.0);
        assert_eq!(s_min_approx(&ds(&[1, 1])), 1.0);
        // gap to the true minimum (12, the triangle)
        assert_eq!(s_min_approx(&ds(&[2, 2, 2])), 6.0);
        assert_eq!(exact_extrema(&ds(&[2, 2, 2]), false).unwrap().s_min, 12);
    }

    #[test]
    fn cv_examples() {
        assert_eq!(coefficient_of_variation(&ds(&[2, 2, 2])).unwrap(), 0.0);
        let cv = coefficient_of_variation(&ds(&[3, 1, 1, 1])).unwrap();
        assert!((cv - 0.75f64.sqrt() / 1.5).abs() < 1e-12);
        assert!((cv - 0.5773502691896258).abs() < 1e-12);
        // closed form for a star sequence (n-1, 1, ..., 1) at n = 8:
        // mean = 2(n-1)/n, var = (n-1)(n-2)^2/n^2
        let n = 8.0f64;
        let expect = ((n - 1.0) * (n - 2.0) * (n - 2.0)).sqrt() / (2.0 * (n - 1.0));
        let cv = coefficient_of_variation(&ds(&[7, 1, 1, 1, 1, 1, 1, 1])).unwrap();
        assert!((cv - expect).abs() < 1e-12);
    }

    #[test]
    fn cv_zero_mean_is_error() {
        assert!(coefficient_of_variation(&ds(&[0, 0])).is_err());
    }

    #[test]
    fn assortativity_examples() {
        let r = assortativity(&star(5)).unwrap();
        assert!((r + 1.0).abs() < 1e-12);
        // two disjoint edges: constant endpoint degree
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(assortativity(&g), None);
    }

    #[test]
    fn assortativity_label_invariance() {
        let g = Graph::new(5, vec![(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let h = Graph::new(5, vec![(4, 3), (3, 2), (2, 1), (3, 0)]).unwrap();
        let (a, b) = (assortativity(&g).unwrap(), assortativity(&h).unwrap());
        assert!((a - b).abs() < 1e-12);
        assert_eq!(s_metric(&g), s_metric(&h));
    }

    #[test]
    fn report_star_and_path() {
        let rep = s_report(&star(4)).unwrap();
        assert_eq!(rep.s, 9);
        assert_eq!(rep.s_max_approx, 9);
        assert_eq!(rep.s_ratio, 1.0);
        assert!(!rep.degenerate);

        let rep = s_report(&path(4)).unwrap();
        assert_eq!(rep.s, 8);
        assert_eq!(rep.s_max_approx, 8);
        assert_eq!(rep.s_ratio, 1.0);

        // single edge: bound and maximum coincide
        let rep = s_report(&Graph::new(2, vec![(0, 1)]).unwrap()).unwrap();
        assert!(rep.degenerate);
        assert_eq!(rep.s_normalized, 1.0);
    }

    #[test]
    fn lower_bound_holds() {
        for g in [star(6), path(6), Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap()] {
            let rep = s_report(&g).unwrap();
            assert!(rep.s_min_approx <= rep.s as f64);
            assert!(rep.s as f64 <= rep.s_max_approx as f64);
        }
    }
}
