//! Tools around the s-metric of a graph: graphicality tests for degree
//! sequences, an incremental slack vector with a constant-amortized-time
//! degree-drop update, a greedy construction approximating the s-maximal
//! realization, scalar structure metrics, preferential-attachment tree
//! simulation with closed-form extreme-tree probabilities, and
//! sliding-window attachment-kernel estimation on time-stamped edge lists.

pub mod bagen;
pub mod degseq;
pub mod error;
pub mod evolution;
pub mod extremal;
pub mod graph;
pub mod metrics;
pub mod stats;

pub use degseq::{
    build_phi, erdos_gallai, erdos_gallai_verdict, is_graphical_phi, revcdf, tripathi_vijay,
    CumHistogram, DegreeSequence, GraphicalityVerdict, PhiVector,
};
pub use error::{Error, Result};
pub use extremal::{bcd, bcd_with_stats, exact_extrema, Extrema, SigmaPhi};
pub use graph::Graph;
pub use metrics::{
    assortativity, coefficient_of_variation, s_metric, s_min_approx, s_report, SMetricReport,
};

#[cfg(test)]
pub(crate) mod testutil {
    use rand::Rng;
    use rand_chacha::ChaCha8Rng;

    use crate::degseq::DegreeSequence;

    /// Degree sequence of a uniformly sampled simple graph on up to `max_n`
    /// nodes — graphical by construction, never all-zero.
    pub fn random_graphical(rng: &mut ChaCha8Rng, max_n: usize) -> DegreeSequence {
        let n = rng.gen_range(2..=max_n.max(2));
        let mut deg = vec![0u32; n];
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(0.3) {
                    deg[u] += 1;
                    deg[v] += 1;
                }
            }
        }
        if deg.iter().all(|&d| d == 0) {
            deg[0] = 1;
            deg[1] = 1;
        }
        DegreeSequence::new(deg).unwrap()
    }
}
