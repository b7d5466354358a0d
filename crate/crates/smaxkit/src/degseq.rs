//! Degree-sequence bookkeeping: reverse cumulative histograms and three
//! equivalent graphicality tests (Erdős–Gallai, Tripathi–Vijay, and the
//! phi-vector test used by the incremental construction).
//!
//! Histogram and phi indices are 1-based in the doc comments, matching the
//! usual statement of the inequalities; storage is 0-based, so `sigma[j - 1]`
//! holds the 1-based entry `sigma_j`.

use crate::error::{Error, Result};

/// A degree sequence, kept sorted nonincreasing.
///
/// Zero entries are permitted; they are ignored by the histogram and the
/// phi vector by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    degrees: Vec<u32>,
}

impl DegreeSequence {
    pub fn new(mut degrees: Vec<u32>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::EmptySequence);
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { degrees })
    }

    /// Parses whitespace/newline-separated nonnegative integers.
    pub fn parse(text: &str) -> Result<Self> {
        let mut degrees = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            for token in line.split_whitespace() {
                let value: u32 = token.parse().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    msg: format!("expected a nonnegative integer, got {token:?}"),
                })?;
                degrees.push(value);
            }
        }
        Self::new(degrees)
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty input
    }

    pub fn total(&self) -> u64 {
        self.degrees.iter().map(|&d| u64::from(d)).sum()
    }

    pub fn max_degree(&self) -> u32 {
        self.degrees[0]
    }

    /// Graphicality via the phi-vector route, with the all-zero sequence
    /// (the empty graph) accepted directly.
    pub fn is_graphical(&self) -> bool {
        if self.max_degree() == 0 {
            return true;
        }
        let sigma = revcdf(self).expect("nonzero max degree");
        let phi = build_phi(&sigma);
        is_graphical_phi(&phi, self.total())
    }
}

/// Outcome of the Erdős–Gallai test, with the first failing prefix length
/// when the inequality is violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphicalityVerdict {
    Graphical,
    OddSum,
    /// The inequality fails at prefix length `k` (1-based).
    Violation { k: usize },
}

impl GraphicalityVerdict {
    pub fn is_graphical(&self) -> bool {
        matches!(self, GraphicalityVerdict::Graphical)
    }
}

/// Erdős–Gallai test with diagnostics: even degree sum, and for every
/// 1 <= k <= n-1,
/// `sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(k, d_i)`.
pub fn erdos_gallai_verdict(d: &DegreeSequence) -> GraphicalityVerdict {
    if d.total() % 2 != 0 {
        return GraphicalityVerdict::OddSum;
    }
    let deg = d.degrees();
    let n = deg.len();
    let mut prefix = vec![0u64; n + 1];
    for i in 0..n {
        prefix[i + 1] = prefix[i] + u64::from(deg[i]);
    }
    for k in 1..=n {
        let lhs = prefix[k];
        // Among i > k, entries with d_i >= k contribute k; the rest contribute d_i.
        // Degrees are sorted nonincreasing, so split by partition point.
        let split = deg.partition_point(|&x| x as usize >= k).max(k);
        let big = (split - k) as u64 * k as u64;
        let small = prefix[n] - prefix[split];
        let rhs = (k as u64) * (k as u64 - 1) + big + small;
        if lhs > rhs {
            return GraphicalityVerdict::Violation { k };
        }
    }
    GraphicalityVerdict::Graphical
}

/// Erdős–Gallai graphicality test.
pub fn erdos_gallai(d: &DegreeSequence) -> bool {
    erdos_gallai_verdict(d).is_graphical()
}

/// The reverse cumulative degree histogram `sigma_1 <= ... <= sigma_d`,
/// where `sigma_j` counts the nodes of degree at least `d - j + 1` and
/// `d` is the reference maximum degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CumHistogram {
    sigma: Vec<i64>,
}

impl CumHistogram {
    /// Builds from explicit sigma entries; `d` is the vector length.
    pub fn new(sigma: Vec<i64>) -> Result<Self> {
        if sigma.is_empty() {
            return Err(Error::Domain("empty cumulative histogram".into()));
        }
        if sigma.windows(2).any(|w| w[0] > w[1]) || sigma[0] < 0 {
            return Err(Error::Domain(
                "cumulative histogram must be nonnegative and nondecreasing".into(),
            ));
        }
        if *sigma.last().unwrap() < 1 {
            return Err(Error::Domain(
                "cumulative histogram must count at least one node".into(),
            ));
        }
        Ok(Self { sigma })
    }

    pub fn sigma(&self) -> &[i64] {
        &self.sigma
    }

    /// The reference maximum degree.
    pub fn d(&self) -> usize {
        self.sigma.len()
    }
}

/// Builds the reverse cumulative histogram of a degree sequence, with
/// `d = max(D)`. Rejects all-zero sequences.
pub fn revcdf(d: &DegreeSequence) -> Result<CumHistogram> {
    let dmax = d.max_degree() as usize;
    if dmax == 0 {
        return Err(Error::AllZeroSequence);
    }
    Ok(CumHistogram {
        sigma: sigma_from_degrees(d.degrees(), dmax),
    })
}

/// Histogram of `degrees` against an explicit reference maximum `d`
/// (entries above `d` are not expected; zeros are ignored).
pub(crate) fn sigma_from_degrees(degrees: &[u32], d: usize) -> Vec<i64> {
    let mut counts = vec![0i64; d + 1];
    for &deg in degrees {
        if deg > 0 {
            counts[deg as usize] += 1;
        }
    }
    // sigma_j counts degrees >= d - j + 1, i.e. a suffix sum of `counts`.
    let mut sigma = vec![0i64; d];
    let mut acc = 0;
    for j in 1..=d {
        acc += counts[d - j + 1];
        sigma[j - 1] = acc;
    }
    sigma
}

/// The per-index slack of the Erdős–Gallai inequality evaluated at
/// `k = sigma_j`; the sequence is graphical iff the sum is even and every
/// entry is nonnegative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiVector {
    phi: Vec<i64>,
}

impl PhiVector {
    pub fn phi(&self) -> &[i64] {
        &self.phi
    }

    pub fn is_nonnegative(&self) -> bool {
        self.phi.iter().all(|&p| p >= 0)
    }
}

/// Tripathi–Vijay test: the Erdős–Gallai inequality checked only at the
/// prefix lengths `k = sigma_j`, driven entirely by the histogram.
/// `total` is the degree sum, supplied for the parity check.
pub fn tripathi_vijay(h: &CumHistogram, total: u64) -> bool {
    if total % 2 != 0 {
        return false;
    }
    let d = h.d() as i64;
    let sigma = h.sigma();
    let at = |i: i64| -> i64 {
        if i <= 0 {
            0
        } else if i > d {
            sigma[(d - 1) as usize]
        } else {
            sigma[(i - 1) as usize]
        }
    };
    for j in 1..=d {
        let sj = at(j);
        let mut lhs = 0i64;
        for i in 1..=j {
            lhs += (at(i) - at(i - 1)) * (d - i + 1);
        }
        let mut rhs = sj * (sj - 1);
        for i in (j + 1)..=d {
            rhs += (at(i) - at(i - 1)) * sj.min(d - i + 1);
        }
        if lhs > rhs {
            return false;
        }
    }
    true
}

/// Computes the phi vector from a histogram: for each j,
/// `phi_j = sigma_j(sigma_j - 1) - sum_{i<=j} (sigma_i - sigma_{i-1})(d - i + 1)
///          + sum_{i>j} (sigma_i - sigma_{i-1}) min(sigma_j, d - i + 1)`,
/// with boundary conventions `sigma_i = 0` for i <= 0 and `sigma_i = sigma_d`
/// for i > d. The right-hand sum splits at the crossover `i = d - sigma_j + 1`:
/// the minimum is `sigma_j` below it and `d - i + 1` from it onward.
pub fn build_phi(h: &CumHistogram) -> PhiVector {
    PhiVector {
        phi: phi_from_sigma(h.sigma()),
    }
}

pub(crate) fn phi_from_sigma(sigma: &[i64]) -> Vec<i64> {
    let d = sigma.len() as i64;
    let at = |i: i64| -> i64 {
        if i <= 0 {
            0
        } else if i > d {
            sigma[(d - 1) as usize]
        } else {
            sigma[(i - 1) as usize]
        }
    };
    // tail[a-1] = sum_{i=a}^{d} (sigma_i - sigma_{i-1}) (d - i + 1), for a in 1..=d.
    let mut tail = vec![0i64; d as usize + 1];
    for a in (1..=d).rev() {
        tail[(a - 1) as usize] = tail[a as usize] + (at(a) - at(a - 1)) * (d - a + 1);
    }
    let tail_at = |a: i64| -> i64 {
        if a > d {
            0
        } else {
            tail[(a - 1) as usize]
        }
    };
    let mut phi = Vec::with_capacity(d as usize);
    let mut left = 0i64; // running sum_{i<=j} (sigma_i - sigma_{i-1})(d - i + 1)
    for j in 1..=d {
        let sj = at(j);
        left += (at(j) - at(j - 1)) * (d - j + 1);
        // min = sigma_j for j+1 <= i <= d - sigma_j, min = d - i + 1 after.
        let cross = d - sj + 1;
        let flat_hi = (cross - 1).min(d);
        let flat = if flat_hi >= j + 1 {
            sj * (at(flat_hi) - sj)
        } else {
            0
        };
        let slope_lo = cross.max(j + 1);
        let slope = if slope_lo <= d {
            tail_at(slope_lo)
        } else {
            0
        };
        phi.push(sj * (sj - 1) - left + flat + slope);
    }
    PhiVector { phi }.phi
}

/// Graphicality test on a phi vector: even degree sum and every entry
/// nonnegative.
pub fn is_graphical_phi(phi: &PhiVector, total: u64) -> bool {
    total % 2 == 0 && phi.is_nonnegative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ds(v: &[u32]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    /// Direct transcription of the double-loop phi formula, used as the
    /// independent route for checking the closed-form construction.
    fn phi_naive(sigma: &[i64]) -> Vec<i64> {
        let d = sigma.len() as i64;
        let at = |i: i64| -> i64 {
            if i <= 0 {
                0
            } else if i > d {
                sigma[(d - 1) as usize]
            } else {
                sigma[(i - 1) as usize]
            }
        };
        (1..=d)
            .map(|j| {
                let sj = at(j);
                let mut v = sj * (sj - 1);
                for i in 1..=j {
                    v -= (at(i) - at(i - 1)) * (d - i + 1);
                }
                for i in (j + 1)..=d {
                    v += (at(i) - at(i - 1)) * sj.min(d - i + 1);
                }
                v
            })
            .collect()
    }

    #[test]
    fn revcdf_examples() {
        let h = revcdf(&ds(&[3, 1, 1, 1])).unwrap();
        assert_eq!(h.sigma(), &[1, 1, 4]);
        assert_eq!(h.d(), 3);

        let h = revcdf(&ds(&[1, 1])).unwrap();
        assert_eq!(h.sigma(), &[2]);

        // regular sequence: sigma is constant n with length k
        let h = revcdf(&ds(&[4; 6])).unwrap();
        assert_eq!(h.sigma(), &[6, 6, 6, 6]);
    }

    #[test]
    fn revcdf_rejects_all_zero() {
        assert!(matches!(
            revcdf(&ds(&[0, 0])),
            Err(Error::AllZeroSequence)
        ));
    }

    #[test]
    fn erdos_gallai_examples() {
        assert!(erdos_gallai(&ds(&[2, 2, 2])));
        assert_eq!(
            erdos_gallai_verdict(&ds(&[3, 1, 1])),
            GraphicalityVerdict::OddSum
        );
        assert_eq!(
            erdos_gallai_verdict(&ds(&[3, 3, 1, 1])),
            GraphicalityVerdict::Violation { k: 2 }
        );
    }

    #[test]
    fn tripathi_vijay_examples() {
        let h = CumHistogram::new(vec![3, 3]).unwrap();
        assert!(tripathi_vijay(&h, 6));

        let h = CumHistogram::new(vec![1, 1, 4]).unwrap();
        assert!(tripathi_vijay(&h, 6));

        // from D=(4,4,1,1)
        let h = revcdf(&ds(&[4, 4, 1, 1])).unwrap();
        assert_eq!(h.sigma(), &[2, 2, 2, 4]);
        assert!(!tripathi_vijay(&h, 10));
        assert!(!erdos_gallai(&ds(&[4, 4, 1, 1])));
    }

    #[test]
    fn build_phi_examples() {
        let phi = build_phi(&revcdf(&ds(&[1, 1])).unwrap());
        assert_eq!(phi.phi(), &[0]);

        let phi = build_phi(&revcdf(&ds(&[2, 2, 2])).unwrap());
        assert_eq!(phi.phi(), &[0, 0]);

        // D=(2,2,1): slack -1 at k=sigma_1=2 (the top two degrees sum to 4
        // against capacity 3), slack 1 at k=3.
        let phi = build_phi(&revcdf(&ds(&[2, 2, 1])).unwrap());
        assert_eq!(phi.phi(), &[-1, 1]);
    }

    #[test]
    fn is_graphical_phi_examples() {
        let phi = PhiVector { phi: vec![0, 0] };
        assert!(is_graphical_phi(&phi, 6));
        let phi = PhiVector { phi: vec![-1, 3] };
        assert!(!is_graphical_phi(&phi, 4));
        // D=(3,3,1,1): even sum but not graphical
        let d = ds(&[3, 3, 1, 1]);
        let phi = build_phi(&revcdf(&d).unwrap());
        assert!(!is_graphical_phi(&phi, d.total()));
        assert!(!erdos_gallai(&d));
    }

    #[test]
    fn odd_sum_rejected_everywhere() {
        let d = ds(&[2, 2, 1]);
        assert!(!erdos_gallai(&d));
        let h = revcdf(&d).unwrap();
        assert!(!tripathi_vijay(&h, d.total()));
        assert!(!is_graphical_phi(&build_phi(&h), d.total()));
    }

    proptest! {
        #[test]
        fn three_tests_agree(raw in proptest::collection::vec(0u32..12, 1..40)) {
            let d = DegreeSequence::new(raw).unwrap();
            let eg = erdos_gallai(&d);
            if d.max_degree() == 0 {
                prop_assert!(eg);
                return Ok(());
            }
            let h = revcdf(&d).unwrap();
            prop_assert_eq!(eg, tripathi_vijay(&h, d.total()));
            prop_assert_eq!(eg, is_graphical_phi(&build_phi(&h), d.total()));
        }

        #[test]
        fn phi_matches_naive_formula(raw in proptest::collection::vec(1u32..25, 1..60)) {
            let d = DegreeSequence::new(raw).unwrap();
            let h = revcdf(&d).unwrap();
            let fast = build_phi(&h);
            let naive = phi_naive(h.sigma());
            prop_assert_eq!(fast.phi(), naive.as_slice());
        }

        #[test]
        fn revcdf_is_monotone(
            base in proptest::collection::vec(1u32..8, 1..30),
            bumps in proptest::collection::vec(0u32..3, 1..30),
        ) {
            // Force a shared maximum so both histograms have the same length.
            let mut lo = base.clone();
            lo.push(8);
            let hi: Vec<u32> = lo
                .iter()
                .zip(bumps.iter().chain(std::iter::repeat(&0)))
                .map(|(&a, &b)| (a + b).min(8))
                .collect();
            let slo = revcdf(&DegreeSequence::new(lo).unwrap()).unwrap();
            let shi = revcdf(&DegreeSequence::new(hi).unwrap()).unwrap();
            for (a, b) in slo.sigma().iter().zip(shi.sigma()) {
                prop_assert!(a <= b);
            }
        }
    }
}
