//! Construction of a near-maximal-s graph: the O(d) incremental sigma/phi
//! update (`SigmaPhi::drop`), the greedy high-degree-first builder (`bcd`),
//! and an exhaustive small-instance oracle (`exact_extrema`).

use std::collections::HashSet;

use crate::degseq::{phi_from_sigma, revcdf, sigma_from_degrees, CumHistogram, DegreeSequence};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::s_metric;

/// A reverse cumulative histogram paired with its phi vector, both against a
/// fixed reference maximum degree `d`, supporting the O(d) single-degree
/// decrement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaPhi {
    d: usize,
    sigma: Vec<i64>,
    phi: Vec<i64>,
}

impl SigmaPhi {
    pub fn new(h: &CumHistogram) -> Self {
        Self {
            d: h.d(),
            sigma: h.sigma().to_vec(),
            phi: phi_from_sigma(h.sigma()),
        }
    }

    /// Builds from a raw (possibly decayed, unsorted) degree multiset
    /// against a fixed reference maximum.
    pub fn from_degrees(degrees: &[u32], d: usize) -> Self {
        let sigma = sigma_from_degrees(degrees, d);
        let phi = phi_from_sigma(&sigma);
        Self { d, sigma, phi }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn sigma(&self) -> &[i64] {
        &self.sigma
    }

    pub fn phi(&self) -> &[i64] {
        &self.phi
    }

    pub fn is_nonnegative(&self) -> bool {
        self.phi.iter().all(|&p| p >= 0)
    }

    /// Reflects decreasing one node's degree from `d - m + 1` to `d - m`,
    /// where `m` is the 1-based histogram index: `sigma_m` is decremented
    /// and phi is adjusted in place. Requires that some node actually has
    /// the implied degree (`sigma_m > sigma_{m-1}`).
    pub fn drop(&mut self, m: usize) -> Result<()> {
        let d = self.d;
        if m < 1 || m > d {
            return Err(Error::Domain(format!(
                "drop index {m} out of range 1..={d}"
            )));
        }
        let sm = self.sigma[m - 1];
        let sm_prev = if m >= 2 { self.sigma[m - 2] } else { 0 };
        if sm <= sm_prev {
            return Err(Error::Domain(format!(
                "no node of degree {} to drop",
                d - m + 1
            )));
        }
        // j < m: entries with sigma_j > d - m lose 1; they form a suffix of
        // 1..m-1 since sigma is nondecreasing.
        let thresh = (d - m) as i64;
        let start = self.sigma[..m - 1].partition_point(|&s| s <= thresh);
        for p in &mut self.phi[start..m - 1] {
            *p -= 1;
        }
        // j = m.
        let mut delta = (d - m + 1) as i64 - 2 * (sm - 1) + (sm - 1).min((d - m) as i64);
        let ell = (d as i64 - sm + 1).min(d as i64);
        if (m as i64) < ell {
            delta -= self.sigma[ell as usize - 1] - sm;
        }
        self.phi[m - 1] += delta;
        // j > m.
        for p in &mut self.phi[m..] {
            *p += 1;
        }
        self.sigma[m - 1] -= 1;
        Ok(())
    }
}

/// Counters from a `bcd` run.
#[derive(Debug, Clone, Copy, Default)]
pub struct BcdStats {
    pub accepted_edges: usize,
    pub rejections: usize,
}

/// Greedy high-degree-first construction of a graph realizing `d` with
/// near-maximal s-metric. Nodes are labeled so that node 0 carries the
/// highest degree; output is deterministic.
pub fn bcd(d: &DegreeSequence) -> Result<Graph> {
    bcd_with_stats(d).map(|(g, _)| g)
}

pub fn bcd_with_stats(d: &DegreeSequence) -> Result<(Graph, BcdStats)> {
    if !d.is_graphical() {
        return Err(Error::NotGraphical(match crate::degseq::erdos_gallai_verdict(d) {
            crate::degseq::GraphicalityVerdict::OddSum => "odd degree sum".to_string(),
            crate::degseq::GraphicalityVerdict::Violation { k } => {
                format!("inequality violated at k={k}")
            }
            crate::degseq::GraphicalityVerdict::Graphical => "unrealizable".to_string(),
        }));
    }
    let n = d.len();
    let mut stats = BcdStats::default();
    if d.max_degree() == 0 {
        return Ok((Graph::new(n, Vec::new())?, stats));
    }
    let dmax = d.max_degree() as usize;
    let mut sp = SigmaPhi::new(&revcdf(d)?);
    let mut rem: Vec<u32> = d.degrees().to_vec();
    let mut edges: Vec<(u32, u32)> = Vec::with_capacity((d.total() / 2) as usize);
    let mut linked: HashSet<(u32, u32)> = HashSet::new();

    for n1 in 0..n {
        if rem[n1] == 0 {
            continue;
        }
        // Candidates in nonincreasing remaining-degree order, ties broken by
        // lower node id (counting sort by remaining degree).
        let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); dmax + 1];
        for (id, &r) in rem.iter().enumerate() {
            if r > 0 && id != n1 {
                buckets[r as usize].push(id as u32);
            }
        }
        'candidates: for deg in (1..=dmax).rev() {
            for &n2 in &buckets[deg] {
                if rem[n1] == 0 {
                    break 'candidates;
                }
                let n2u = n2 as usize;
                if rem[n2u] == 0 {
                    continue;
                }
                let key = ((n1 as u32).min(n2), (n1 as u32).max(n2));
                if linked.contains(&key) {
                    continue;
                }
                let g1 = rem[n1] as usize;
                let g2 = rem[n2u] as usize;
                let snapshot = (sp.sigma.clone(), sp.phi.clone());
                sp.drop(dmax - g1 + 1)?;
                sp.drop(dmax - g2 + 1)?;
                if sp.is_nonnegative() {
                    rem[n1] -= 1;
                    rem[n2u] -= 1;
                    linked.insert(key);
                    edges.push(key);
                    stats.accepted_edges += 1;
                } else {
                    sp.sigma = snapshot.0;
                    sp.phi = snapshot.1;
                    stats.rejections += 1;
                }
            }
        }
        if rem[n1] > 0 {
            return Err(Error::Construction {
                node: n1 + 1,
                remaining: rem[n1],
            });
        }
    }
    Ok((Graph::new(n, edges)?, stats))
}

/// True s-metric extrema over all labeled simple realizations of a degree
/// sequence, by exhaustive enumeration.
#[derive(Debug, Clone)]
pub struct Extrema {
    pub s_min: u64,
    pub s_max: u64,
    pub arg_min: Graph,
    pub arg_max: Graph,
    pub realizations: u64,
}

const ORACLE_MAX_N: usize = 10;
const ORACLE_MAX_SUM: u64 = 24;

/// Enumerates every labeled simple graph realizing `d` (optionally only the
/// connected ones) and returns the exact s-metric extrema. Guarded to small
/// instances.
pub fn exact_extrema(d: &DegreeSequence, connected_only: bool) -> Result<Extrema> {
    let n = d.len();
    let sum = d.total();
    if n > ORACLE_MAX_N || sum > ORACLE_MAX_SUM {
        return Err(Error::OracleTooLarge {
            n,
            max_n: ORACLE_MAX_N,
            sum,
            max_sum: ORACLE_MAX_SUM,
        });
    }
    let degrees = d.degrees();
    let mut residual: Vec<u32> = degrees.to_vec();
    let mut chosen: Vec<(u32, u32)> = Vec::new();
    let mut best: Option<Extrema> = None;

    fn visit(
        v: usize,
        residual: &mut Vec<u32>,
        chosen: &mut Vec<(u32, u32)>,
        degrees: &[u32],
        connected_only: bool,
        best: &mut Option<Extrema>,
    ) {
        let n = residual.len();
        if v == n {
            if residual.iter().any(|&r| r != 0) {
                return;
            }
            let g = Graph::new(n, chosen.clone()).expect("enumeration yields simple graphs");
            if connected_only && !g.is_connected() {
                return;
            }
            let s = s_metric(&g);
            match best {
                None => {
                    *best = Some(Extrema {
                        s_min: s,
                        s_max: s,
                        arg_min: g.clone(),
                        arg_max: g,
                        realizations: 1,
                    })
                }
                Some(b) => {
                    b.realizations += 1;
                    if s < b.s_min {
                        b.s_min = s;
                        b.arg_min = g.clone();
                    }
                    if s > b.s_max {
                        b.s_max = s;
                        b.arg_max = g;
                    }
                }
            }
            return;
        }
        let need = residual[v] as usize;
        let pool: Vec<usize> = (v + 1..n).filter(|&u| residual[u] > 0).collect();
        if need > pool.len() {
            return;
        }
        // choose `need` neighbors for v among pool
        fn choose(
            pool: &[usize],
            start: usize,
            need: usize,
            v: usize,
            residual: &mut Vec<u32>,
            chosen: &mut Vec<(u32, u32)>,
            degrees: &[u32],
            connected_only: bool,
            best: &mut Option<Extrema>,
        ) {
            if need == 0 {
                visit(v + 1, residual, chosen, degrees, connected_only, best);
                return;
            }
            if pool.len() - start < need {
                return;
            }
            for idx in start..pool.len() {
                let u = pool[idx];
                residual[u] -= 1;
                chosen.push((v as u32, u as u32));
                choose(
                    pool,
                    idx + 1,
                    need - 1,
                    v,
                    residual,
                    chosen,
                    degrees,
                    connected_only,
                    best,
                );
                chosen.pop();
                residual[u] += 1;
            }
        }
        let saved = residual[v];
        residual[v] = 0;
        choose(
            &pool,
            0,
            need,
            v,
            residual,
            chosen,
            degrees,
            connected_only,
            best,
        );
        residual[v] = saved;
    }

    visit(
        0,
        &mut residual,
        &mut chosen,
        degrees,
        connected_only,
        &mut best,
    );
    best.ok_or_else(|| {
        Error::Domain(format!(
            "no {}realization exists for this degree sequence",
            if connected_only { "connected " } else { "" }
        ))
    })
}
