//! Sliding-window preferential-attachment estimation over time-stamped
//! edge lists: window snapshots, external/internal relative-probability
//! estimators, logarithmic binning, the variance strength measure, partial
//! sums, and linear trend significance.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::stats::t_two_sided_p;

/// Time-stamped edge records over string node ids, canonicalized to a dense
/// integer id space. Self-loops are dropped and duplicate `(t, u, v)`
/// records collapsed at ingestion.
#[derive(Debug, Clone)]
pub struct TemporalEdgeList {
    records: Vec<(i64, u32, u32)>,
    ids: Vec<String>,
    pub self_loops_dropped: usize,
    pub duplicates_collapsed: usize,
}

impl TemporalEdgeList {
    pub fn from_records<I, S>(raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, S, S)>,
        S: AsRef<str>,
    {
        let mut index: HashMap<String, u32> = HashMap::new();
        let mut ids = Vec::new();
        let mut seen = HashSet::new();
        let mut records = Vec::new();
        let mut self_loops = 0;
        let mut dups = 0;
        for (t, u, v) in raw {
            let mut intern = |name: &str| -> u32 {
                *index.entry(name.to_string()).or_insert_with(|| {
                    ids.push(name.to_string());
                    (ids.len() - 1) as u32
                })
            };
            let (ui, vi) = (intern(u.as_ref()), intern(v.as_ref()));
            if ui == vi {
                self_loops += 1;
                continue;
            }
            let key = (t, ui.min(vi), ui.max(vi));
            if seen.insert(key) {
                records.push(key);
            } else {
                dups += 1;
            }
        }
        if records.is_empty() {
            return Err(Error::Domain("no usable edge records".into()));
        }
        records.sort_unstable();
        Ok(Self {
            records,
            ids,
            self_loops_dropped: self_loops,
            duplicates_collapsed: dups,
        })
    }

    /// Parses CSV with header `t,u,v`; `t` is an integer time unit and the
    /// node ids are arbitrary strings. Lines starting with `#` are skipped.
    pub fn parse_csv(text: &str) -> Result<Self> {
        let mut raw = Vec::new();
        let mut header_seen = false;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if !header_seen {
                header_seen = true;
                if line.eq_ignore_ascii_case("t,u,v") {
                    continue;
                }
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 3 {
                return Err(Error::Parse {
                    line: lineno + 1,
                    msg: format!("expected 't,u,v', got {line:?}"),
                });
            }
            let t: i64 = fields[0].trim().parse().map_err(|_| Error::Parse {
                line: lineno + 1,
                msg: format!("invalid time {:?}", fields[0]),
            })?;
            raw.push((t, fields[1].trim().to_string(), fields[2].trim().to_string()));
        }
        Self::from_records(raw)
    }

    pub fn records(&self) -> &[(i64, u32, u32)] {
        &self.records
    }

    pub fn node_names(&self) -> &[String] {
        &self.ids
    }

    pub fn t_min(&self) -> i64 {
        self.records[0].0
    }

    pub fn t_max(&self) -> i64 {
        self.records[self.records.len() - 1].0
    }
}

/// The decomposition induced by times `T0 < T1 < T2`: the graph over
/// records in `[T0, T1]`, plus the new edges of `(T1, T2]` classified as
/// external (one existing endpoint) or internal (two existing endpoints,
/// not already linked). Edges between two new nodes are excluded from both
/// estimators and only counted.
#[derive(Debug, Clone)]
pub struct WindowSnapshot {
    existing: Graph,
    /// Existing-endpoint (local index into `existing`) of each external edge.
    external_incidences: Vec<u32>,
    /// Local index pairs of new internal edges.
    internal_edges: Vec<(u32, u32)>,
    pub new_new_edges: usize,
    pub bounds: (i64, i64, i64),
}

impl WindowSnapshot {
    pub fn existing(&self) -> &Graph {
        &self.existing
    }

    pub fn external_count(&self) -> usize {
        self.external_incidences.len()
    }

    pub fn internal_count(&self) -> usize {
        self.internal_edges.len()
    }
}

/// Builds a window snapshot. When `largest_component` is set the existing
/// graph is restricted to its largest connected component and nodes outside
/// it are treated as new.
pub fn snapshot(
    tel: &TemporalEdgeList,
    t0: i64,
    t1: i64,
    t2: i64,
    largest_component: bool,
) -> Result<WindowSnapshot> {
    if !(t0 <= t1 && t1 < t2) {
        return Err(Error::Domain(format!(
            "window times must satisfy T0 <= T1 < T2, got ({t0}, {t1}, {t2})"
        )));
    }
    // existing edges: records in [T0, T1], deduplicated across times
    let mut existing_pairs: HashSet<(u32, u32)> = HashSet::new();
    for &(t, u, v) in tel.records() {
        if t >= t0 && t <= t1 {
            existing_pairs.insert((u, v));
        }
    }
    if existing_pairs.is_empty() {
        return Err(Error::Domain(format!(
            "no records in existing interval [{t0}, {t1}]"
        )));
    }
    // dense local ids over the existing node set
    let mut local: HashMap<u32, u32> = HashMap::new();
    let mut order: Vec<u32> = existing_pairs
        .iter()
        .flat_map(|&(u, v)| [u, v])
        .collect();
    order.sort_unstable();
    order.dedup();
    for &g in &order {
        local.insert(g, local.len() as u32);
    }
    let mut edges: Vec<(u32, u32)> = existing_pairs
        .iter()
        .map(|&(u, v)| (local[&u], local[&v]))
        .collect();
    edges.sort_unstable();
    let mut existing = Graph::new(order.len(), edges)?;

    if largest_component {
        let keep = largest_component_nodes(&existing);
        if keep.len() < existing.n() {
            let global_keep: Vec<u32> = keep.iter().map(|&l| order[l as usize]).collect();
            let mut new_local: HashMap<u32, u32> = HashMap::new();
            for &g in &global_keep {
                new_local.insert(g, new_local.len() as u32);
            }
            let kept: HashSet<u32> = keep.iter().copied().collect();
            let old_edges: Vec<(u32, u32)> = existing
                .edges()
                .iter()
                .filter(|&&(u, v)| kept.contains(&u) && kept.contains(&v))
                .map(|&(u, v)| {
                    (
                        new_local[&order[u as usize]],
                        new_local[&order[v as usize]],
                    )
                })
                .collect();
            existing = Graph::new(global_keep.len(), old_edges)?;
            local = new_local;
        }
    }

    let linked: HashSet<(u32, u32)> = existing.edges().iter().copied().collect();

    // new edges: records in (T1, T2], deduplicated, minus existing links
    let mut new_pairs: HashSet<(u32, u32)> = HashSet::new();
    for &(t, u, v) in tel.records() {
        if t > t1 && t <= t2 {
            new_pairs.insert((u, v));
        }
    }
    let mut external = Vec::new();
    let mut internal = Vec::new();
    let mut new_new = 0;
    for (u, v) in new_pairs {
        match (local.get(&u), local.get(&v)) {
            (Some(&lu), Some(&lv)) => {
                let key = (lu.min(lv), lu.max(lv));
                if !linked.contains(&key) {
                    internal.push(key);
                }
            }
            (Some(&lu), None) => external.push(lu),
            (None, Some(&lv)) => external.push(lv),
            (None, None) => new_new += 1,
        }
    }
    external.sort_unstable();
    internal.sort_unstable();
    Ok(WindowSnapshot {
        existing,
        external_incidences: external,
        internal_edges: internal,
        new_new_edges: new_new,
        bounds: (t0, t1, t2),
    })
}

fn largest_component_nodes(g: &Graph) -> Vec<u32> {
    let adj = g.adjacency();
    let mut comp = vec![usize::MAX; g.n()];
    let mut best: (usize, usize) = (0, 0); // (size, component id)
    let mut next = 0;
    for start in 0..g.n() {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = next;
        next += 1;
        let mut stack = vec![start as u32];
        comp[start] = id;
        let mut size = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u as usize] {
                if comp[v as usize] == usize::MAX {
                    comp[v as usize] = id;
                    size += 1;
                    stack.push(v);
                }
            }
        }
        if size > best.0 {
            best = (size, id);
        }
    }
    (0..g.n() as u32)
        .filter(|&u| comp[u as usize] == best.1)
        .collect()
}

/// Which estimator a relative-probability table came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// Keys are existing-node degrees.
    External,
    /// Keys are degree products of unlinked existing pairs.
    Internal,
}

impl Kind {
    pub fn label(&self) -> &'static str {
        match self {
            Kind::External => "external",
            Kind::Internal => "internal",
        }
    }
}

/// One key of a relative-probability table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KeyStat {
    /// `(m_k / m) / (n_k / n)`
    pub r: f64,
    /// new-link count attributed to this key
    pub m: u64,
    /// unit population at this key (nodes, or unlinked pairs)
    pub n: u64,
}

/// One logarithmic bin: `{1}`, `{2}`, then `(2^{b-1}, 2^b]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinStat {
    pub lo: u64,
    pub hi: u64,
    pub r: f64,
    pub m: u64,
    pub n: u64,
}

/// Relative-probability estimates keyed by degree (external) or degree
/// product (internal), normalized so the unit-weighted mean is 1.
#[derive(Debug, Clone)]
pub struct RelProb {
    pub kind: Kind,
    pub per_key: BTreeMap<u64, KeyStat>,
    pub m_total: u64,
    pub n_total: u64,
    pub binned: BTreeMap<u32, BinStat>,
}

/// External estimator: `R_k = (m_k / m) / (n_k / n)` over existing-node
/// degrees. Returns `None` when no external edge was observed.
pub fn estimate_external(ws: &WindowSnapshot) -> Option<RelProb> {
    let m_total = ws.external_incidences.len() as u64;
    if m_total == 0 {
        return None;
    }
    let degrees = ws.existing.degrees();
    let n_total = ws.existing.n() as u64;
    let mut n_by_k: BTreeMap<u64, u64> = BTreeMap::new();
    for &d in &degrees {
        *n_by_k.entry(u64::from(d)).or_insert(0) += 1;
    }
    let mut m_by_k: BTreeMap<u64, u64> = BTreeMap::new();
    for &node in &ws.external_incidences {
        *m_by_k.entry(u64::from(degrees[node as usize])).or_insert(0) += 1;
    }
    let per_key = n_by_k
        .into_iter()
        .map(|(k, nk)| {
            let mk = m_by_k.get(&k).copied().unwrap_or(0);
            let r = (mk as f64 / m_total as f64) / (nk as f64 / n_total as f64);
            (k, KeyStat { r, m: mk, n: nk })
        })
        .collect();
    Some(RelProb {
        kind: Kind::External,
        per_key,
        m_total,
        n_total,
        binned: BTreeMap::new(),
    })
}

/// Internal estimator keyed by degree product `k1*k2` over unlinked
/// existing pairs. Pair populations come from the degree histogram
/// (`n_{k1} n_{k2}`, or `n_k (n_k - 1)/2` on the diagonal) minus the
/// linked pairs with those degrees. Returns `None` when there is no
/// unlinked pair or no internal edge.
pub fn estimate_internal(ws: &WindowSnapshot) -> Option<RelProb> {
    let g = &ws.existing;
    let n = g.n() as u64;
    let n_total = n * (n - 1) / 2 - g.edge_count() as u64;
    if n_total == 0 {
        return None;
    }
    let m_total = ws.internal_edges.len() as u64;
    if m_total == 0 {
        return None;
    }
    let degrees = g.degrees();
    let mut hist: BTreeMap<u64, u64> = BTreeMap::new();
    for &d in &degrees {
        *hist.entry(u64::from(d)).or_insert(0) += 1;
    }
    // linked pairs per unordered degree pair
    let mut linked: HashMap<(u64, u64), u64> = HashMap::new();
    for &(u, v) in g.edges() {
        let (a, b) = (
            u64::from(degrees[u as usize]),
            u64::from(degrees[v as usize]),
        );
        *linked.entry((a.min(b), a.max(b))).or_insert(0) += 1;
    }
    // population of unlinked pairs, aggregated by degree product
    let ks: Vec<(u64, u64)> = hist.into_iter().collect();
    let mut n_by_key: BTreeMap<u64, u64> = BTreeMap::new();
    for i in 0..ks.len() {
        for j in i..ks.len() {
            let (k1, c1) = ks[i];
            let (k2, c2) = ks[j];
            let pairs = if i == j { c1 * (c1 - 1) / 2 } else { c1 * c2 };
            let minus = linked.get(&(k1, k2)).copied().unwrap_or(0);
            let unlinked = pairs - minus;
            if unlinked > 0 {
                *n_by_key.entry(k1 * k2).or_insert(0) += unlinked;
            }
        }
    }
    let mut m_by_key: BTreeMap<u64, u64> = BTreeMap::new();
    for &(u, v) in &ws.internal_edges {
        let key = u64::from(degrees[u as usize]) * u64::from(degrees[v as usize]);
        *m_by_key.entry(key).or_insert(0) += 1;
    }
    let per_key = n_by_key
        .into_iter()
        .map(|(k, nk)| {
            let mk = m_by_key.get(&k).copied().unwrap_or(0);
            let r = (mk as f64 / m_total as f64) / (nk as f64 / n_total as f64);
            (k, KeyStat { r, m: mk, n: nk })
        })
        .collect();
    Some(RelProb {
        kind: Kind::Internal,
        per_key,
        m_total,
        n_total,
        binned: BTreeMap::new(),
    })
}

/// Index of the logarithmic bin containing `k`: bin 0 is `{1}`, bin b >= 1
/// covers `(2^{b-1}, 2^b]`.
pub fn bin_index(k: u64) -> u32 {
    assert!(k >= 1);
    if k == 1 {
        0
    } else {
        64 - (k - 1).leading_zeros()
    }
}

/// Populates the logarithmic bins: per bin,
/// `R = (sum m over bin / m) / (sum n over bin / n)`. Keys of value 0
/// (degree-0 nodes) are assigned to bin 0 alongside `{1}`.
pub fn log_bin(rp: &RelProb) -> RelProb {
    let mut binned: BTreeMap<u32, BinStat> = BTreeMap::new();
    for (&k, stat) in &rp.per_key {
        let b = bin_index(k.max(1));
        let (lo, hi) = if b == 0 {
            (1, 1)
        } else {
            ((1u64 << (b - 1)) + 1, 1u64 << b)
        };
        let entry = binned.entry(b).or_insert(BinStat {
            lo,
            hi,
            r: 0.0,
            m: 0,
            n: 0,
        });
        entry.m += stat.m;
        entry.n += stat.n;
    }
    for entry in binned.values_mut() {
        entry.r = (entry.m as f64 / rp.m_total as f64) / (entry.n as f64 / rp.n_total as f64);
    }
    RelProb {
        binned,
        ..rp.clone()
    }
}

/// Population variance of R across units (nodes or unlinked pairs),
/// restricted to keys at most `cutoff`. R values stay the global estimates;
/// only the unit population is restricted.
pub fn variance_r(rp: &RelProb, cutoff: Option<u64>) -> Result<f64> {
    let cut = cutoff.unwrap_or(u64::MAX);
    let mut units = 0u64;
    let mut sum = 0.0;
    for (&k, stat) in &rp.per_key {
        if k <= cut {
            units += stat.n;
            sum += stat.n as f64 * stat.r;
        }
    }
    if units == 0 {
        return Err(Error::Domain(format!(
            "no units at or below cutoff {cut}"
        )));
    }
    let mean = sum / units as f64;
    let mut var = 0.0;
    for (&k, stat) in &rp.per_key {
        if k <= cut {
            let diff = stat.r - mean;
            var += stat.n as f64 * diff * diff;
        }
    }
    Ok(var / units as f64)
}

/// Cumulative sums `S_K = sum_{k <= K} R_k` over the keys present,
/// in increasing key order.
pub fn partial_sums(rp: &RelProb) -> Vec<(u64, f64)> {
    let mut acc = 0.0;
    rp.per_key
        .iter()
        .map(|(&k, stat)| {
            acc += stat.r;
            (k, acc)
        })
        .collect()
}

/// Ordinary least squares fit with a two-sided t test on the slope.
#[derive(Debug, Clone, Copy)]
pub struct TrendResult {
    pub slope: f64,
    pub intercept: f64,
    pub std_err: f64,
    pub t_stat: f64,
    pub p_value: f64,
    pub series_len: usize,
    /// Residual variance is zero: the points lie exactly on the fitted line.
    pub exact_fit: bool,
}

/// Fits `value = intercept + slope * time` by OLS and tests the slope
/// against zero (t distribution with n-2 degrees of freedom).
pub fn fit_trend(series: &[(f64, f64)]) -> Result<TrendResult> {
    let n = series.len();
    if n < 3 {
        return Err(Error::Domain(format!(
            "trend fit needs at least 3 points, got {n}"
        )));
    }
    let nf = n as f64;
    let mean_x = series.iter().map(|p| p.0).sum::<f64>() / nf;
    let mean_y = series.iter().map(|p| p.1).sum::<f64>() / nf;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let mut syy = 0.0;
    for &(x, y) in series {
        sxx += (x - mean_x) * (x - mean_x);
        sxy += (x - mean_x) * (y - mean_y);
        syy += (y - mean_y) * (y - mean_y);
    }
    if sxx == 0.0 {
        return Err(Error::Domain("zero variance in time values".into()));
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let ssr = (syy - slope * sxy).max(0.0);
    let df = nf - 2.0;
    let exact_fit = ssr <= 1e-14 * syy.max(f64::MIN_POSITIVE);
    if exact_fit {
        let (t_stat, p_value) = if slope == 0.0 {
            (0.0, 1.0)
        } else {
            (f64::INFINITY, 0.0)
        };
        return Ok(TrendResult {
            slope,
            intercept,
            std_err: 0.0,
            t_stat,
            p_value,
            series_len: n,
            exact_fit,
        });
    }
    let std_err = (ssr / df / sxx).sqrt();
    let t_stat = slope / std_err;
    Ok(TrendResult {
        slope,
        intercept,
        std_err,
        t_stat,
        p_value: t_two_sided_p(t_stat, df),
        series_len: n,
        exact_fit,
    })
}

/// Sliding-window configuration. The existing interval is
/// `[T0, T0 + window_len - 1]` in inclusive time units, the new interval
/// the following `step` units; positions advance by `step`.
#[derive(Debug, Clone)]
pub struct SlidingConfig {
    pub window_len: i64,
    pub step: i64,
    pub external_cutoffs: Vec<Option<u64>>,
    pub internal_cutoffs: Vec<Option<u64>>,
    pub largest_component: bool,
}

impl Default for SlidingConfig {
    fn default() -> Self {
        Self {
            window_len: 5,
            step: 1,
            // the cutoff ladders used for the time-series comparison
            external_cutoffs: vec![None, Some(64), Some(16)],
            internal_cutoffs: vec![None, Some(8192), Some(512)],
            largest_component: true,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VarianceRow {
    pub window_start: i64,
    pub window_end: i64,
    pub cutoff: Option<u64>,
    pub kind: Kind,
    pub variance: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct TrendRow {
    pub kind: Kind,
    pub cutoff: Option<u64>,
    pub trend: TrendResult,
}

#[derive(Debug, Clone)]
pub struct SlidingReport {
    pub variances: Vec<VarianceRow>,
    pub trends: Vec<TrendRow>,
    pub window_positions: usize,
}

pub const VARIANCE_CSV_HEADER: &str = "window_start,window_end,cutoff,kind,variance";
pub const TREND_CSV_HEADER: &str = "kind,cutoff,slope,stderr,t,p";

pub fn cutoff_label(c: Option<u64>) -> String {
    match c {
        None => "none".to_string(),
        Some(v) => v.to_string(),
    }
}

impl VarianceRow {
    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.window_start,
            self.window_end,
            cutoff_label(self.cutoff),
            self.kind.label(),
            self.variance
        )
    }
}

impl TrendRow {
    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.kind.label(),
            cutoff_label(self.cutoff),
            self.trend.slope,
            self.trend.std_err,
            self.trend.t_stat,
            self.trend.p_value
        )
    }
}

/// Runs the estimators across sliding windows and fits a linear trend to
/// each (kind, cutoff) variance series. Windows failing a precondition
/// (no data, empty estimate, empty population under a cutoff) become gaps,
/// not errors. Window positions evaluate in parallel; output order is by
/// window start.
pub fn sliding_analysis(tel: &TemporalEdgeList, cfg: &SlidingConfig) -> Result<SlidingReport> {
    if cfg.window_len < 1 || cfg.step < 1 {
        return Err(Error::Domain("window and step must be positive".into()));
    }
    let span = tel.t_max() - tel.t_min() + 1;
    if span < cfg.window_len + cfg.step {
        return Err(Error::Domain(format!(
            "data span {span} shorter than window {} + step {}",
            cfg.window_len, cfg.step
        )));
    }
    let positions: Vec<i64> = {
        let mut v = Vec::new();
        let mut i = 0;
        loop {
            let t0 = tel.t_min() + i * cfg.step;
            if t0 + cfg.window_len + cfg.step - 1 > tel.t_max() {
                break;
            }
            v.push(t0);
            i += 1;
        }
        v
    };

    let per_window: Vec<Vec<VarianceRow>> = positions
        .par_iter()
        .map(|&t0| {
            let t1 = t0 + cfg.window_len - 1;
            let t2 = t1 + cfg.step;
            let mut rows = Vec::new();
            let Ok(ws) = snapshot(tel, t0, t1, t2, cfg.largest_component) else {
                return rows;
            };
            if let Some(rp) = estimate_external(&ws) {
                for &cut in &cfg.external_cutoffs {
                    if let Ok(v) = variance_r(&rp, cut) {
                        rows.push(VarianceRow {
                            window_start: t0,
                            window_end: t1,
                            cutoff: cut,
                            kind: Kind::External,
                            variance: v,
                        });
                    }
                }
            }
            if let Some(rp) = estimate_internal(&ws) {
                for &cut in &cfg.internal_cutoffs {
                    if let Ok(v) = variance_r(&rp, cut) {
                        rows.push(VarianceRow {
                            window_start: t0,
                            window_end: t1,
                            cutoff: cut,
                            kind: Kind::Internal,
                            variance: v,
                        });
                    }
                }
            }
            rows
        })
        .collect();

    let variances: Vec<VarianceRow> = per_window.into_iter().flatten().collect();

    let mut trends = Vec::new();
    for (kind, cutoffs) in [
        (Kind::External, &cfg.external_cutoffs),
        (Kind::Internal, &cfg.internal_cutoffs),
    ] {
        for &cut in cutoffs {
            let series: Vec<(f64, f64)> = variances
                .iter()
                .filter(|r| r.kind == kind && r.cutoff == cut)
                .map(|r| (r.window_start as f64, r.variance))
                .collect();
            if let Ok(trend) = fit_trend(&series) {
                trends.push(TrendRow { kind, cutoff: cut, trend });
            }
        }
    }

    Ok(SlidingReport {
        variances,
        trends,
        window_positions: positions.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tel(records: &[(i64, &str, &str)]) -> TemporalEdgeList {
        TemporalEdgeList::from_records(records.iter().map(|&(t, u, v)| (t, u, v))).unwrap()
    }

    /// Existing star S4 (hub h, leaves a b c), two new nodes attach to the hub.
    fn star_snapshot() -> WindowSnapshot {
        let t = tel(&[
            (1, "h", "a"),
            (1, "h", "b"),
            (2, "h", "c"),
            (3, "x", "h"),
            (3, "y", "h"),
        ]);
        snapshot(&t, 1, 2, 3, true).unwrap()
    }

    #[test]
    fn ingestion_collapses_duplicates_and_self_loops() {
        let t = tel(&[
            (1, "a", "b"),
            (1, "b", "a"),
            (1, "c", "c"),
            (2, "a", "b"),
        ]);
        assert_eq!(t.records().len(), 2); // (1,a,b) and (2,a,b)
        assert_eq!(t.duplicates_collapsed, 1);
        assert_eq!(t.self_loops_dropped, 1);
    }

    #[test]
    fn snapshot_classification_star() {
        let ws = star_snapshot();
        assert_eq!(ws.existing().n(), 4);
        assert_eq!(ws.external_count(), 2);
        assert_eq!(ws.internal_count(), 0);
        assert_eq!(ws.new_new_edges, 0);
    }

    #[test]
    fn snapshot_all_before_t1() {
        let t = tel(&[(1, "a", "b"), (2, "b", "c")]);
        let ws = snapshot(&t, 1, 2, 3, true).unwrap();
        assert_eq!(ws.external_count(), 0);
        assert_eq!(ws.internal_count(), 0);
    }

    #[test]
    fn snapshot_internal_path() {
        // path a-b-c existing, new edge a-c
        let t = tel(&[(1, "a", "b"), (1, "b", "c"), (2, "a", "c")]);
        let ws = snapshot(&t, 1, 1, 2, true).unwrap();
        assert_eq!(ws.internal_count(), 1);
        let rp = estimate_internal(&ws).unwrap();
        // degree pair (1,1): product 1, the only internal edge
        assert_eq!(rp.per_key[&1].m, 1);
        assert!((rp.per_key[&1].r - 1.0).abs() < 1e-12);
    }

    #[test]
    fn snapshot_empty_existing_is_error() {
        let t = tel(&[(5, "a", "b")]);
        assert!(snapshot(&t, 1, 2, 6, true).is_err());
    }

    #[test]
    fn external_estimator_star() {
        let rp = estimate_external(&star_snapshot()).unwrap();
        assert_eq!(rp.m_total, 2);
        assert_eq!(rp.n_total, 4);
        assert!((rp.per_key[&3].r - 4.0).abs() < 1e-12);
        assert!((rp.per_key[&1].r - 0.0).abs() < 1e-12);
        // node-weighted mean of R is 1
        let total: f64 = rp.per_key.values().map(|s| s.n as f64 * s.r).sum();
        assert!((total - rp.n_total as f64).abs() < 1e-12);
    }

    #[test]
    fn internal_estimator_identity_and_pair_counts() {
        // existing: path a-b-c-d plus new internal edges
        let t = tel(&[
            (1, "a", "b"),
            (1, "b", "c"),
            (2, "c", "d"),
            (3, "a", "d"),
            (3, "a", "c"),
        ]);
        let ws = snapshot(&t, 1, 2, 3, true).unwrap();
        let rp = estimate_internal(&ws).unwrap();
        let n = ws.existing().n() as u64;
        assert_eq!(
            rp.n_total,
            n * (n - 1) / 2 - ws.existing().edge_count() as u64
        );
        let pop: u64 = rp.per_key.values().map(|s| s.n).sum();
        assert_eq!(pop, rp.n_total);
        let total: f64 = rp.per_key.values().map(|s| s.n as f64 * s.r).sum();
        assert!((total - rp.n_total as f64).abs() < 1e-12);
    }

    #[test]
    fn internal_estimator_complete_graph_is_empty_signal() {
        let t = tel(&[
            (1, "a", "b"),
            (1, "b", "c"),
            (1, "a", "c"),
            (2, "a", "d"),
        ]);
        let ws = snapshot(&t, 1, 1, 2, true).unwrap();
        assert!(estimate_internal(&ws).is_none());
    }

    #[test]
    fn bin_boundaries() {
        assert_eq!(bin_index(1), 0);
        assert_eq!(bin_index(2), 1);
        assert_eq!(bin_index(3), 2);
        assert_eq!(bin_index(4), 2);
        assert_eq!(bin_index(5), 3);
        assert_eq!(bin_index(8), 3);
        assert_eq!(bin_index(9), 4);
    }

    #[test]
    fn binning_preserves_totals() {
        let rp = estimate_external(&star_snapshot()).unwrap();
        let binned = log_bin(&rp);
        let m: u64 = binned.binned.values().map(|b| b.m).sum();
        let n: u64 = binned.binned.values().map(|b| b.n).sum();
        assert_eq!(m, rp.m_total);
        assert_eq!(n, rp.per_key.values().map(|s| s.n).sum::<u64>());
    }

    #[test]
    fn variance_examples() {
        let rp = estimate_external(&star_snapshot()).unwrap();
        // units {4, 0, 0, 0}: mean 1, variance 3
        let v = variance_r(&rp, None).unwrap();
        assert!((v - 3.0).abs() < 1e-12);
        // cutoff below the hub degree drops it from the calculation
        let v = variance_r(&rp, Some(2)).unwrap();
        assert!((v - 0.0).abs() < 1e-12);
        assert!(variance_r(&rp, Some(0)).is_err());
    }

    #[test]
    fn partial_sums_nondecreasing() {
        let rp = estimate_external(&star_snapshot()).unwrap();
        let sums = partial_sums(&rp);
        for w in sums.windows(2) {
            assert!(w[0].1 <= w[1].1);
        }
        assert!((sums.last().unwrap().1 - 4.0).abs() < 1e-12);
    }

    #[test]
    fn fit_trend_examples() {
        let t = fit_trend(&[(0.0, 0.0), (1.0, 1.0), (2.0, 2.0)]).unwrap();
        assert!((t.slope - 1.0).abs() < 1e-12);
        assert!(t.exact_fit);
        assert_eq!(t.p_value, 0.0);

        let t = fit_trend(&[(0.0, 1.0), (1.0, 1.0), (2.0, 1.0)]).unwrap();
        assert_eq!(t.slope, 0.0);
        assert_eq!(t.p_value, 1.0);

        assert!(fit_trend(&[(0.0, 1.0), (1.0, 2.0)]).is_err());
        assert!(fit_trend(&[(1.0, 1.0), (1.0, 2.0), (1.0, 3.0)]).is_err());
    }

    #[test]
    fn fit_trend_textbook_five_points() {
        // y = 2 + 0.7 x + noise; slope, t and p evaluated by hand via the
        // normal equations
        let pts = [(1.0, 2.8), (2.0, 3.2), (3.0, 4.5), (4.0, 4.9), (5.0, 5.6)];
        let t = fit_trend(&pts).unwrap();
        let mean_x = 3.0;
        let mean_y = pts.iter().map(|p| p.1).sum::<f64>() / 5.0;
        let sxx: f64 = pts.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
        let sxy: f64 = pts
            .iter()
            .map(|p| (p.0 - mean_x) * (p.1 - mean_y))
            .sum();
        let slope = sxy / sxx;
        assert!((t.slope - slope).abs() < 1e-12);
        let ssr: f64 = pts
            .iter()
            .map(|p| (p.1 - (mean_y - slope * mean_x) - slope * p.0).powi(2))
            .sum();
        let se = (ssr / 3.0 / sxx).sqrt();
        assert!((t.std_err - se).abs() < 1e-9);
        assert!((t.t_stat - slope / se).abs() < 1e-9);
    }

    #[test]
    fn sliding_window_count() {
        // 25 time units, window 5, step 1: 20 positions
        let mut records = Vec::new();
        for t in 1..=25i64 {
            records.push((t, format!("a{t}"), format!("b{t}")));
            records.push((t, format!("a{t}"), format!("c{}", t.max(1))));
            // keep a growing connected blob so snapshots have data
            records.push((t, "hub".to_string(), format!("a{t}")));
            records.push((t, "hub".to_string(), format!("n{t}")));
        }
        let tel = TemporalEdgeList::from_records(records).unwrap();
        let report = sliding_analysis(&tel, &SlidingConfig::default()).unwrap();
        assert_eq!(report.window_positions, 20);
    }
}
