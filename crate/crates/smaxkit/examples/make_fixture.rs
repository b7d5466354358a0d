//! Regenerates the bundled temporal fixture (data/synthetic_collab.csv).
//! Prints the CSV to stdout; redirect to the data file to refresh it.
//!
//! The network grows for 25 years under linear preferential attachment:
//! every year ~60 new nodes each link to one or two existing nodes picked
//! with probability proportional to degree, and ~15 internal edges appear
//! between unlinked existing pairs picked proportionally to the degree
//! product. Entirely synthetic; parameters are recorded in the header.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

const YEARS: i64 = 25;
const NEW_NODES_PER_YEAR: usize = 60;
const INTERNAL_PER_YEAR: usize = 15;
const SEED: u64 = 42;

fn pick_weighted(rng: &mut ChaCha8Rng, deg: &[u32]) -> usize {
    let total: u64 = deg.iter().map(|&d| u64::from(d)).sum();
    let mut r = rng.gen_range(0..total);
    for (i, &d) in deg.iter().enumerate() {
        let d = u64::from(d);
        if r < d {
            return i;
        }
        r -= d;
    }
    deg.len() - 1
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut deg: Vec<u32> = Vec::new();
    let mut linked: HashSet<(usize, usize)> = HashSet::new();
    let mut records: Vec<(i64, usize, usize)> = Vec::new();

    let add_edge = |t: i64,
                        u: usize,
                        v: usize,
                        deg: &mut Vec<u32>,
                        linked: &mut HashSet<(usize, usize)>,
                        records: &mut Vec<(i64, usize, usize)>|
     -> bool {
        let key = (u.min(v), u.max(v));
        if u == v || !linked.insert(key) {
            return false;
        }
        deg[u] += 1;
        deg[v] += 1;
        records.push((t, u, v));
        true
    };

    // year-1 seed: a path of 8 founders
    for _ in 0..8 {
        deg.push(0);
    }
    for i in 0..7 {
        add_edge(1, i, i + 1, &mut deg, &mut linked, &mut records);
    }

    for t in 1..=YEARS {
        for _ in 0..NEW_NODES_PER_YEAR {
            let links = if rng.gen_bool(0.25) { 2 } else { 1 };
            let existing = deg.len();
            deg.push(0);
            let new_id = deg.len() - 1;
            for _ in 0..links {
                for _attempt in 0..20 {
                    let target = pick_weighted(&mut rng, &deg[..existing]);
                    if add_edge(t, new_id, target, &mut deg, &mut linked, &mut records) {
                        break;
                    }
                }
            }
        }
        let mut placed = 0;
        let mut attempts = 0;
        while placed < INTERNAL_PER_YEAR && attempts < 10_000 {
            attempts += 1;
            let u = pick_weighted(&mut rng, &deg);
            let v = pick_weighted(&mut rng, &deg);
            if add_edge(t, u, v, &mut deg, &mut linked, &mut records) {
                placed += 1;
            }
        }
    }

    println!("# synthetic collaboration-style temporal network");
    println!(
        "# linear preferential attachment; years={YEARS}, new nodes/year={NEW_NODES_PER_YEAR}, \
         internal edges/year={INTERNAL_PER_YEAR}, seed={SEED}"
    );
    println!("t,u,v");
    for (t, u, v) in records {
        println!("{t},a{u},a{v}");
    }
}
