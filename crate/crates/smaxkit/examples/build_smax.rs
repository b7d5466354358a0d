//! Construct the near-s-maximal realization of a degree sequence and
//! compare it against the exhaustive oracle where that is feasible.

use smaxkit::extremal::exact_extrema;
use smaxkit::metrics::s_metric;
use smaxkit::{bcd, DegreeSequence};

fn main() {
    for degrees in [
        vec![3, 1, 1, 1],
        vec![2, 2, 2, 2],
        vec![2, 2, 2, 1, 1],
        vec![4, 3, 3, 2, 2, 2],
    ] {
        let d = DegreeSequence::new(degrees.clone()).unwrap();
        let g = bcd(&d).unwrap();
        let s = s_metric(&g);
        print!("D = {degrees:?}: s(g') = {s}");
        if let Ok(ex) = exact_extrema(&d, false) {
            print!(
                "  (oracle: s_min = {}, s_max = {}, {} realizations)",
                ex.s_min, ex.s_max, ex.realizations
            );
        }
        println!();
        for (u, v) in g.edges() {
            println!("  {} -- {}", u + 1, v + 1);
        }
    }
}
