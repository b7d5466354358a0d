//! Full s-metric report for a handful of small graphs.

use smaxkit::metrics::SMetricReport;
use smaxkit::{s_report, Graph};

fn star(n: usize) -> Graph {
    Graph::new(n, (1..n as u32).map(|i| (0, i)).collect()).unwrap()
}

fn path(n: usize) -> Graph {
    Graph::new(n, (0..n as u32 - 1).map(|i| (i, i + 1)).collect()).unwrap()
}

fn cycle(n: usize) -> Graph {
    let mut e: Vec<(u32, u32)> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
    e.push((0, n as u32 - 1));
    Graph::new(n, e).unwrap()
}

fn main() {
    println!("{}", SMetricReport::CSV_HEADER);
    for g in [star(8), path(8), cycle(8)] {
        println!("{}", s_report(&g).unwrap().to_csv_row());
    }
}
