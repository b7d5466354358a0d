//! A small version of the CV-vs-gamma sweep: generate trees across a grid
//! of attachment exponents and print per-tree statistics plus the per-cell
//! mean coefficient of variation. The trend — CV grows with gamma — is the
//! point of the exercise.

use smaxkit::bagen::{sweep, SweepRow};

fn main() {
    let sizes = [256];
    let gammas = [-2.0, 0.0, 1.0, 2.0];
    let samples = 30;
    let rows = sweep(&sizes, &gammas, samples, 20260823).unwrap();

    println!("{}", SweepRow::CSV_HEADER);
    for row in &rows {
        println!("{}", row.to_csv_row());
    }

    eprintln!();
    for &gamma in &gammas {
        let cvs: Vec<f64> = rows
            .iter()
            .filter(|r| r.gamma == gamma)
            .map(|r| r.cv)
            .collect();
        let mean = cvs.iter().sum::<f64>() / cvs.len() as f64;
        eprintln!("gamma = {gamma:5}: mean CV = {mean:.4}");
    }
}
