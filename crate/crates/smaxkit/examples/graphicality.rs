//! Run the three graphicality tests side by side on a few sequences.

use smaxkit::degseq::{build_phi, revcdf, tripathi_vijay};
use smaxkit::{erdos_gallai_verdict, is_graphical_phi, DegreeSequence, GraphicalityVerdict};

fn main() {
    let cases: &[&[u32]] = &[
        &[2, 2, 2],
        &[3, 1, 1, 1],
        &[3, 3, 1, 1],
        &[3, 1, 1],
        &[4, 4, 1, 1],
        &[5, 5, 4, 4, 2, 2],
    ];
    for degrees in cases {
        let d = DegreeSequence::new(degrees.to_vec()).unwrap();
        let eg = erdos_gallai_verdict(&d);
        let h = revcdf(&d).unwrap();
        let tv = tripathi_vijay(&h, d.total());
        let phi = build_phi(&h);
        let phi_ok = is_graphical_phi(&phi, d.total());
        println!("D = {degrees:?}");
        match eg {
            GraphicalityVerdict::Graphical => println!("  erdos-gallai : graphical"),
            GraphicalityVerdict::OddSum => println!("  erdos-gallai : odd degree sum"),
            GraphicalityVerdict::Violation { k } => {
                println!("  erdos-gallai : violated at k={k}")
            }
        }
        println!("  tripathi-vijay: {tv}");
        println!("  phi vector    : {:?} -> {phi_ok}", phi.phi());
    }
}
