//! Compare the closed-form star probability against Monte Carlo frequency
//! for small trees across several attachment exponents.

use smaxkit::bagen::{generate_ba_tree, star_probability, BAConfig};

fn main() {
    let n = 8;
    let trials = 20_000u64;
    println!("n = {n}, {trials} trials per gamma");
    for gamma in [1.0, 2.0, 3.0, 4.0] {
        let mut stars = 0;
        for seed in 0..trials {
            let g = generate_ba_tree(&BAConfig { n, gamma, seed });
            if g.degrees().iter().any(|&d| d as usize == n - 1) {
                stars += 1;
            }
        }
        let freq = stars as f64 / trials as f64;
        let p = star_probability(n, gamma);
        println!("gamma = {gamma}: closed form {p:.5}, observed {freq:.5}");
    }
}
