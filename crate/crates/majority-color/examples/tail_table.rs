//! The certified probabilistic ingredients: the degree threshold δ = 129
//! and the exact binomial tail table for degrees 22..=128.
//!
//!     cargo run --example tail_table

use majority_color::prob::{
    chernoff_bound, delta_threshold, indset_tail_verification, tail_table_csv,
};
use majority_color::Frac;

fn main() {
    let delta = delta_threshold(Frac::new(1, 3), Frac::new(19, 50), Frac::new(1, 2)).unwrap();
    println!("delta_threshold(1/3, 19/50, 1/2) = {delta}");
    println!(
        "chernoff_bound(129, 0.38, 0.5) = {:.6} (needs ≤ 7/57 ≈ {:.6})",
        chernoff_bound(129, 0.38, 0.5).unwrap(),
        7.0 / 57.0
    );

    let rows = indset_tail_verification();
    println!(
        "\nexact tails: {} rows, all pass: {}",
        rows.len(),
        rows.iter().all(|r| r.pass)
    );
    // the full CSV, exact fractions only
    print!("{}", tail_table_csv(&rows));
}
