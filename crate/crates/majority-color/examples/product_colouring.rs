//! Colour a random digraph with the two-pass product construction and
//! verify the majority condition.
//!
//!     cargo run --example product_colouring

use majority_color::colouring::{majority_product_colouring, verify_majority, MajoritySpec};
use majority_color::digraph::gen_random_digraph;

fn main() {
    let g = gen_random_digraph(200, 0.2, 42).unwrap();
    println!("digraph: n={} m={}", g.vertex_count(), g.arc_count());

    // k = 2 yields a majority 4-colouring of any digraph
    let c = majority_product_colouring(&g, 2).unwrap();
    let report = verify_majority(&g, &c, &MajoritySpec::majority(4)).unwrap();
    println!(
        "4-colouring: valid={} max matches={}",
        report.valid,
        report.same_colour_counts.iter().max().unwrap()
    );

    // k = 3 yields ≤ 9 colours with at most ⌊d_v/3⌋ matches per vertex
    let c = majority_product_colouring(&g, 3).unwrap();
    let spec = MajoritySpec::new(9, majority_color::Frac::new(1, 3)).unwrap();
    let report = verify_majority(&g, &c, &spec).unwrap();
    println!(
        "9-colouring (1/3 condition): valid={} colours used={}",
        report.valid,
        c.distinct_colours_used()
    );
}
