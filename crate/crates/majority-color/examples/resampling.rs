//! Resampling 3-colourer: check the local-lemma hypothesis on a dense
//! cycle power, then actually 3-colour it by resampling.
//!
//!     cargo run --release --example resampling

use majority_color::colouring::{lll_resample_3colouring, verify_majority, MajoritySpec};
use majority_color::digraph::gen_cycle_power;
use majority_color::prob::lll_hypothesis_check;

fn main() {
    let g = gen_cycle_power(5001, 1200).unwrap();
    let report = lll_hypothesis_check(&g).unwrap();
    println!(
        "delta={} max_in={} in-degree bound={:.1} hypothesis satisfied={}",
        report.delta,
        report.max_in,
        report.in_degree_bound,
        report.hypothesis_satisfied()
    );

    let (c, log) = lll_resample_3colouring(&g, 1_000_000, 1).unwrap();
    println!(
        "resampling: success={} rounds={} vertices resampled={}",
        log.success, log.rounds, log.resampled_vertices
    );
    if let Some(c) = c {
        let check = verify_majority(&g, &c, &MajoritySpec::majority(3)).unwrap();
        println!("verified majority 3-colouring: {}", check.valid);
    }
}
