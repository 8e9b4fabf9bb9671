//! Randomized stable-set extraction in the δ ≥ 22 regime, plus
//! exhaustive enumeration on a small digraph.
//!
//!     cargo run --example stable_sets

use majority_color::digraph::{gen_cycle_power, gen_random_out_regular};
use majority_color::stable::{
    enumerate_stable_sets, stable_third, stable_third_guarantee, verify_stable,
};
use majority_color::Frac;

fn main() {
    let g = gen_random_out_regular(300, 22, 7).unwrap();
    println!(
        "out-regular n=300 d=22, theorem guarantee applies: {}",
        stable_third_guarantee(&g)
    );
    let r = stable_third(&g, 50, 7).unwrap();
    let check = verify_stable(&g, &r.t, Frac::new(1, 2)).unwrap();
    println!(
        "extracted |T|={} (target 100) in {} tries, verified: {}",
        r.t.len(),
        r.tries_used,
        check.valid
    );

    let small = gen_cycle_power(7, 2).unwrap();
    let sets = enumerate_stable_sets(&small, Frac::new(1, 2), 20).unwrap();
    println!("cycle_power(7, 2): {} maximal stable sets", sets.len());
    for set in sets.iter().take(5) {
        println!("  {set:?}");
    }
}
