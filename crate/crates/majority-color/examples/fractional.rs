//! The fractional relaxation: minimum total weight of a cover by stable
//! sets, solved exactly. The 5-cycle comes out strictly below 3.
//!
//!     cargo run --example fractional

use majority_color::digraph::{gen_cycle_power, Digraph};
use majority_color::exact::fractional_majority_number;

fn main() {
    let cases = [
        ("triangle", gen_cycle_power(3, 1).unwrap()),
        ("C_5", gen_cycle_power(5, 1).unwrap()),
        ("edgeless K̄_6", Digraph::from_arcs(6, &[]).unwrap()),
        ("cycle_power(7, 2)", gen_cycle_power(7, 2).unwrap()),
    ];
    for (name, g) in cases {
        let sol = fractional_majority_number(&g, 16).unwrap();
        println!("{name}: {}/{}", sol.objective.numer(), sol.objective.denom());
    }

    println!("\nwitness weights for C_5:");
    print!("{}", fractional_majority_number(&gen_cycle_power(5, 1).unwrap(), 16).unwrap().render());
}
