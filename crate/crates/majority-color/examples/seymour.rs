//! 3-colour a digraph so every vertex with out-neighbours has one of a
//! different colour; even directed cycles need only 2 colours.
//!
//!     cargo run --example seymour

use majority_color::colouring::seymour_3colouring;
use majority_color::digraph::{gen_cycle_power, gen_tournament};

fn main() {
    for n in [4, 5, 6, 7] {
        let g = gen_cycle_power(n, 1).unwrap();
        let c = seymour_3colouring(&g).unwrap();
        println!(
            "C_{n}: {} colours, classes {:?}",
            c.distinct_colours_used(),
            c.colours()
        );
    }

    let g = gen_tournament(12, 3).unwrap();
    let c = seymour_3colouring(&g).unwrap();
    let ok = (0..g.vertex_count()).all(|v| {
        g.out_degree(v) == 0
            || g.out_neighbours(v).iter().any(|&u| c.colour(u) != c.colour(v))
    });
    println!(
        "random tournament n=12: {} colours, every non-sink has a differing out-neighbour: {ok}",
        c.distinct_colours_used()
    );
}
