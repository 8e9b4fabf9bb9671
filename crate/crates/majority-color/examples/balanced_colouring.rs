//! Local search on an undirected graph: recolour until no vertex has
//! more than deg(v)/k same-coloured neighbours. The monochromatic edge
//! count strictly decreases, so termination is guaranteed. Applied to an
//! Eulerian digraph this yields a majority colouring.
//!
//!     cargo run --example balanced_colouring

use majority_color::colouring::{
    eulerian_colouring, lovasz_balanced_colouring_traced, verify_majority, MajoritySpec,
};
use majority_color::digraph::{gen_cycle_power, gen_random_digraph, underlying_undirected};

fn main() {
    let g = gen_random_digraph(80, 0.15, 11).unwrap();
    let u = underlying_undirected(&g);
    let (c, history) = lovasz_balanced_colouring_traced(&u, 3, None, 11).unwrap();
    println!(
        "undirected n={} m={}: monochromatic edges {:?} -> done, {} colours",
        u.vertex_count(),
        u.edge_count(),
        history,
        c.distinct_colours_used()
    );

    // Eulerian: in-degree = out-degree everywhere, so 4 balanced colours
    // on the underlying graph give a majority colouring of the digraph
    let e = gen_cycle_power(60, 5).unwrap();
    let c = eulerian_colouring(&e, 4).unwrap();
    let report = verify_majority(&e, &c, &MajoritySpec::majority(4)).unwrap();
    println!(
        "Eulerian cycle_power(60, 5): majority 4-colouring valid={}",
        report.valid
    );
}
