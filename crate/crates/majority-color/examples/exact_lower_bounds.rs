//! Exact backtracking: minimum colour counts for directed cycles, the
//! cycle-power lower bound, and the non-hereditarity example.
//!
//!     cargo run --example exact_lower_bounds

use majority_color::digraph::{gen_cycle_power, Digraph};
use majority_color::exact::{
    exists_beta_colouring, min_majority_colours, MinColoursOutcome, SearchOutcome,
    DEFAULT_SEARCH_BUDGET,
};
use majority_color::Frac;

fn main() {
    let beta = Frac::new(1, 2);

    for n in [4, 5, 6, 7, 9] {
        let g = gen_cycle_power(n, 1).unwrap();
        match min_majority_colours(&g, 4, beta, DEFAULT_SEARCH_BUDGET).unwrap() {
            MinColoursOutcome::Found { k, .. } => println!("C_{n}: minimum {k} colours"),
            other => println!("C_{n}: {other:?}"),
        }
    }

    // third power of C_11: 2 colours impossible, 3 possible
    let g = gen_cycle_power(11, 3).unwrap();
    for k in [2, 3] {
        let outcome = exists_beta_colouring(&g, k, beta, DEFAULT_SEARCH_BUDGET).unwrap();
        let verdict = match outcome {
            SearchOutcome::Witness(_) => "YES",
            SearchOutcome::None => "NO",
            SearchOutcome::BudgetExceeded => "UNKNOWN",
        };
        println!("cycle_power(11, 3) with {k} colours: {verdict}");
    }

    // having a majority 2-colouring is not closed under subgraphs
    let g = Digraph::from_arcs(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
    let triangle = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
    let whole = exists_beta_colouring(&g, 2, beta, DEFAULT_SEARCH_BUDGET).unwrap();
    let sub = exists_beta_colouring(&triangle, 2, beta, DEFAULT_SEARCH_BUDGET).unwrap();
    println!(
        "4-vertex digraph 2-colourable: {}; its triangle: {}",
        whole.witness().is_some(),
        sub.witness().is_some()
    );
}
