//! Property-based invariants over arbitrary digraphs.

use proptest::prelude::*;

use majority_color::colouring::{
    majority_product_colouring, verify_majority, Colouring, MajoritySpec,
};
use majority_color::digraph::Digraph;
use majority_color::stable::verify_stable;
use majority_color::Frac;

/// Arbitrary digraph on up to `max_n` vertices.
fn arb_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        proptest::sample::subsequence(pairs, 0..=n * (n - 1))
            .prop_map(move |arcs| Digraph::from_arcs(n, &arcs).unwrap())
    })
}

proptest! {
    #[test]
    fn digraph_serialize_parse_roundtrip(g in arb_digraph(30)) {
        let parsed = Digraph::parse(&g.serialize()).unwrap();
        prop_assert_eq!(parsed.serialize(), g.serialize());
    }

    #[test]
    fn colouring_serialize_parse_roundtrip(
        colours in proptest::collection::vec(0usize..4, 1..50)
    ) {
        let c = Colouring::new(colours, 4).unwrap();
        let parsed = Colouring::parse(&c.serialize()).unwrap();
        prop_assert_eq!(parsed.colours(), c.colours());
        prop_assert_eq!(parsed.num_colours(), 4);
    }

    #[test]
    fn product_colouring_always_valid(g in arb_digraph(40), k in 2usize..=4) {
        let c = majority_product_colouring(&g, k).unwrap();
        let spec = MajoritySpec::new(k * k, Frac::new(1, k as u64)).unwrap();
        prop_assert!(verify_majority(&g, &c, &spec).unwrap().valid);
    }

    #[test]
    fn stability_is_downward_closed(g in arb_digraph(20), mask in any::<u32>()) {
        // colour classes of a majority colouring are stable, and any
        // subset of a stable set stays stable
        let c = majority_product_colouring(&g, 2).unwrap();
        let half = Frac::new(1, 2);
        for class in c.colour_classes() {
            prop_assert!(verify_stable(&g, &class, half).unwrap().valid);
            let sub: Vec<usize> = class
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> (i % 32) & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            prop_assert!(verify_stable(&g, &sub, half).unwrap().valid);
        }
    }
}
