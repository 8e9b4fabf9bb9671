//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`). Criterion 14 is
//! long-running and ignored by default; run it with `--ignored`.

use std::time::Instant;

use num::rational::BigRational;
use num::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use majority_color::colouring::{
    lll_resample_3colouring, lovasz_balanced_colouring_traced, majority_product_colouring,
    random_3colouring_retry, seymour_3colouring, verify_majority, Colouring, MajoritySpec,
};
use majority_color::digraph::{
    gen_cycle_power, gen_random_digraph, gen_random_out_regular, gen_subset_blowup,
    gen_tournament, strong_components, underlying_undirected, Digraph,
};
use majority_color::exact::{
    brute_force_all_colourings, exists_beta_colouring, fractional_majority_number,
    min_majority_colours, MinColoursOutcome, SearchOutcome, DEFAULT_SEARCH_BUDGET,
};
use majority_color::prob::{
    chernoff_bound, delta_threshold, indset_tail_verification, lll_hypothesis_check,
};
use majority_color::rng::rng_for;
use majority_color::stable::{stable_third, verify_stable};
use majority_color::Frac;

/// Runtime budgets assume an optimized build; give unoptimized test runs
/// generous slack so `cargo test` still gates correctness.
fn budget(secs: f64) -> f64 {
    if cfg!(debug_assertions) {
        secs * 20.0
    } else {
        secs
    }
}

fn report(id: u32, name: &str, ok: bool) {
    println!(
        "criterion {id:02} {name}: {}",
        if ok { "pass" } else { "FAIL" }
    );
    assert!(ok, "criterion {id:02} ({name}) failed");
}

/// 500 seeded random digraphs (n ≤ 200, arc probabilities 0.05/0.2/0.5)
/// plus instances from every generator family.
fn corpus() -> Vec<Digraph> {
    let mut graphs = Vec::new();
    let probs = [0.05, 0.2, 0.5];
    for i in 0..500u64 {
        let n = 1 + (i as usize * 37) % 200;
        let p = probs[i as usize % probs.len()];
        graphs.push(gen_random_digraph(n, p, i).unwrap());
    }
    for (n, k) in [(5, 1), (7, 1), (11, 3), (24, 4), (50, 7)] {
        graphs.push(gen_cycle_power(n, k).unwrap());
    }
    for seed in 0..5 {
        graphs.push(gen_tournament(25, seed).unwrap());
        graphs.push(gen_random_out_regular(60, 7, seed).unwrap());
    }
    let base = gen_cycle_power(4, 1).unwrap();
    graphs.push(gen_subset_blowup(&base, 3).unwrap());
    graphs
}

#[test]
fn criterion_01_product_colouring_majority_4() {
    let start = Instant::now();
    let spec = MajoritySpec::majority(4);
    let ok = corpus().iter().all(|g| {
        let c = majority_product_colouring(g, 2).unwrap();
        c.num_colours() <= 4 && verify_majority(g, &c, &spec).unwrap().valid
    });
    report(1, "product colouring is a majority 4-colouring", ok);
    assert!(start.elapsed().as_secs_f64() < budget(10.0), "criterion 01 over budget");
}

#[test]
fn criterion_02_product_colouring_k_squared() {
    let spec = MajoritySpec::new(9, Frac::new(1, 3)).unwrap();
    let ok = corpus().iter().all(|g| {
        let c = majority_product_colouring(g, 3).unwrap();
        // valid ⇔ every vertex has ≤ ⌊d_v/3⌋ same-coloured out-neighbours
        c.num_colours() <= 9 && verify_majority(g, &c, &spec).unwrap().valid
    });
    report(2, "k=3 product colouring: ≤9 colours, ≤⌊d/3⌋ matches", ok);
}

#[test]
fn criterion_03_cycle_lower_bounds() {
    let start = Instant::now();
    let beta = Frac::new(1, 2);
    let mins: Vec<(usize, usize)> = [(5, 3), (7, 3), (9, 3), (4, 2), (6, 2)].into();
    let mut ok = mins.iter().all(|&(n, want)| {
        let g = gen_cycle_power(n, 1).unwrap();
        matches!(
            min_majority_colours(&g, 4, beta, DEFAULT_SEARCH_BUDGET).unwrap(),
            MinColoursOutcome::Found { k, .. } if k == want
        )
    });
    let g = gen_cycle_power(11, 3).unwrap();
    ok &= matches!(
        exists_beta_colouring(&g, 2, beta, DEFAULT_SEARCH_BUDGET).unwrap(),
        SearchOutcome::None
    );
    ok &= matches!(
        exists_beta_colouring(&g, 3, beta, DEFAULT_SEARCH_BUDGET).unwrap(),
        SearchOutcome::Witness(_)
    );
    report(3, "exact cycle and cycle-power minimums", ok);
    assert!(start.elapsed().as_secs_f64() < budget(5.0), "criterion 03 over budget");
}

#[test]
fn criterion_04_non_hereditarity() {
    let beta = Frac::new(1, 2);
    let g = Digraph::from_arcs(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
    let triangle = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
    let whole = matches!(
        exists_beta_colouring(&g, 2, beta, DEFAULT_SEARCH_BUDGET).unwrap(),
        SearchOutcome::Witness(_)
    );
    let sub = matches!(
        exists_beta_colouring(&triangle, 2, beta, DEFAULT_SEARCH_BUDGET).unwrap(),
        SearchOutcome::None
    );
    report(4, "2-colourable digraph with non-2-colourable subgraph", whole && sub);
}

#[test]
fn criterion_05_delta_threshold() {
    let delta = delta_threshold(Frac::new(1, 3), Frac::new(19, 50), Frac::new(1, 2)).unwrap();
    report(5, "degree threshold is exactly 129", delta == 129);
}

#[test]
fn criterion_06_tail_table() {
    let start = Instant::now();
    let rows = indset_tail_verification();
    let mut ok = rows.len() == 107 && rows.iter().all(|r| r.pass);
    let bound = BigRational::new(BigInt::from(7), BigInt::from(57));
    let chernoff = chernoff_bound(129, 0.38, 0.5).unwrap();
    ok &= BigRational::from_float(chernoff).unwrap() <= bound;
    report(6, "all 107 exact tail rows ≤ 7/57 and Chernoff at 129", ok);
    assert!(start.elapsed().as_secs_f64() < budget(2.0), "criterion 06 over budget");
}

#[test]
fn criterion_07_stable_third_at_degree_22() {
    let start = Instant::now();
    let ok = (0..100u64).all(|seed| {
        let g = gen_random_out_regular(300, 22, seed).unwrap();
        let r = stable_third(&g, 50, seed).unwrap();
        r.success
            && r.t.len() >= 100
            && verify_stable(&g, &r.t, Frac::new(1, 2)).unwrap().valid
    });
    report(7, "stable third extracted on 100 out-regular instances", ok);
    assert!(start.elapsed().as_secs_f64() < budget(30.0), "criterion 07 over budget");
}

#[test]
fn criterion_08_random_retry_high_degree() {
    let start = Instant::now();
    let successes = (0..20u64)
        .filter(|&seed| {
            let g = gen_random_out_regular(1000, 600, seed).unwrap();
            random_3colouring_retry(&g, 5, seed).unwrap().colouring.is_some()
        })
        .count();
    report(8, "random 3-colouring retry in the d > 72·ln(3n) regime", successes >= 19);
    assert!(start.elapsed().as_secs_f64() < budget(60.0), "criterion 08 over budget");
}

#[test]
fn criterion_09_fractional_values() {
    let frac = |num: i64, den: i64| BigRational::new(BigInt::from(num), BigInt::from(den));
    let triangle = gen_cycle_power(3, 1).unwrap();
    let five = gen_cycle_power(5, 1).unwrap();
    let edgeless = Digraph::from_arcs(6, &[]).unwrap();
    let ok = fractional_majority_number(&triangle, 16).unwrap().objective == frac(3, 1)
        && fractional_majority_number(&five, 16).unwrap().objective == frac(5, 2)
        && fractional_majority_number(&edgeless, 16).unwrap().objective == frac(1, 1);
    report(9, "fractional values 3, 5/2, 1 as exact rationals", ok);
}

/// All tournaments on n vertices, one per orientation bitmask.
fn all_tournaments(n: usize) -> Vec<Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    (0..(1u32 << pairs.len()))
        .map(|mask| {
            let arcs: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .map(|(i, &(u, v))| if mask >> i & 1 == 0 { (u, v) } else { (v, u) })
                .collect();
            Digraph::from_arcs(n, &arcs).unwrap()
        })
        .collect()
}

#[test]
fn criterion_10_oracle_equivalence() {
    let start = Instant::now();
    let mut graphs = Vec::new();
    for n in 1..=4 {
        graphs.extend(all_tournaments(n));
    }
    for seed in 0..200u64 {
        let n = 1 + (seed as usize % 5);
        let p = [0.2, 0.5, 0.8][seed as usize % 3];
        graphs.push(gen_random_digraph(n, p, 1000 + seed).unwrap());
    }
    let betas = [Frac::new(1, 2), Frac::new(1, 3)];
    let ok = graphs.iter().all(|g| {
        betas.iter().all(|&beta| {
            (1..=3).all(|k| {
                let search = exists_beta_colouring(g, k, beta, DEFAULT_SEARCH_BUDGET).unwrap();
                let brute = brute_force_all_colourings(g, k, beta).unwrap();
                matches!(search, SearchOutcome::Witness(_)) == !brute.is_empty()
            })
        })
    });
    report(10, "backtracking agrees with the brute-force oracle", ok);
    assert!(start.elapsed().as_secs_f64() < budget(30.0), "criterion 10 over budget");
}

#[test]
fn criterion_11_lovasz_suite() {
    let ok = (0..100u64).all(|seed| {
        let n = 2 + (seed as usize * 13) % 99;
        let g = gen_random_digraph(n, 0.1, 2000 + seed).unwrap();
        let u = underlying_undirected(&g);
        [2, 3, 4].iter().all(|&k| {
            let (c, history) = lovasz_balanced_colouring_traced(&u, k, None, seed).unwrap();
            let balanced = (0..n).all(|v| {
                let matches = u
                    .neighbours(v)
                    .iter()
                    .filter(|&&w| c.colour(w) == c.colour(v))
                    .count();
                k * matches <= u.degree(v)
            });
            balanced && history.windows(2).all(|w| w[1] < w[0])
        })
    });
    report(11, "balanced local search: bound met, strictly decreasing", ok);
}

/// Random strongly connected digraph: Hamiltonian cycle through a random
/// permutation plus extra random arcs.
fn gen_random_strongly_connected(n: usize, extra: usize, seed: u64) -> Digraph {
    let mut rng = rng_for(seed, "strongly-connected", 0);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut arcs: Vec<(usize, usize)> = (0..n).map(|i| (perm[i], perm[(i + 1) % n])).collect();
    let mut seen: std::collections::BTreeSet<(usize, usize)> = arcs.iter().copied().collect();
    let mut added = 0;
    while added < extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && seen.insert((u, v)) {
            arcs.push((u, v));
            added += 1;
        }
    }
    Digraph::from_arcs(n, &arcs).unwrap()
}

fn seymour_valid(g: &Digraph, c: &Colouring) -> bool {
    c.distinct_colours_used() <= 3
        && (0..g.vertex_count()).all(|v| {
            g.out_degree(v) == 0
                || g.out_neighbours(v).iter().any(|&u| c.colour(u) != c.colour(v))
        })
}

#[test]
fn criterion_12_seymour_suite() {
    let mut ok = (0..100u64).all(|seed| {
        let n = 3 + (seed as usize * 7) % 48;
        let g = gen_random_strongly_connected(n, n / 2, seed);
        assert_eq!(strong_components(&g).len(), 1);
        seymour_valid(&g, &seymour_3colouring(&g).unwrap())
    });
    for n in 3..=50 {
        for k in 1..=3.min((n - 1) / 2) {
            let g = gen_cycle_power(n, k).unwrap();
            ok &= seymour_valid(&g, &seymour_3colouring(&g).unwrap());
        }
    }
    for n in [4, 6, 8, 20, 50] {
        let g = gen_cycle_power(n, 1).unwrap();
        let c = seymour_3colouring(&g).unwrap();
        ok &= seymour_valid(&g, &c) && c.distinct_colours_used() == 2;
    }
    report(12, "differing-out-neighbour 3-colourings, even cycles in 2", ok);
}

#[test]
fn criterion_13_colour_classes_are_stable() {
    let half = Frac::new(1, 2);
    let ok = corpus().iter().all(|g| {
        [2, 3].iter().all(|&k| {
            let c = majority_product_colouring(g, k).unwrap();
            let spec = MajoritySpec::new(k * k, Frac::new(1, k as u64)).unwrap();
            assert!(verify_majority(g, &c, &spec).unwrap().valid);
            c.colour_classes()
                .iter()
                .all(|class| verify_stable(g, class, half).unwrap().valid)
        })
    });
    report(13, "every colour class is a stable set at β = 1/2", ok);
}

#[test]
#[ignore = "long-running: resamples a 5001-vertex cycle power; run with --ignored"]
fn criterion_14_lll_regime() {
    let g = gen_cycle_power(5001, 1200).unwrap();
    let lll = lll_hypothesis_check(&g).unwrap();
    let mut ok = lll.hypothesis_satisfied();
    let (c, log) = lll_resample_3colouring(&g, 1_000_000, 14).unwrap();
    ok &= log.success;
    if let Some(c) = &c {
        ok &= verify_majority(&g, c, &MajoritySpec::majority(3)).unwrap().valid;
    } else {
        ok = false;
    }
    report(14, "LLL hypothesis holds and resampling 3-colours it", ok);
}
