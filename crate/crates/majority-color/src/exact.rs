//! Ground-truth decision procedures: backtracking existence search,
//! minimum colour count, list-colouring, the fractional relaxation, and
//! the brute-force oracle used by tests.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num::rational::BigRational;
use num::traits::{One, Zero};

use crate::colouring::{verify_majority, Colouring, MajoritySpec};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::simplex::solve_min_cover;
use crate::stable::enumerate_stable_sets;
use crate::Frac;

pub const DEFAULT_SEARCH_BUDGET: u64 = 50_000_000;
pub const DEFAULT_MIN_COLOURS_CAP: usize = 4;
pub const FRACTIONAL_MAX_VERTICES: usize = 16;
pub const BRUTE_FORCE_MAX_ASSIGNMENTS: u64 = 10_000_000;

/// Outcome of a complete search under a node budget. `None` is a
/// proof-of-none (the tree was exhausted); running out of budget is
/// reported honestly as unknown, never as `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Witness(Colouring),
    None,
    BudgetExceeded,
}

impl SearchOutcome {
    pub fn witness(&self) -> Option<&Colouring> {
        match self {
            SearchOutcome::Witness(c) => Some(c),
            _ => None,
        }
    }
}

/// Per-vertex lists of allowed colours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment(Vec<Vec<usize>>);

impl ListAssignment {
    pub fn new(lists: Vec<Vec<usize>>) -> Result<Self> {
        if let Some(v) = lists.iter().position(Vec::is_empty) {
            return Err(Error::InvalidArgument(format!(
                "empty colour list at vertex {v}"
            )));
        }
        let mut lists = lists;
        for list in &mut lists {
            list.sort_unstable();
            list.dedup();
        }
        Ok(ListAssignment(lists))
    }

    /// The same c-element list {0, …, c-1} for every vertex.
    pub fn uniform(n: usize, c: usize) -> Result<Self> {
        if c == 0 {
            return Err(Error::InvalidArgument("lists must be nonempty".into()));
        }
        ListAssignment::new(vec![(0..c).collect(); n])
    }

    pub fn lists(&self) -> &[Vec<usize>] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

struct Search<'a> {
    g: &'a Digraph,
    /// allowed colours per vertex, already sorted ascending
    domains: &'a [Vec<usize>],
    /// decreasing out-degree, ties by index: most constrained first
    order: Vec<usize>,
    beta_num: u64,
    beta_den: u64,
    budget: u64,
    nodes: u64,
    colours: Vec<Option<usize>>,
    /// same-colour matches among coloured out-neighbours, for coloured v
    matches: Vec<u64>,
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

impl<'a> Search<'a> {
    fn new(g: &'a Digraph, domains: &'a [Vec<usize>], beta: Frac, budget: u64) -> Self {
        let mut order: Vec<usize> = (0..g.vertex_count()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.out_degree(v)), v));
        Search {
            g,
            domains,
            order,
            beta_num: *beta.numer(),
            beta_den: *beta.denom(),
            budget,
            nodes: 0,
            colours: vec![None; g.vertex_count()],
            matches: vec![0; g.vertex_count()],
        }
    }

    fn violates(&self, v: usize) -> bool {
        self.beta_den as u128 * self.matches[v] as u128
            > self.beta_num as u128 * self.g.out_degree(v) as u128
    }

    /// Try colour c at v; on success updates all counts, on violation
    /// rolls back and reports false.
    fn assign(&mut self, v: usize, c: usize) -> bool {
        let own = self
            .g
            .out_neighbours(v)
            .iter()
            .filter(|&&u| self.colours[u] == Some(c))
            .count() as u64;
        self.matches[v] = own;
        if self.violates(v) {
            return false;
        }
        self.colours[v] = Some(c);
        let mut updated = 0;
        let mut ok = true;
        for (idx, &w) in self.g.in_neighbours(v).iter().enumerate() {
            if self.colours[w] == Some(c) {
                self.matches[w] += 1;
                if self.violates(w) {
                    updated = idx + 1;
                    ok = false;
                    break;
                }
            }
            updated = idx + 1;
        }
        if !ok {
            for &w in &self.g.in_neighbours(v)[..updated] {
                if self.colours[w] == Some(c) && w != v {
                    self.matches[w] -= 1;
                }
            }
            self.colours[v] = None;
            return false;
        }
        true
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colours[v].take().expect("vertex was coloured");
        for &w in self.g.in_neighbours(v) {
            if self.colours[w] == Some(c) {
                self.matches[w] -= 1;
            }
        }
    }

    fn run(&mut self, depth: usize) -> Step {
        if depth == self.order.len() {
            return Step::Found;
        }
        let v = self.order[depth];
        for i in 0..self.domains[v].len() {
            let c = self.domains[v][i];
            self.nodes += 1;
            if self.nodes > self.budget {
                return Step::OutOfBudget;
            }
            if self.assign(v, c) {
                match self.run(depth + 1) {
                    Step::Found => return Step::Found,
                    Step::OutOfBudget => return Step::OutOfBudget,
                    Step::Exhausted => self.unassign(v),
                }
            }
        }
        Step::Exhausted
    }
}

fn search_with_domains(
    g: &Digraph,
    domains: &[Vec<usize>],
    beta: Frac,
    budget: u64,
) -> Result<SearchOutcome> {
    if g.vertex_count() == 0 {
        return Ok(SearchOutcome::Witness(Colouring::new(vec![], 1)?));
    }
    let mut search = Search::new(g, domains, beta, budget);
    match search.run(0) {
        Step::Found => {
            let max_colour = domains.iter().flatten().copied().max().unwrap_or(0);
            let colours: Vec<usize> = search
                .colours
                .iter()
                .map(|c| c.expect("complete assignment"))
                .collect();
            let witness = Colouring::new(colours, max_colour + 1)?;
            // a witness must survive the independent verifier
            let spec = MajoritySpec::new(max_colour + 1, beta)?;
            debug_assert!(verify_majority(g, &witness, &spec)?.valid);
            Ok(SearchOutcome::Witness(witness))
        }
        Step::Exhausted => Ok(SearchOutcome::None),
        Step::OutOfBudget => Ok(SearchOutcome::BudgetExceeded),
    }
}

/// Complete backtracking search for a β-majority k-colouring, vertices in
/// decreasing out-degree order, pruning as soon as a partially coloured
/// vertex already exceeds its match allowance.
pub fn exists_beta_colouring(
    g: &Digraph,
    k: usize,
    beta: Frac,
    budget: u64,
) -> Result<SearchOutcome> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let domains = vec![(0..k).collect::<Vec<usize>>(); g.vertex_count()];
    search_with_domains(g, &domains, beta, budget)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinColoursOutcome {
    /// The smallest k within the cap, with a witness.
    Found { k: usize, witness: Colouring },
    /// Some k below the answer ran out of budget; the true minimum is unknown.
    BudgetExceeded { at_k: usize },
    /// No k up to the cap admits a colouring.
    AboveCap,
}

/// Smallest k ≤ k_max with a β-majority k-colouring. For β = 1/2 the
/// product construction guarantees the answer is at most 4.
pub fn min_majority_colours(
    g: &Digraph,
    k_max: usize,
    beta: Frac,
    budget: u64,
) -> Result<MinColoursOutcome> {
    for k in 1..=k_max {
        match exists_beta_colouring(g, k, beta, budget)? {
            SearchOutcome::Witness(witness) => {
                return Ok(MinColoursOutcome::Found { k, witness })
            }
            SearchOutcome::None => continue,
            SearchOutcome::BudgetExceeded => {
                return Ok(MinColoursOutcome::BudgetExceeded { at_k: k })
            }
        }
    }
    Ok(MinColoursOutcome::AboveCap)
}

/// Backtracking restricted to per-vertex colour lists.
pub fn choosability_check(
    g: &Digraph,
    lists: &ListAssignment,
    beta: Frac,
    budget: u64,
) -> Result<SearchOutcome> {
    if lists.len() != g.vertex_count() {
        return Err(Error::LengthMismatch {
            got: lists.len(),
            expected: g.vertex_count(),
        });
    }
    search_with_domains(g, lists.lists(), beta, budget)
}

/// Exhaustive enumeration of all valid (k, β)-colourings. Test oracle;
/// refuses anything beyond kⁿ = 10⁷ assignments.
pub fn brute_force_all_colourings(
    g: &Digraph,
    k: usize,
    beta: Frac,
) -> Result<Vec<Colouring>> {
    let n = g.vertex_count();
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let total = (k as u64).checked_pow(n as u32).filter(|&t| t <= BRUTE_FORCE_MAX_ASSIGNMENTS);
    let Some(total) = total else {
        return Err(Error::CapExceeded(format!(
            "brute force limited to {BRUTE_FORCE_MAX_ASSIGNMENTS} assignments, k^n too large"
        )));
    };
    let spec = MajoritySpec::new(k, beta)?;
    let mut valid = Vec::new();
    let mut assignment = vec![0usize; n];
    for index in 0..total {
        let mut rest = index;
        for slot in assignment.iter_mut() {
            *slot = (rest % k as u64) as usize;
            rest /= k as u64;
        }
        let c = Colouring::new(assignment.clone(), k)?;
        if verify_majority(g, &c, &spec)?.valid {
            valid.push(c);
        }
    }
    Ok(valid)
}

/// Weights over maximal stable sets covering every vertex, with the
/// exact rational total weight.
#[derive(Debug, Clone, PartialEq)]
pub struct FractionalSolution {
    /// Nonzero weights, keyed by the stable set.
    pub weights: BTreeMap<Vec<usize>, BigRational>,
    pub objective: BigRational,
}

impl FractionalSolution {
    /// Render weights and objective as exact fractions `p/q`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "objective {}/{}",
            self.objective.numer(),
            self.objective.denom()
        );
        for (set, w) in &self.weights {
            let vertices: Vec<String> = set.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{}/{} {}", w.numer(), w.denom(), vertices.join(" "));
        }
        out
    }
}

/// Minimum total weight of a fractional cover of the vertices by stable
/// sets (β = 1/2), solved in exact rational arithmetic over the maximal
/// stable sets — downward closure makes that restriction lossless.
pub fn fractional_majority_number(g: &Digraph, max_n: usize) -> Result<FractionalSolution> {
    let n = g.vertex_count();
    if n > max_n.min(FRACTIONAL_MAX_VERTICES) {
        return Err(Error::CapExceeded(format!(
            "fractional relaxation limited to {} vertices, got {n}",
            max_n.min(FRACTIONAL_MAX_VERTICES)
        )));
    }
    let sets = enumerate_stable_sets(g, Frac::new(1, 2), n.max(1))?;
    let mut rows = vec![vec![false; sets.len()]; n];
    for (j, set) in sets.iter().enumerate() {
        for &v in set {
            rows[v][j] = true;
        }
    }
    let (x, objective) = solve_min_cover(&rows)?;

    // exact re-substitution check of every covering constraint
    for (v, row) in rows.iter().enumerate() {
        let covered: BigRational = row
            .iter()
            .zip(&x)
            .filter(|(&used, _)| used)
            .map(|(_, w)| w.clone())
            .sum();
        assert!(covered >= BigRational::one(), "vertex {v} undercovered");
    }

    let weights = sets
        .into_iter()
        .zip(x)
        .filter(|(_, w)| !w.is_zero())
        .collect();
    Ok(FractionalSolution { weights, objective })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::majority_product_colouring;
    use crate::digraph::{gen_cycle_power, gen_random_digraph, Digraph};
    use num::bigint::BigInt;

    fn half() -> Frac {
        Frac::new(1, 2)
    }

    fn triangle() -> Digraph {
        Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn triangle_has_no_majority_2colouring() {
        let outcome = exists_beta_colouring(&triangle(), 2, half(), 1_000_000).unwrap();
        assert_eq!(outcome, SearchOutcome::None);
    }

    #[test]
    fn four_vertex_example_has_one() {
        let g = Digraph::from_arcs(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let outcome = exists_beta_colouring(&g, 2, half(), 1_000_000).unwrap();
        assert!(outcome.witness().is_some());
    }

    #[test]
    fn cycle_power_11_3_needs_three() {
        let g = gen_cycle_power(11, 3).unwrap();
        assert_eq!(
            exists_beta_colouring(&g, 2, half(), DEFAULT_SEARCH_BUDGET).unwrap(),
            SearchOutcome::None
        );
        assert!(exists_beta_colouring(&g, 3, half(), DEFAULT_SEARCH_BUDGET)
            .unwrap()
            .witness()
            .is_some());
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        let g = gen_cycle_power(11, 3).unwrap();
        assert_eq!(
            exists_beta_colouring(&g, 2, half(), 3).unwrap(),
            SearchOutcome::BudgetExceeded
        );
    }

    #[test]
    fn min_colours_odd_and_even_cycles() {
        for n in [5usize, 7, 9] {
            let g = gen_cycle_power(n, 1).unwrap();
            match min_majority_colours(&g, 4, half(), DEFAULT_SEARCH_BUDGET).unwrap() {
                MinColoursOutcome::Found { k, .. } => assert_eq!(k, 3, "C{n}"),
                other => panic!("unexpected outcome {other:?}"),
            }
        }
        for n in [4usize, 6] {
            let g = gen_cycle_power(n, 1).unwrap();
            match min_majority_colours(&g, 4, half(), DEFAULT_SEARCH_BUDGET).unwrap() {
                MinColoursOutcome::Found { k, .. } => assert_eq!(k, 2, "C{n}"),
                other => panic!("unexpected outcome {other:?}"),
            }
        }
    }

    #[test]
    fn min_colours_edgeless_is_one() {
        let g = Digraph::from_arcs(4, &[]).unwrap();
        match min_majority_colours(&g, 4, half(), 1_000_000).unwrap() {
            MinColoursOutcome::Found { k, .. } => assert_eq!(k, 1),
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn choosability_acyclic_lists_of_two() {
        let g = Digraph::from_arcs(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        // arbitrary lists of size 2, not all the same
        let lists = ListAssignment::new(vec![
            vec![0, 1],
            vec![2, 3],
            vec![0, 3],
            vec![1, 2],
            vec![4, 5],
        ])
        .unwrap();
        let outcome = choosability_check(&g, &lists, half(), 1_000_000).unwrap();
        assert!(outcome.witness().is_some());
    }

    #[test]
    fn choosability_triangle_same_pair_fails() {
        let lists = ListAssignment::uniform(3, 2).unwrap();
        let outcome = choosability_check(&triangle(), &lists, half(), 1_000_000).unwrap();
        assert_eq!(outcome, SearchOutcome::None);
    }

    #[test]
    fn choosability_single_vertex_list_seven() {
        let g = Digraph::from_arcs(1, &[]).unwrap();
        let lists = ListAssignment::new(vec![vec![7]]).unwrap();
        let outcome = choosability_check(&g, &lists, half(), 100).unwrap();
        let witness = outcome.witness().unwrap();
        assert_eq!(witness.colour(0), 7);
    }

    #[test]
    fn brute_force_triangle_counts() {
        let proper = brute_force_all_colourings(&triangle(), 3, half()).unwrap();
        assert_eq!(proper.len(), 6);
        let none = brute_force_all_colourings(&triangle(), 2, half()).unwrap();
        assert!(none.is_empty());
        let g = Digraph::from_arcs(1, &[]).unwrap();
        assert_eq!(brute_force_all_colourings(&g, 2, half()).unwrap().len(), 2);
    }

    #[test]
    fn oracle_agreement_small_random() {
        for seed in 0..30 {
            let g = gen_random_digraph(5, 0.4, seed).unwrap();
            for k in 1..=3 {
                for beta in [half(), Frac::new(1, 3)] {
                    let brute = !brute_force_all_colourings(&g, k, beta).unwrap().is_empty();
                    let search = exists_beta_colouring(&g, k, beta, 10_000_000).unwrap();
                    match search {
                        SearchOutcome::Witness(_) => assert!(brute),
                        SearchOutcome::None => assert!(!brute),
                        SearchOutcome::BudgetExceeded => panic!("budget on 5 vertices"),
                    }
                }
            }
        }
    }

    #[test]
    fn monotone_in_k() {
        for seed in 0..10 {
            let g = gen_random_digraph(5, 0.5, seed).unwrap();
            for k in 1..3 {
                let yes_k = exists_beta_colouring(&g, k, half(), 10_000_000)
                    .unwrap()
                    .witness()
                    .is_some();
                let yes_k1 = exists_beta_colouring(&g, k + 1, half(), 10_000_000)
                    .unwrap()
                    .witness()
                    .is_some();
                if yes_k {
                    assert!(yes_k1);
                }
            }
        }
    }

    #[test]
    fn product_is_a_witness_upper_bound() {
        for seed in 0..10 {
            let g = gen_random_digraph(8, 0.4, seed).unwrap();
            let c = majority_product_colouring(&g, 2).unwrap();
            assert!(verify_majority(&g, &c, &MajoritySpec::majority(4))
                .unwrap()
                .valid);
            match min_majority_colours(&g, 4, half(), DEFAULT_SEARCH_BUDGET).unwrap() {
                MinColoursOutcome::Found { k, .. } => assert!(k <= 4),
                other => panic!("unexpected outcome {other:?}"),
            }
        }
    }

    #[test]
    fn fractional_triangle() {
        let sol = fractional_majority_number(&triangle(), 16).unwrap();
        assert_eq!(sol.objective, rat(3, 1));
    }

    #[test]
    fn fractional_edgeless() {
        let g = Digraph::from_arcs(4, &[]).unwrap();
        let sol = fractional_majority_number(&g, 16).unwrap();
        assert_eq!(sol.objective, rat(1, 1));
        assert_eq!(sol.weights.len(), 1);
    }

    #[test]
    fn fractional_five_cycle() {
        let g = gen_cycle_power(5, 1).unwrap();
        let sol = fractional_majority_number(&g, 16).unwrap();
        assert_eq!(sol.objective, rat(5, 2));
        assert!(sol.render().starts_with("objective 5/2"));
    }

    #[test]
    fn fractional_cap() {
        let g = Digraph::from_arcs(17, &[]).unwrap();
        assert!(matches!(
            fractional_majority_number(&g, 16),
            Err(Error::CapExceeded(_))
        ));
    }

    #[test]
    fn fractional_below_integral() {
        for seed in 0..5 {
            let g = gen_random_digraph(7, 0.4, seed).unwrap();
            let sol = fractional_majority_number(&g, 16).unwrap();
            if let MinColoursOutcome::Found { k, .. } =
                min_majority_colours(&g, 4, half(), DEFAULT_SEARCH_BUDGET).unwrap()
            {
                assert!(sol.objective <= rat(k as i64, 1));
            }
        }
    }
}
