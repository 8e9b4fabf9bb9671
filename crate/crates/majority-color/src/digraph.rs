//! Digraph representation, validated text IO, generators for the extremal
//! families used throughout the crate, and structural utilities.

use std::fmt::Write as _;

use itertools::Itertools;
use rand::Rng;

use crate::error::{Error, Result};
use crate::rng::rng_for;

/// Default cap on the number of subsets `gen_subset_blowup` will enumerate.
pub const BLOWUP_SUBSET_CAP: u64 = 1_000_000;

/// Simple digraph on vertices `0..n`. No self-loops, no parallel arcs;
/// digons (u→v and v→u) are allowed.
///
/// Immutable after construction; out- and in-adjacency lists are kept
/// sorted so membership tests are `O(log d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    m: usize,
}

impl Digraph {
    /// Build from an arc list, validating the simple-digraph invariants.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut out_adj = vec![Vec::new(); n];
        for &(u, v) in arcs {
            if u >= n {
                return Err(Error::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            out_adj[u].push(v);
        }
        let mut m = 0;
        for (u, list) in out_adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some((_, w)) = list.iter().tuple_windows().find(|(a, b)| a == b) {
                return Err(Error::InvalidArgument(format!("duplicate arc {u} -> {w}")));
            }
            m += list.len();
        }
        let mut in_adj = vec![Vec::new(); n];
        for (u, list) in out_adj.iter().enumerate() {
            for &v in list {
                in_adj[v].push(u);
            }
        }
        for list in &mut in_adj {
            list.sort_unstable();
        }
        Ok(Digraph {
            n,
            out_adj,
            in_adj,
            m,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.m
    }

    pub fn out_neighbours(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_neighbours(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    /// δ, the minimum out-degree. Zero for the empty graph.
    pub fn min_out_degree(&self) -> usize {
        (0..self.n).map(|v| self.out_degree(v)).min().unwrap_or(0)
    }

    /// Δ⁻, the maximum in-degree.
    pub fn max_in_degree(&self) -> usize {
        (0..self.n).map(|v| self.in_degree(v)).max().unwrap_or(0)
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_adj[u].binary_search(&v).is_ok()
    }

    /// All arcs in (u, v) order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
    }

    /// In-degree equals out-degree at every vertex.
    pub fn is_eulerian(&self) -> bool {
        (0..self.n).all(|v| self.in_degree(v) == self.out_degree(v))
    }

    /// Parse the text format: `digraph <n> <m>` then `m` lines `<u> <v>`.
    /// Lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (line_no, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "empty input".into(),
        })?;
        let mut parts = header.split_whitespace();
        if parts.next() != Some("digraph") {
            return Err(Error::Parse {
                line: line_no,
                msg: "expected header `digraph <n> <m>`".into(),
            });
        }
        let parse_num = |tok: Option<&str>, what: &str| -> Result<usize> {
            tok.and_then(|t| t.parse().ok()).ok_or(Error::Parse {
                line: line_no,
                msg: format!("malformed header: bad {what}"),
            })
        };
        let n = parse_num(parts.next(), "vertex count")?;
        let m = parse_num(parts.next(), "arc count")?;
        if parts.next().is_some() {
            return Err(Error::Parse {
                line: line_no,
                msg: "trailing tokens in header".into(),
            });
        }

        let mut arcs = Vec::with_capacity(m);
        let mut seen = std::collections::HashSet::new();
        for (line_no, line) in lines {
            let mut parts = line.split_whitespace();
            let u: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or(Error::Parse {
                    line: line_no,
                    msg: "expected `<u> <v>`".into(),
                })?;
            let v: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or(Error::Parse {
                    line: line_no,
                    msg: "expected `<u> <v>`".into(),
                })?;
            if parts.next().is_some() {
                return Err(Error::Parse {
                    line: line_no,
                    msg: "trailing tokens on arc line".into(),
                });
            }
            if u >= n || v >= n {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("vertex index out of range (n = {n})"),
                });
            }
            if u == v {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("self-loop at vertex {u}"),
                });
            }
            if !seen.insert((u, v)) {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("duplicate arc {u} -> {v}"),
                });
            }
            arcs.push((u, v));
        }
        if arcs.len() != m {
            return Err(Error::Parse {
                line: text.lines().count(),
                msg: format!("header announced {m} arcs, found {}", arcs.len()),
            });
        }
        Digraph::from_arcs(n, &arcs)
    }

    /// Serialize; arcs are emitted sorted by (u, v) so output is canonical.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph {} {}", self.n, self.m);
        for (u, v) in self.arcs() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Permutation of `0..n`, the "fixed vertex ordering" of the product
/// colouring construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrdering(Vec<usize>);

impl VertexOrdering {
    pub fn identity(n: usize) -> Self {
        VertexOrdering((0..n).collect())
    }

    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &v in &perm {
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            if seen[v] {
                return Err(Error::InvalidArgument(format!(
                    "ordering repeats vertex {v}"
                )));
            }
            seen[v] = true;
        }
        Ok(VertexOrdering(perm))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// position[v] = index of v in the ordering.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// Loopless undirected graph with symmetric adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl UndirectedGraph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(UndirectedGraph { n, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }
}

/// k-th power of a directed n-cycle: N⁺(vᵢ) = {vᵢ₊₁, …, vᵢ₊ₖ} mod n.
/// Every vertex has in-degree and out-degree k, so the result is Eulerian.
pub fn gen_cycle_power(n: usize, k: usize) -> Result<Digraph> {
    if k == 0 || k > n.saturating_sub(1) {
        return Err(Error::InvalidArgument(format!(
            "cycle power requires 1 <= k <= n-1, got n={n} k={k}"
        )));
    }
    let mut arcs = Vec::with_capacity(n * k);
    for i in 0..n {
        for j in 1..=k {
            arcs.push((i, (i + j) % n));
        }
    }
    Digraph::from_arcs(n, &arcs)
}

/// Erdős–Rényi style digraph: each ordered pair is an arc independently
/// with probability `arc_prob`. Deterministic given the seed.
pub fn gen_random_digraph(n: usize, arc_prob: f64, seed: u64) -> Result<Digraph> {
    if !(0.0..=1.0).contains(&arc_prob) {
        return Err(Error::InvalidArgument(format!(
            "arc probability {arc_prob} outside [0, 1]"
        )));
    }
    let mut rng = rng_for(seed, "random-digraph", 0);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(arc_prob) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::from_arcs(n, &arcs)
}

/// Every vertex gets exactly `d` distinct out-neighbours sampled uniformly
/// without replacement, so δ = d exactly.
pub fn gen_random_out_regular(n: usize, d: usize, seed: u64) -> Result<Digraph> {
    if n == 0 || d > n - 1 {
        return Err(Error::InvalidArgument(format!(
            "out-regular requires d <= n-1, got n={n} d={d}"
        )));
    }
    let mut arcs = Vec::with_capacity(n * d);
    for u in 0..n {
        let mut rng = rng_for(seed, "out-regular", u as u64);
        // partial Fisher-Yates over the candidate targets
        let mut candidates: Vec<usize> = (0..n).filter(|&v| v != u).collect();
        for i in 0..d {
            let j = rng.gen_range(i..candidates.len());
            candidates.swap(i, j);
            arcs.push((u, candidates[i]));
        }
    }
    Digraph::from_arcs(n, &arcs)
}

/// Random tournament: one arc per unordered pair, direction uniform.
pub fn gen_tournament(n: usize, seed: u64) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::InvalidArgument("tournament requires n >= 1".into()));
    }
    let mut rng = rng_for(seed, "tournament", 0);
    let mut arcs = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(0.5) {
                arcs.push((u, v));
            } else {
                arcs.push((v, u));
            }
        }
    }
    Digraph::from_arcs(n, &arcs)
}

fn binomial_u64(n: u64, k: u64) -> Option<u64> {
    let k = k.min(n - k.min(n));
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)?;
        acc /= i + 1;
    }
    Some(acc)
}

/// Add one new vertex per δ-subset S of the base's vertices, with
/// out-neighbourhood exactly S. Subsets are enumerated in lexicographic
/// order so the vertex numbering is canonical.
pub fn gen_subset_blowup(base: &Digraph, delta: usize) -> Result<Digraph> {
    gen_subset_blowup_with_cap(base, delta, BLOWUP_SUBSET_CAP)
}

pub fn gen_subset_blowup_with_cap(base: &Digraph, delta: usize, cap: u64) -> Result<Digraph> {
    let nb = base.vertex_count();
    if delta == 0 || delta > nb {
        return Err(Error::InvalidArgument(format!(
            "blowup requires 1 <= delta <= |V(base)|, got delta={delta} n={nb}"
        )));
    }
    let count = binomial_u64(nb as u64, delta as u64)
        .filter(|&c| c <= cap)
        .ok_or_else(|| {
            Error::CapExceeded(format!("C({nb}, {delta}) exceeds the subset cap {cap}"))
        })?;
    let mut arcs: Vec<(usize, usize)> = base.arcs().collect();
    let mut next = nb;
    for subset in (0..nb).combinations(delta) {
        for v in subset {
            arcs.push((next, v));
        }
        next += 1;
    }
    debug_assert_eq!(next, nb + count as usize);
    Digraph::from_arcs(next, &arcs)
}

/// Split E(G) into the arcs going forward in the ordering and the rest.
/// Both parts are acyclic and together they cover E(G).
pub fn acyclic_bipartition(
    g: &Digraph,
    order: &VertexOrdering,
) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
    let pos = order.positions();
    let mut forward = Vec::new();
    let mut backward = Vec::new();
    for (u, v) in g.arcs() {
        if pos[u] < pos[v] {
            forward.push((u, v));
        } else {
            backward.push((u, v));
        }
    }
    (forward, backward)
}

/// Strongly connected components by iterative Tarjan; classes come out in
/// reverse topological order of the condensation (arc targets first).
pub fn strong_components(g: &Digraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut index = vec![usize::MAX; n];
    let mut lowlink = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut components = Vec::new();
    let mut next_index = 0;

    // explicit DFS frames: (vertex, next out-neighbour position)
    let mut call_stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        call_stack.push((root, 0));
        while let Some(&mut (v, ref mut i)) = call_stack.last_mut() {
            if *i == 0 {
                index[v] = next_index;
                lowlink[v] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            let outs = g.out_neighbours(v);
            if *i < outs.len() {
                let w = outs[*i];
                *i += 1;
                if index[w] == usize::MAX {
                    call_stack.push((w, 0));
                } else if on_stack[w] {
                    lowlink[v] = lowlink[v].min(index[w]);
                }
            } else {
                call_stack.pop();
                if let Some(&(parent, _)) = call_stack.last() {
                    lowlink[parent] = lowlink[parent].min(lowlink[v]);
                }
                if lowlink[v] == index[v] {
                    let mut component = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        component.push(w);
                        if w == v {
                            break;
                        }
                    }
                    component.sort_unstable();
                    components.push(component);
                }
            }
        }
    }
    components
}

/// u ~ v iff u→v or v→u; digons collapse to a single edge.
pub fn underlying_undirected(g: &Digraph) -> UndirectedGraph {
    let edges: Vec<(usize, usize)> = g
        .arcs()
        .map(|(u, v)| if u < v { (u, v) } else { (v, u) })
        .collect();
    UndirectedGraph::from_edges(g.vertex_count(), &edges)
        .expect("valid digraph yields valid undirected graph")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Digraph {
        Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn parse_triangle() {
        let g = Digraph::parse("digraph 3 3\n0 1\n1 2\n2 0").unwrap();
        assert_eq!(g, triangle());
        assert_eq!(g.min_out_degree(), 1);
        assert_eq!(g.max_in_degree(), 1);
    }

    #[test]
    fn parse_single_vertex() {
        let g = Digraph::parse("digraph 1 0").unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.min_out_degree(), 0);
    }

    #[test]
    fn parse_rejects_self_loop() {
        let err = Digraph::parse("digraph 2 1\n0 0").unwrap_err();
        match err {
            Error::Parse { line, msg } => {
                assert_eq!(line, 2);
                assert!(msg.contains("self-loop"));
            }
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn parse_rejects_out_of_range_and_duplicates() {
        assert!(matches!(
            Digraph::parse("digraph 2 1\n0 5"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Digraph::parse("digraph 2 2\n0 1\n0 1"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            Digraph::parse("digraph x 0"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn parse_skips_comments() {
        let g = Digraph::parse("# a triangle\ndigraph 3 3\n0 1\n# middle\n1 2\n2 0").unwrap();
        assert_eq!(g, triangle());
    }

    #[test]
    fn serialize_parse_roundtrip() {
        for g in [
            triangle(),
            gen_cycle_power(11, 3).unwrap(),
            gen_random_digraph(30, 0.2, 5).unwrap(),
            gen_tournament(10, 9).unwrap(),
        ] {
            assert_eq!(Digraph::parse(&g.serialize()).unwrap(), g);
        }
    }

    #[test]
    fn cycle_power_basics() {
        let c5 = gen_cycle_power(5, 1).unwrap();
        assert_eq!(c5.arcs().collect::<Vec<_>>(), vec![
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0)
        ]);

        let g = gen_cycle_power(11, 3).unwrap();
        assert_eq!(g.arc_count(), 33);
        for v in 0..11 {
            assert_eq!(g.out_degree(v), 3);
            assert_eq!(g.in_degree(v), 3);
        }
        assert!(g.is_eulerian());

        let g = gen_cycle_power(7, 2).unwrap();
        for i in 0..7 {
            assert_eq!(g.out_neighbours(i).to_vec(), {
                let mut v = vec![(i + 1) % 7, (i + 2) % 7];
                v.sort_unstable();
                v
            });
        }

        assert!(gen_cycle_power(5, 0).is_err());
        assert!(gen_cycle_power(5, 5).is_err());
    }

    #[test]
    fn random_digraph_extremes_and_determinism() {
        let g = gen_random_digraph(5, 0.0, 1).unwrap();
        assert_eq!(g.arc_count(), 0);
        let g = gen_random_digraph(4, 1.0, 7).unwrap();
        assert_eq!(g.arc_count(), 12);
        let a = gen_random_digraph(100, 0.1, 42).unwrap();
        let b = gen_random_digraph(100, 0.1, 42).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn out_regular_degrees() {
        let g = gen_random_out_regular(3, 2, 0).unwrap();
        assert_eq!(g.arc_count(), 6); // complete digraph on 3 vertices
        let g = gen_random_out_regular(300, 22, 5).unwrap();
        assert_eq!(g.min_out_degree(), 22);
        assert!((0..300).all(|v| g.out_degree(v) == 22));
        assert!(gen_random_out_regular(5, 5, 0).is_err());
    }

    #[test]
    fn tournament_shape() {
        let g = gen_tournament(1, 0).unwrap();
        assert_eq!(g.arc_count(), 0);
        let g = gen_tournament(3, 11).unwrap();
        assert_eq!(g.arc_count(), 3);
        let a = gen_tournament(50, 3).unwrap();
        let b = gen_tournament(50, 3).unwrap();
        assert_eq!(a, b);
        // exactly one arc per pair
        for u in 0..50 {
            for v in (u + 1)..50 {
                assert!(a.has_arc(u, v) ^ a.has_arc(v, u));
            }
        }
    }

    #[test]
    fn blowup_counts() {
        let c3 = triangle();
        let g = gen_subset_blowup(&c3, 1).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.arc_count(), 6);
        for v in 3..6 {
            assert_eq!(g.out_degree(v), 1);
        }

        let c6 = gen_cycle_power(6, 1).unwrap();
        let g = gen_subset_blowup(&c6, 2).unwrap();
        assert_eq!(g.vertex_count(), 6 + 15);
        assert_eq!(g.arc_count(), 6 + 30);

        assert!(matches!(
            gen_subset_blowup_with_cap(&gen_cycle_power(40, 1).unwrap(), 10, 100),
            Err(Error::CapExceeded(_))
        ));
    }

    fn is_acyclic(n: usize, arcs: &[(usize, usize)]) -> bool {
        let mut indeg = vec![0usize; n];
        let mut out = vec![Vec::new(); n];
        for &(u, v) in arcs {
            indeg[v] += 1;
            out[u].push(v);
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = queue.pop() {
            removed += 1;
            for &w in &out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push(w);
                }
            }
        }
        removed == n
    }

    #[test]
    fn bipartition_triangle() {
        let g = triangle();
        let (f, b) = acyclic_bipartition(&g, &VertexOrdering::identity(3));
        assert_eq!(f, vec![(0, 1), (1, 2)]);
        assert_eq!(b, vec![(2, 0)]);
    }

    #[test]
    fn bipartition_cycle_power_wraparound() {
        let g = gen_cycle_power(11, 3).unwrap();
        let (f, b) = acyclic_bipartition(&g, &VertexOrdering::identity(11));
        // backward arcs are exactly those wrapping past index 10
        assert_eq!(b.len(), 6);
        assert_eq!(f.len() + b.len(), 33);
        assert!(b.iter().all(|&(u, v)| u > v));
        assert!(is_acyclic(11, &f));
        assert!(is_acyclic(11, &b));
    }

    #[test]
    fn bipartition_topological_order_puts_everything_forward() {
        let g = Digraph::from_arcs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let (f, b) = acyclic_bipartition(&g, &VertexOrdering::identity(4));
        assert_eq!(f.len(), 4);
        assert!(b.is_empty());
    }

    #[test]
    fn scc_triangle_is_one_class() {
        assert_eq!(strong_components(&triangle()), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn scc_path_reverse_topological() {
        let g = Digraph::from_arcs(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(strong_components(&g), vec![vec![2], vec![1], vec![0]]);
    }

    #[test]
    fn scc_two_triangles_target_first() {
        // triangle {0,1,2} -> triangle {3,4,5} via arc 0->3
        let g = Digraph::from_arcs(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)],
        )
        .unwrap();
        let comps = strong_components(&g);
        assert_eq!(comps, vec![vec![3, 4, 5], vec![0, 1, 2]]);
    }

    #[test]
    fn underlying_collapses_digons() {
        let g = Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        let u = underlying_undirected(&g);
        assert_eq!(u.edge_count(), 1);

        let u = underlying_undirected(&triangle());
        assert!((0..3).all(|v| u.degree(v) == 2));

        let u = underlying_undirected(&gen_cycle_power(7, 2).unwrap());
        assert!((0..7).all(|v| u.degree(v) == 4));
    }

    #[test]
    fn ordering_validation() {
        assert!(VertexOrdering::new(vec![2, 0, 1]).is_ok());
        assert!(VertexOrdering::new(vec![0, 0, 1]).is_err());
        assert!(VertexOrdering::new(vec![0, 3]).is_err());
    }
}
