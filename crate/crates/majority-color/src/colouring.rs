//! Colouring algorithms: greedy passes, the product construction, the
//! balanced recolouring local search, the different-out-neighbour
//! 3-colouring, randomized colouring with retry, and resampling. The
//! verifier here defines correctness for all of them.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rand::Rng;

use crate::digraph::{
    strong_components, underlying_undirected, Digraph, UndirectedGraph, VertexOrdering,
};
use crate::error::{Error, Result};
use crate::rng::rng_for;
use crate::Frac;

/// Vertex -> colour-index map over colours `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    colours: Vec<usize>,
    k: usize,
}

impl Colouring {
    pub fn new(colours: Vec<usize>, k: usize) -> Result<Self> {
        if let Some(&c) = colours.iter().find(|&&c| c >= k) {
            return Err(Error::InvalidArgument(format!(
                "colour {c} out of range for k = {k}"
            )));
        }
        Ok(Colouring { colours, k })
    }

    pub fn colour(&self, v: usize) -> usize {
        self.colours[v]
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    pub fn num_colours(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn distinct_colours_used(&self) -> usize {
        let mut seen = vec![false; self.k];
        for &c in &self.colours {
            seen[c] = true;
        }
        seen.iter().filter(|&&b| b).count()
    }

    /// Vertices of each colour class, classes indexed by colour.
    pub fn colour_classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.colours.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }

    /// Parse the text format: `colouring <n> <k>` then n lines `<vertex> <colour>`.
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
        if parts.next() != Some("colouring") {
            return Err(Error::Parse {
                line: line_no,
                msg: "expected header `colouring <n> <k>`".into(),
            });
        }
        let n: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(Error::Parse {
                line: line_no,
                msg: "malformed vertex count".into(),
            })?;
        let k: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(Error::Parse {
                line: line_no,
                msg: "malformed colour count".into(),
            })?;
        let mut colours = vec![usize::MAX; n];
        for (line_no, line) in lines {
            let mut parts = line.split_whitespace();
            let v: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or(Error::Parse {
                    line: line_no,
                    msg: "expected `<vertex> <colour>`".into(),
                })?;
            let c: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or(Error::Parse {
                    line: line_no,
                    msg: "expected `<vertex> <colour>`".into(),
                })?;
            if v >= n {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("vertex {v} out of range"),
                });
            }
            if c >= k {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("colour {c} out of range for k = {k}"),
                });
            }
            if colours[v] != usize::MAX {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("vertex {v} coloured twice"),
                });
            }
            colours[v] = c;
        }
        if let Some(v) = colours.iter().position(|&c| c == usize::MAX) {
            return Err(Error::Parse {
                line: 0,
                msg: format!("vertex {v} missing a colour"),
            });
        }
        Colouring::new(colours, k)
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "colouring {} {}", self.colours.len(), self.k);
        for (v, &c) in self.colours.iter().enumerate() {
            let _ = writeln!(out, "{v} {c}");
        }
        out
    }
}

/// (k colours, β fraction) majority condition. β is an exact rational.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MajoritySpec {
    pub k_colours: usize,
    pub beta: Frac,
}

impl MajoritySpec {
    pub fn new(k_colours: usize, beta: Frac) -> Result<Self> {
        if *beta.numer() == 0 || beta > Frac::new(1, 1) {
            return Err(Error::InvalidArgument(format!(
                "beta must lie in (0, 1], got {beta}"
            )));
        }
        Ok(MajoritySpec { k_colours, beta })
    }

    /// The classic condition: k colours, at most half the out-neighbours.
    pub fn majority(k_colours: usize) -> Self {
        MajoritySpec {
            k_colours,
            beta: Frac::new(1, 2),
        }
    }
}

/// Per-vertex same-colour out-neighbour counts plus the violated vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub valid: bool,
    /// X(v, colour(v)) for each vertex.
    pub same_colour_counts: Vec<usize>,
    /// Vertices v with den·X(v, colour(v)) > num·d_v.
    pub violations: Vec<usize>,
}

impl VerificationReport {
    pub fn render(&self, g: &Digraph) -> String {
        let mut out = String::new();
        if self.valid {
            let _ = writeln!(out, "valid");
        } else {
            let _ = writeln!(out, "invalid {} violations", self.violations.len());
            for &v in &self.violations {
                let _ = writeln!(
                    out,
                    "violation {} {} {}",
                    v,
                    self.same_colour_counts[v],
                    g.out_degree(v)
                );
            }
        }
        out
    }
}

/// Check the β-majority condition in exact integer arithmetic:
/// vertex v violates iff den·X(v, colour(v)) > num·d_v.
pub fn verify_majority(g: &Digraph, c: &Colouring, spec: &MajoritySpec) -> Result<VerificationReport> {
    if c.len() != g.vertex_count() {
        return Err(Error::LengthMismatch {
            got: c.len(),
            expected: g.vertex_count(),
        });
    }
    let num = *spec.beta.numer() as u128;
    let den = *spec.beta.denom() as u128;
    let mut same_colour_counts = Vec::with_capacity(g.vertex_count());
    let mut violations = Vec::new();
    for v in 0..g.vertex_count() {
        let mine = c.colour(v);
        let matches = g
            .out_neighbours(v)
            .iter()
            .filter(|&&u| c.colour(u) == mine)
            .count();
        same_colour_counts.push(matches);
        if den * matches as u128 > num * g.out_degree(v) as u128 {
            violations.push(v);
        }
    }
    Ok(VerificationReport {
        valid: violations.is_empty(),
        same_colour_counts,
        violations,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PassDirection {
    Forward,
    Backward,
}

/// One greedy pass over the ordering: each vertex takes the colour with
/// the fewest matches among its already-coloured out-neighbours, lowest
/// colour index on ties. Guarantees k·matches ≤ d' where d' counts
/// out-neighbours on the already-processed side.
pub fn greedy_pass(
    g: &Digraph,
    order: &VertexOrdering,
    k: usize,
    direction: PassDirection,
) -> Result<Colouring> {
    if k < 2 {
        return Err(Error::InvalidArgument("greedy pass requires k >= 2".into()));
    }
    if order.len() != g.vertex_count() {
        return Err(Error::LengthMismatch {
            got: order.len(),
            expected: g.vertex_count(),
        });
    }
    let mut colours = vec![usize::MAX; g.vertex_count()];
    let sequence: Vec<usize> = match direction {
        PassDirection::Forward => order.as_slice().to_vec(),
        PassDirection::Backward => order.as_slice().iter().rev().copied().collect(),
    };
    let mut counts = vec![0usize; k];
    for &v in &sequence {
        counts.iter_mut().for_each(|c| *c = 0);
        for &u in g.out_neighbours(v) {
            if colours[u] != usize::MAX {
                counts[colours[u]] += 1;
            }
        }
        let best = (0..k).min_by_key(|&c| counts[c]).unwrap();
        colours[v] = best;
    }
    Colouring::new(colours, k)
}

/// The two-pass product construction: colour by the pair (forward colour,
/// backward colour). With k base colours the result uses k² colours and
/// every vertex has at most ⌊d_v/k⌋ same-coloured out-neighbours; k = 2
/// gives a majority 4-colouring.
pub fn majority_product_colouring(g: &Digraph, k: usize) -> Result<Colouring> {
    let order = VertexOrdering::identity(g.vertex_count());
    let forward = greedy_pass(g, &order, k, PassDirection::Forward)?;
    let backward = greedy_pass(g, &order, k, PassDirection::Backward)?;
    let colours = (0..g.vertex_count())
        .map(|v| forward.colour(v) * k + backward.colour(v))
        .collect();
    Colouring::new(colours, k * k)
}

/// Local search on an undirected graph: while some vertex has more than
/// deg(v)/k same-coloured neighbours, recolour it to a least-used colour
/// among its neighbours. The monochromatic edge count strictly decreases
/// at every step, so this terminates with k·matches(v) ≤ deg(v) for all v.
pub fn lovasz_balanced_colouring(
    u: &UndirectedGraph,
    k: usize,
    init: Option<&Colouring>,
    seed: u64,
) -> Result<Colouring> {
    lovasz_balanced_colouring_traced(u, k, init, seed).map(|(c, _)| c)
}

/// Same as [`lovasz_balanced_colouring`] but also returns the
/// monochromatic-edge count after each improvement step (starting with
/// the initial count).
pub fn lovasz_balanced_colouring_traced(
    u: &UndirectedGraph,
    k: usize,
    init: Option<&Colouring>,
    seed: u64,
) -> Result<(Colouring, Vec<usize>)> {
    if k < 1 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let n = u.vertex_count();
    let mut colours: Vec<usize> = match init {
        Some(c) => {
            if c.len() != n {
                return Err(Error::LengthMismatch {
                    got: c.len(),
                    expected: n,
                });
            }
            if c.num_colours() > k {
                return Err(Error::InvalidArgument(format!(
                    "initial colouring uses {} colours, limit is {k}",
                    c.num_colours()
                )));
            }
            c.colours().to_vec()
        }
        None => {
            let mut rng = rng_for(seed, "lovasz-init", 0);
            (0..n).map(|_| rng.gen_range(0..k)).collect()
        }
    };

    let mono_edges = |colours: &[usize]| -> usize {
        u.edges()
            .filter(|&(a, b)| colours[a] == colours[b])
            .count()
    };
    let mut history = vec![mono_edges(&colours)];

    loop {
        let mut improved = false;
        for v in 0..n {
            let deg = u.degree(v);
            let mut counts = vec![0usize; k];
            for &w in u.neighbours(v) {
                counts[colours[w]] += 1;
            }
            if k * counts[colours[v]] > deg {
                // a colour with fewer than deg/k matches exists by counting
                let best = (0..k).min_by_key(|&c| counts[c]).unwrap();
                debug_assert!(counts[best] < counts[colours[v]]);
                colours[v] = best;
                let count = mono_edges(&colours);
                assert!(count < *history.last().unwrap(), "recolouring must improve");
                history.push(count);
                improved = true;
            }
        }
        if !improved {
            break;
        }
    }
    Ok((Colouring::new(colours, k)?, history))
}

/// Balanced colouring of an Eulerian digraph via the underlying undirected
/// graph. k = 4 yields a majority colouring; k = 3 bounds same-coloured
/// in-plus-out neighbours by 2/3 of their number.
pub fn eulerian_colouring(g: &Digraph, k: usize) -> Result<Colouring> {
    if !matches!(k, 3 | 4) {
        return Err(Error::InvalidArgument(format!(
            "eulerian colouring supports k in {{3, 4}}, got {k}"
        )));
    }
    for v in 0..g.vertex_count() {
        if g.in_degree(v) != g.out_degree(v) {
            return Err(Error::NotEulerian {
                vertex: v,
                in_degree: g.in_degree(v),
                out_degree: g.out_degree(v),
            });
        }
    }
    let u = underlying_undirected(g);
    let zeros = Colouring::new(vec![0; g.vertex_count()], k)?;
    lovasz_balanced_colouring(&u, k, Some(&zeros), 0)
}

/// 3-colouring in which every non-sink vertex has at least one
/// out-neighbour of a different colour. SCCs of the condensation are
/// processed in reverse topological order; inside a non-trivial SCC a
/// directed cycle is seeded with alternating colours and the rest grows
/// along arcs into the coloured set.
pub fn seymour_3colouring(g: &Digraph) -> Result<Colouring> {
    let n = g.vertex_count();
    let mut colours = vec![usize::MAX; n];
    let components = strong_components(g);

    for class in components {
        if class.len() == 1 {
            let v = class[0];
            if g.out_degree(v) == 0 {
                colours[v] = 0;
            } else {
                // all out-neighbours live in already-processed components
                let target = g.out_neighbours(v)[0];
                debug_assert_ne!(colours[target], usize::MAX);
                colours[v] = if colours[target] == 0 { 1 } else { 0 };
            }
            continue;
        }

        let in_class = {
            let mut mask = vec![false; n];
            for &v in &class {
                mask[v] = true;
            }
            mask
        };

        // find a directed cycle inside the class by DFS
        let cycle = find_cycle_in(g, &class, &in_class);
        let len = cycle.len();
        for (i, &v) in cycle.iter().enumerate() {
            colours[v] = if i + 1 == len && len % 2 == 1 {
                2
            } else {
                i % 2
            };
        }

        // grow: repeatedly colour an uncoloured vertex with an arc into
        // the coloured set, differing from that out-neighbour
        let mut remaining: BTreeSet<usize> = class
            .iter()
            .copied()
            .filter(|&v| colours[v] == usize::MAX)
            .collect();
        while !remaining.is_empty() {
            let mut pick = None;
            'scan: for &v in &remaining {
                for &w in g.out_neighbours(v) {
                    if colours[w] != usize::MAX {
                        pick = Some((v, w));
                        break 'scan;
                    }
                }
            }
            let (v, w) = pick.expect("strongly connected class always has an arc into X");
            colours[v] = if colours[w] == 0 { 1 } else { 0 };
            remaining.remove(&v);
        }
    }
    Colouring::new(colours, 3)
}

fn find_cycle_in(g: &Digraph, class: &[usize], in_class: &[bool]) -> Vec<usize> {
    let start = class[0];
    let mut on_path = vec![false; g.vertex_count()];
    let mut path = vec![start];
    on_path[start] = true;
    loop {
        let v = *path.last().unwrap();
        let next = g
            .out_neighbours(v)
            .iter()
            .copied()
            .find(|&w| in_class[w])
            .expect("non-trivial SCC vertex has an out-arc inside the SCC");
        if on_path[next] {
            let pos = path.iter().position(|&x| x == next).unwrap();
            return path[pos..].to_vec();
        }
        on_path[next] = true;
        path.push(next);
    }
}

/// Outcome of the uniform-random 3-colouring retry loop.
#[derive(Debug, Clone)]
pub struct RetryOutcome {
    pub colouring: Option<Colouring>,
    pub tries_used: usize,
    pub last_report: VerificationReport,
}

pub const DEFAULT_RETRY_TRIES: usize = 100;

/// Sample uniform independent 3-colourings until one passes the β = 1/2
/// majority check or the tries run out. Failure is a result, not an error.
pub fn random_3colouring_retry(g: &Digraph, max_tries: usize, seed: u64) -> Result<RetryOutcome> {
    if max_tries == 0 {
        return Err(Error::InvalidArgument("max_tries must be >= 1".into()));
    }
    let spec = MajoritySpec::majority(3);
    let mut last_report = None;
    for try_index in 0..max_tries {
        let mut rng = rng_for(seed, "random-3colouring", try_index as u64);
        let colours: Vec<usize> = (0..g.vertex_count()).map(|_| rng.gen_range(0..3)).collect();
        let c = Colouring::new(colours, 3)?;
        let report = verify_majority(g, &c, &spec)?;
        if report.valid {
            return Ok(RetryOutcome {
                colouring: Some(c),
                tries_used: try_index + 1,
                last_report: report,
            });
        }
        last_report = Some(report);
    }
    Ok(RetryOutcome {
        colouring: None,
        tries_used: max_tries,
        last_report: last_report.unwrap(),
    })
}

/// Instrumentation for the resampling colourer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResampleLog {
    pub rounds: usize,
    pub resampled_vertices: usize,
    pub success: bool,
}

/// Moser–Tardos style resampling towards a majority 3-colouring.
///
/// A realized bad event is A(v, c) with c = colour(v): more than half of
/// v's out-neighbours currently share v's colour. While one holds, the
/// lexicographically smallest violated (v, c) is picked and the colours
/// of N⁺(v) — exactly the trials determining X(v, c) — are resampled;
/// v's own colour is not.
pub fn lll_resample_3colouring(
    g: &Digraph,
    max_rounds: usize,
    seed: u64,
) -> Result<(Option<Colouring>, ResampleLog)> {
    let n = g.vertex_count();
    let mut rng = rng_for(seed, "lll-resample", 0);
    let mut colours: Vec<usize> = (0..n).map(|_| rng.gen_range(0..3)).collect();

    // X[v][c] = number of out-neighbours of v coloured c
    let mut counts = vec![[0usize; 3]; n];
    for v in 0..n {
        for &u in g.out_neighbours(v) {
            counts[v][colours[u]] += 1;
        }
    }
    let violated_at = |counts: &[[usize; 3]], colours: &[usize], v: usize| {
        2 * counts[v][colours[v]] > g.out_degree(v)
    };
    let mut violated: BTreeSet<(usize, usize)> = (0..n)
        .filter(|&v| violated_at(&counts, &colours, v))
        .map(|v| (v, colours[v]))
        .collect();

    let mut rounds = 0;
    let mut resampled_vertices = 0;
    while let Some(&(v, _)) = violated.iter().next() {
        if rounds >= max_rounds {
            return Ok((
                None,
                ResampleLog {
                    rounds,
                    resampled_vertices,
                    success: false,
                },
            ));
        }
        rounds += 1;
        let mut recheck = BTreeSet::new();
        let targets: Vec<usize> = g.out_neighbours(v).to_vec();
        for &u in &targets {
            let old = colours[u];
            let new = rng.gen_range(0..3);
            resampled_vertices += 1;
            if new == old {
                continue;
            }
            colours[u] = new;
            recheck.insert(u);
            for &w in g.in_neighbours(u) {
                counts[w][old] -= 1;
                counts[w][new] += 1;
                recheck.insert(w);
            }
        }
        recheck.insert(v);
        for w in recheck {
            violated.retain(|&(x, _)| x != w);
            if violated_at(&counts, &colours, w) {
                violated.insert((w, colours[w]));
            }
        }
    }

    let c = Colouring::new(colours, 3)?;
    debug_assert!(verify_majority(g, &c, &MajoritySpec::majority(3))?.valid);
    Ok((
        Some(c),
        ResampleLog {
            rounds,
            resampled_vertices,
            success: true,
        },
    ))
}
