//! Randomized stable-set extraction, exhaustive enumeration for small
//! graphs, and the stable-set verifier.
//!
//! A set T is stable (at fraction β) when every v in T has at most
//! β·deg⁺(v) out-neighbours inside T. Colour classes of a majority
//! colouring are stable sets, and stability is downward closed.

use std::fmt::Write as _;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::prob::delta_threshold;
use crate::rng::{bernoulli_frac, rng_for};
use crate::Frac;

pub const ENUMERATE_MAX_VERTICES: usize = 20;

/// Parameters (α, p, β) with the derived minimum out-degree threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StableSetParams {
    pub alpha: Frac,
    pub p: Frac,
    pub beta: Frac,
    pub delta_required: u64,
}

impl StableSetParams {
    pub fn new(alpha: Frac, p: Frac, beta: Frac) -> Result<Self> {
        let delta_required = delta_threshold(alpha, p, beta)?;
        Ok(StableSetParams {
            alpha,
            p,
            beta,
            delta_required,
        })
    }

    /// α = 1/3, p = 0.38 (stored as 19/50 exactly), β = 1/2.
    pub fn third() -> Self {
        StableSetParams::new(Frac::new(1, 3), Frac::new(19, 50), Frac::new(1, 2))
            .expect("theorem parameters are valid")
    }

    /// α = 1/2 − ε, p = 1/2 − ε/2, β = 1/2 for rational ε in (0, 1/2).
    pub fn half_minus(epsilon: Frac) -> Result<Self> {
        let half = Frac::new(1, 2);
        if epsilon >= half || *epsilon.numer() == 0 {
            return Err(Error::InvalidArgument(format!(
                "epsilon must lie in (0, 1/2), got {epsilon}"
            )));
        }
        StableSetParams::new(half - epsilon, half - epsilon / Frac::new(2, 1), half)
    }

    /// α = 1/k − ε, p = 1/k − ε/2, β = 1/k for k ≥ 2 and ε in (0, 1/k).
    pub fn kth_minus(k: u64, epsilon: Frac) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidArgument("k must be at least 2".into()));
        }
        let kth = Frac::new(1, k);
        if epsilon >= kth || *epsilon.numer() == 0 {
            return Err(Error::InvalidArgument(format!(
                "epsilon must lie in (0, 1/{k}), got {epsilon}"
            )));
        }
        StableSetParams::new(kth - epsilon, kth - epsilon / Frac::new(2, 1), kth)
    }
}

/// Result of one extraction run: T = S \ B, plus bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableSetResult {
    /// The extracted stable set (sorted).
    pub t: Vec<usize>,
    /// The sampled set S of the successful (or last) try.
    pub s: Vec<usize>,
    /// The violators B = {v in S : |N⁺(v) ∩ S| > β·d_v}.
    pub b: Vec<usize>,
    pub tries_used: usize,
    /// Whether |T| reached ⌈α·n⌉.
    pub success: bool,
}

/// Violations of the stability condition for T.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableReport {
    pub valid: bool,
    pub violations: Vec<usize>,
}

/// Check that every v in T has den·|N⁺(v) ∩ T| ≤ num·d_v in exact
/// integers. Vertices outside T are unconstrained.
pub fn verify_stable(g: &Digraph, t: &[usize], beta: Frac) -> Result<StableReport> {
    let n = g.vertex_count();
    let mut in_t = vec![false; n];
    for &v in t {
        if v >= n {
            return Err(Error::VertexOutOfRange(v, n));
        }
        in_t[v] = true;
    }
    let num = *beta.numer() as u128;
    let den = *beta.denom() as u128;
    let mut violations = Vec::new();
    for &v in t {
        let inside = g.out_neighbours(v).iter().filter(|&&u| in_t[u]).count();
        if den * inside as u128 > num * g.out_degree(v) as u128 {
            violations.push(v);
        }
    }
    violations.sort_unstable();
    violations.dedup();
    Ok(StableReport {
        valid: violations.is_empty(),
        violations,
    })
}

/// ⌈α·n⌉ as an integer target size.
pub fn target_size(alpha: Frac, n: usize) -> usize {
    let num = *alpha.numer() as u128 * n as u128;
    let den = *alpha.denom() as u128;
    num.div_ceil(den) as usize
}

/// Sample-and-delete extraction: per try, keep each vertex with
/// probability p, drop the violators, succeed when |T| ≥ ⌈α·n⌉.
/// On exhausted tries the best T seen is returned with `success: false`.
pub fn random_stable_set(
    g: &Digraph,
    params: &StableSetParams,
    max_tries: usize,
    seed: u64,
) -> Result<StableSetResult> {
    let n = g.vertex_count();
    let target = target_size(params.alpha, n);
    let p_num = *params.p.numer();
    let p_den = *params.p.denom();
    let b_num = *params.beta.numer() as u128;
    let b_den = *params.beta.denom() as u128;

    let mut best: Option<StableSetResult> = None;
    for try_index in 0..max_tries {
        let mut rng = rng_for(seed, "stable-sample", try_index as u64);
        let mut in_s = vec![false; n];
        let s: Vec<usize> = (0..n)
            .filter(|_| bernoulli_frac(&mut rng, p_num, p_den))
            .collect();
        for &v in &s {
            in_s[v] = true;
        }
        let b: Vec<usize> = s
            .iter()
            .copied()
            .filter(|&v| {
                let inside = g.out_neighbours(v).iter().filter(|&&u| in_s[u]).count();
                b_den * inside as u128 > b_num * g.out_degree(v) as u128
            })
            .collect();
        let in_b = {
            let mut mask = vec![false; n];
            for &v in &b {
                mask[v] = true;
            }
            mask
        };
        let t: Vec<usize> = s.iter().copied().filter(|&v| !in_b[v]).collect();
        let result = StableSetResult {
            success: t.len() >= target,
            t,
            s,
            b,
            tries_used: try_index + 1,
        };
        if result.success {
            debug_assert!(verify_stable(g, &result.t, params.beta)?.valid);
            return Ok(result);
        }
        if best.as_ref().map_or(true, |prev| result.t.len() > prev.t.len()) {
            best = Some(result);
        }
    }
    let mut best = best.ok_or_else(|| Error::InvalidArgument("max_tries must be >= 1".into()))?;
    best.tries_used = max_tries;
    Ok(best)
}

/// Whether the theorem guarantee applies to this digraph: δ ≥ 22, backed
/// by the hybrid tail argument (exact binomial for degrees up to 128,
/// Chernoff beyond).
pub fn stable_third_guarantee(g: &Digraph) -> bool {
    use crate::prob::{binomial_tail, chernoff_bound, TailQuery};
    let delta = g.min_out_degree();
    if delta < 22 {
        return false;
    }
    let bound = num::BigRational::new(num::BigInt::from(7), num::BigInt::from(57));
    let degrees: std::collections::BTreeSet<usize> =
        (0..g.vertex_count()).map(|v| g.out_degree(v)).collect();
    degrees.into_iter().all(|d| {
        if d <= 128 {
            binomial_tail(&TailQuery {
                d: d as u64,
                p: Frac::new(19, 50),
                threshold: Frac::new(d as u64, 2),
            })
            .map(|t| t <= bound)
            .unwrap_or(false)
        } else {
            chernoff_bound(d as u64, 0.38, 0.5).map(|b| b <= 7.0 / 57.0).unwrap_or(false)
        }
    })
}

/// Stable set with at least n/3 vertices: the α = 1/3, β = 1/2, p = 0.38
/// parameterization. Runs regardless of whether δ ≥ 22; the guarantee is
/// advisory via [`stable_third_guarantee`].
pub fn stable_third(g: &Digraph, max_tries: usize, seed: u64) -> Result<StableSetResult> {
    random_stable_set(g, &StableSetParams::third(), max_tries, seed)
}

/// All maximal stable sets of a small digraph, exhaustively.
///
/// Downward closure means every stable set is contained in a maximal one,
/// so restricting to maximal sets loses nothing.
pub fn enumerate_stable_sets(g: &Digraph, beta: Frac, max_n: usize) -> Result<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    if n > max_n || n > ENUMERATE_MAX_VERTICES {
        return Err(Error::CapExceeded(format!(
            "stable-set enumeration limited to {} vertices, got {n}",
            max_n.min(ENUMERATE_MAX_VERTICES)
        )));
    }
    let num = *beta.numer() as u64;
    let den = *beta.denom() as u64;
    let out_masks: Vec<u32> = (0..n)
        .map(|v| {
            g.out_neighbours(v)
                .iter()
                .fold(0u32, |acc, &u| acc | (1 << u))
        })
        .collect();

    let total = 1usize << n;
    let mut stable = vec![false; total];
    for mask in 0..total {
        let mut ok = true;
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let inside = (out_masks[v] & mask as u32).count_ones() as u64;
            if den * inside > num * g.out_degree(v) as u64 {
                ok = false;
                break;
            }
        }
        stable[mask] = ok;
    }

    let mut maximal = Vec::new();
    for mask in 0..total {
        if !stable[mask] {
            continue;
        }
        let extendable = (0..n).any(|v| mask & (1 << v) == 0 && stable[mask | (1 << v)]);
        if !extendable {
            maximal.push((0..n).filter(|&v| mask & (1 << v) != 0).collect());
        }
    }
    Ok(maximal)
}

/// Stable-set file format: `stableset <n> <size>` then the vertices, sorted.
pub fn serialize_stable_set(n: usize, t: &[usize]) -> String {
    let mut sorted = t.to_vec();
    sorted.sort_unstable();
    let mut out = String::new();
    let _ = writeln!(out, "stableset {} {}", n, sorted.len());
    for v in sorted {
        let _ = writeln!(out, "{v}");
    }
    out
}

pub fn parse_stable_set(text: &str) -> Result<(usize, Vec<usize>)> {
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
    if parts.next() != Some("stableset") {
        return Err(Error::Parse {
            line: line_no,
            msg: "expected header `stableset <n> <size>`".into(),
        });
    }
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(Error::Parse {
            line: line_no,
            msg: "malformed vertex count".into(),
        })?;
    let size: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(Error::Parse {
            line: line_no,
            msg: "malformed set size".into(),
        })?;
    let mut vertices = Vec::with_capacity(size);
    for (line_no, line) in lines {
        let v: usize = line.parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: "expected a vertex index".into(),
        })?;
        if v >= n {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("vertex {v} out of range"),
            });
        }
        vertices.push(v);
    }
    if vertices.len() != size {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header announced {size} vertices, found {}", vertices.len()),
        });
    }
    Ok((n, vertices))
}
