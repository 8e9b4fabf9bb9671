//! Majority colourings of digraphs.
//!
//! A majority colouring assigns each vertex a colour so that at most half
//! of its out-neighbours share it; the (k, β) generalisation allows k
//! colours and fraction β. This crate provides:
//!
//! - [`digraph`]: the graph type, validated text IO, seeded generators
//!   (cycle powers, random digraphs, out-regular digraphs, tournaments,
//!   subset blowups) and structural utilities (SCCs, acyclic arc
//!   bipartitions, underlying undirected graphs).
//! - [`colouring`]: the verifier plus every colouring algorithm — greedy
//!   passes, the two-pass product construction (4 colours always suffice;
//!   k² for the 1/k condition), balanced recolouring on undirected
//!   graphs, Eulerian colourings, different-out-neighbour 3-colourings,
//!   randomized colouring with retry, and a resampling colourer.
//! - [`stable`]: randomized stable-set extraction and exhaustive
//!   enumeration of maximal stable sets.
//! - [`exact`]: complete backtracking decision procedures, minimum
//!   colour counts, list-colouring, a brute-force oracle, and the
//!   fractional relaxation solved by exact rational simplex.
//! - [`prob`]: exact big-rational binomial tails, concentration and
//!   Chernoff bounds, the degree-threshold formula with a certified
//!   ceiling, and the resampling hypothesis check.
//! - [`experiment`]: a reproducible batch harness over seeded instance
//!   families.
//!
//! Every randomized routine is a deterministic function of its arguments
//! and a `u64` seed; see [`rng`] for the seed-derivation scheme.
//!
//! The `examples/` directory has one runnable example per capability;
//! the `majority-color` binary exposes the same operations as
//! subcommands.

pub mod colouring;
pub mod digraph;
pub mod error;
pub mod exact;
pub mod experiment;
pub mod prob;
pub mod rng;
mod simplex;
pub mod stable;

pub use error::{Error, Result};

/// Exact small rational, used for the β fraction and sampling
/// probabilities. Automatically kept in reduced form.
pub type Frac = num::rational::Ratio<u64>;

/// Parse `num/den` or a bare integer into a [`Frac`].
pub fn parse_frac(s: &str) -> Result<Frac> {
    let bad = || Error::InvalidArgument(format!("expected a fraction `num/den`, got `{s}`"));
    if let Some((num, den)) = s.split_once('/') {
        let num: u64 = num.trim().parse().map_err(|_| bad())?;
        let den: u64 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        Ok(Frac::new(num, den))
    } else {
        let num: u64 = s.trim().parse().map_err(|_| bad())?;
        Ok(Frac::new(num, 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_frac_forms() {
        assert_eq!(parse_frac("1/2").unwrap(), Frac::new(1, 2));
        assert_eq!(parse_frac("19/50").unwrap(), Frac::new(19, 50));
        assert_eq!(parse_frac("2").unwrap(), Frac::new(2, 1));
        assert_eq!(parse_frac("4/8").unwrap(), Frac::new(1, 2));
        assert!(parse_frac("1/0").is_err());
        assert!(parse_frac("x").is_err());
    }
}
