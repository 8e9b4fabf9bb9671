//! Exact and closed-form probability machinery: big-rational binomial
//! tails, the simple concentration bound, the Chernoff bound, the
//! stable-set degree threshold, and the resampling hypothesis check.

use std::fmt::Write as _;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, ToPrimitive, Zero};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::Frac;

/// Exact-arithmetic cap for binomial tails.
pub const BINOMIAL_TAIL_MAX_TRIALS: u64 = 10_000;

fn big_frac(f: Frac) -> BigRational {
    BigRational::new(BigInt::from(*f.numer()), BigInt::from(*f.denom()))
}

/// Tail query for X ~ Bin(d, p): probability of X > threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TailQuery {
    pub d: u64,
    pub p: Frac,
    pub threshold: Frac,
}

/// Exact P(X > threshold) for X ~ Bin(d, p): the sum of
/// C(d, k) p^k (1-p)^(d-k) over k from floor(threshold)+1 to d.
pub fn binomial_tail(q: &TailQuery) -> Result<BigRational> {
    if q.p > Frac::new(1, 1) {
        return Err(Error::InvalidArgument(format!(
            "probability {} outside [0, 1]",
            q.p
        )));
    }
    if q.d > BINOMIAL_TAIL_MAX_TRIALS {
        return Err(Error::CapExceeded(format!(
            "binomial tail limited to d <= {BINOMIAL_TAIL_MAX_TRIALS}, got {}",
            q.d
        )));
    }
    let p = big_frac(q.p);
    let one = BigRational::one();
    let comp = &one - &p;
    let d = q.d;

    // first index in the sum: floor(threshold) + 1, clamped to [0, d+1]
    let floor = *q.threshold.numer() / *q.threshold.denom();
    let k0 = floor + 1;
    if k0 > d {
        return Ok(BigRational::zero());
    }

    // term_k = C(d, k) p^k (1-p)^(d-k), advanced incrementally
    if p.is_zero() {
        return Ok(BigRational::zero());
    }
    if comp.is_zero() {
        // all mass at k = d, which is >= k0 here
        return Ok(one);
    }
    let mut term = binomial_big(d, k0) * p.pow(k0 as i32) * comp.pow((d - k0) as i32);
    let mut sum = term.clone();
    let ratio = &p / &comp;
    for k in k0..d {
        term = term * BigRational::from(BigInt::from(d - k))
            / BigRational::from(BigInt::from(k + 1))
            * &ratio;
        sum += &term;
    }
    Ok(sum)
}

fn binomial_big(n: u64, k: u64) -> BigRational {
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    BigRational::new(num, den)
}

/// Simple concentration bound exp(-t²/(2c²d)) for a function of d
/// independent trials with per-trial effect c. With t = d/6 and c = 1
/// this is exp(-d/72).
pub fn concentration_bound(d: u64, t: f64, c: f64) -> Result<f64> {
    if d == 0 || t < 0.0 || c <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "concentration bound requires d >= 1, t >= 0, c > 0; got d={d} t={t} c={c}"
        )));
    }
    Ok((-t * t / (2.0 * c * c * d as f64)).exp())
}

/// Chernoff bound exp(-(β-p)²·d/(β+p)) on P(Bin(d, p) > βd).
pub fn chernoff_bound(d: u64, p: f64, beta: f64) -> Result<f64> {
    if !(p > 0.0 && p < beta && beta <= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "chernoff bound requires 0 < p < beta <= 1, got p={p} beta={beta}"
        )));
    }
    Ok((-(beta - p).powi(2) * d as f64 / (beta + p)).exp())
}

/// Minimum out-degree threshold ⌈(β+p)·ln(p/(p-α)) / (β-p)²⌉.
///
/// The logarithm is evaluated as a rational atanh series with a certified
/// remainder, so the ceiling is exact: terms are added until the enclosing
/// interval pins a single integer.
pub fn delta_threshold(alpha: Frac, p: Frac, beta: Frac) -> Result<u64> {
    let zero = Frac::new(0, 1);
    let one = Frac::new(1, 1);
    if !(alpha > zero && alpha < p && p < beta && beta < one) {
        return Err(Error::InvalidArgument(format!(
            "delta threshold requires 0 < alpha < p < beta < 1, got alpha={alpha} p={p} beta={beta}"
        )));
    }
    let pb = big_frac(p);
    let coeff = {
        let diff = big_frac(beta) - &pb;
        (big_frac(beta) + &pb) / (&diff * &diff)
    };
    // ln(x) for x = p/(p - alpha) > 1 via 2·atanh((x-1)/(x+1))
    let x = &pb / (&pb - big_frac(alpha));
    let t = (&x - BigRational::one()) / (&x + BigRational::one());
    let t2 = &t * &t;
    let two = BigRational::from(BigInt::from(2));

    let mut power = t.clone(); // t^(2j+1)
    let mut partial = BigRational::zero();
    for j in 0..10_000u32 {
        partial += &two * &power / BigRational::from(BigInt::from(2 * j + 1));
        power *= &t2;
        // power is now t^(2j+3); remainder after the j-th term is at most
        // 2·t^(2j+3)/((2j+3)(1-t²))
        let remainder =
            &two * &power / (BigRational::from(BigInt::from(2 * j + 3)) * (BigRational::one() - &t2));
        let lo = &coeff * &partial;
        let hi = &coeff * (&partial + &remainder);
        let ceil_lo = lo.ceil();
        let ceil_hi = hi.ceil();
        if ceil_lo == ceil_hi {
            return ceil_lo
                .to_integer()
                .to_u64()
                .ok_or_else(|| Error::InvalidArgument("threshold does not fit in u64".into()));
        }
    }
    Err(Error::InvalidArgument(
        "delta threshold series failed to converge".into(),
    ))
}

/// Hypothesis report for the resampling colourer: the weighted local
/// lemma conditions evaluated on a concrete digraph.
#[derive(Debug, Clone, PartialEq)]
pub struct LLLReport {
    pub delta: usize,
    pub max_in: usize,
    /// p = exp(-δ/72)
    pub p_lll: f64,
    /// exp(δ/72)/(12δ), the in-degree cap
    pub in_degree_bound: f64,
    pub delta_ge_1200: bool,
    pub condition_a_ok: bool,
    pub condition_b_ok: bool,
}

impl LLLReport {
    pub fn hypothesis_satisfied(&self) -> bool {
        self.delta_ge_1200 && self.condition_a_ok && self.condition_b_ok
    }
}

/// Evaluate the weighted local lemma conditions: (a) P(A(v,c)) ≤ p^{t_v}
/// with t_v = d_v/δ, which holds identically and is checked as a
/// consistency assertion; (b) Δ⁻ ≤ exp(δ/72)/(12δ).
pub fn lll_hypothesis_check(g: &Digraph) -> Result<LLLReport> {
    let delta = g.min_out_degree();
    if delta == 0 {
        return Err(Error::InvalidArgument(
            "hypothesis check requires minimum out-degree >= 1".into(),
        ));
    }
    let max_in = g.max_in_degree();
    let p_lll = (-(delta as f64) / 72.0).exp();
    let in_degree_bound = (delta as f64 / 72.0).exp() / (12.0 * delta as f64);

    // condition (a): exp(-d_v/72) == p^{d_v/δ} up to float round-off
    let mut condition_a_ok = true;
    for v in 0..g.vertex_count() {
        let d_v = g.out_degree(v) as f64;
        let lhs = (-d_v / 72.0).exp();
        let rhs = p_lll.powf(d_v / delta as f64);
        if lhs > rhs * (1.0 + 1e-9) {
            condition_a_ok = false;
        }
    }
    let condition_b_ok = (max_in as f64) <= in_degree_bound;
    Ok(LLLReport {
        delta,
        max_in,
        p_lll,
        in_degree_bound,
        delta_ge_1200: delta >= 1200,
        condition_a_ok,
        condition_b_ok,
    })
}

/// One row of the stable-set tail table.
#[derive(Debug, Clone, PartialEq)]
pub struct TailRow {
    pub d: u64,
    pub tail: BigRational,
    pub bound: BigRational,
    pub pass: bool,
}

/// Exact tail check P(Bin(d, 19/50) > d/2) ≤ 7/57 for every d in
/// [22, 128]. All 107 rows passing is the machine-checkable core of the
/// minimum-out-degree-22 stable-set theorem; d ≥ 129 is covered by the
/// Chernoff bound instead.
pub fn indset_tail_verification() -> Vec<TailRow> {
    let p = Frac::new(19, 50);
    let bound = BigRational::new(BigInt::from(7), BigInt::from(57));
    (22..=128)
        .map(|d| {
            let tail = binomial_tail(&TailQuery {
                d,
                p,
                threshold: Frac::new(d, 2),
            })
            .expect("d below cap");
            let pass = tail <= bound;
            TailRow {
                d,
                tail,
                bound: bound.clone(),
                pass,
            }
        })
        .collect()
}

/// CSV rendering: `d,tail_num,tail_den,bound_num,bound_den,pass`.
pub fn tail_table_csv(rows: &[TailRow]) -> String {
    let mut out = String::from("d,tail_num,tail_den,bound_num,bound_den,pass\n");
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            row.d,
            row.tail.numer(),
            row.tail.denom(),
            row.bound.numer(),
            row.bound.denom(),
            row.pass
        );
    }
    out
}

#[allow(unused)]
fn rational_to_f64(r: &BigRational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}
