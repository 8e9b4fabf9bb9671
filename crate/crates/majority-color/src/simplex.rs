//! Dense two-phase simplex over exact big rationals with Bland's rule.
//!
//! Sized for the fractional covering problems in this crate: a handful of
//! rows (vertices) and a column per maximal stable set.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Minimize `1ᵀx` subject to `A x ≥ 1`, `x ≥ 0`.
///
/// `a[i][j]` is the coefficient of column j in row i. Returns the optimal
/// `x` and the objective value, both exact.
pub fn solve_min_cover(a: &[Vec<bool>]) -> Result<(Vec<BigRational>, BigRational)> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    if m == 0 {
        return Ok((vec![BigRational::zero(); n], BigRational::zero()));
    }
    // columns: n structural, m surplus, m artificial
    let surplus0 = n;
    let artificial0 = n + m;
    let total = n + 2 * m;

    let mut t = vec![vec![BigRational::zero(); total]; m];
    let mut rhs = vec![BigRational::one(); m];
    for i in 0..m {
        for j in 0..n {
            if a[i][j] {
                t[i][j] = BigRational::one();
            }
        }
        t[i][surplus0 + i] = -BigRational::one();
        t[i][artificial0 + i] = BigRational::one();
    }
    let mut basis: Vec<usize> = (0..m).map(|i| artificial0 + i).collect();

    // phase 1: minimize the artificial sum
    let phase1_cost = |j: usize| {
        if j >= artificial0 {
            BigRational::one()
        } else {
            BigRational::zero()
        }
    };
    run_phase(&mut t, &mut rhs, &mut basis, total, &phase1_cost, None)?;
    let artificial_sum: BigRational = (0..m)
        .filter(|&i| basis[i] >= artificial0)
        .map(|i| rhs[i].clone())
        .sum();
    if !artificial_sum.is_zero() {
        return Err(Error::InvalidArgument(
            "covering system infeasible".into(),
        ));
    }
    drive_out_artificials(&mut t, &mut rhs, &mut basis, artificial0);

    // phase 2: minimize the structural sum, artificials banned
    let phase2_cost = |j: usize| {
        if j < n {
            BigRational::one()
        } else {
            BigRational::zero()
        }
    };
    run_phase(&mut t, &mut rhs, &mut basis, total, &phase2_cost, Some(artificial0))?;

    let mut x = vec![BigRational::zero(); n];
    for i in 0..m {
        if basis[i] < n {
            x[basis[i]] = rhs[i].clone();
        }
    }
    let objective = x.iter().sum();
    Ok((x, objective))
}

fn run_phase(
    t: &mut [Vec<BigRational>],
    rhs: &mut [BigRational],
    basis: &mut [usize],
    total: usize,
    cost: &dyn Fn(usize) -> BigRational,
    ban_from: Option<usize>,
) -> Result<()> {
    let m = t.len();
    loop {
        // reduced costs z_j = c_j - sum_i c_{B(i)} t[i][j], Bland: take the
        // lowest-index negative one
        let mut entering = None;
        'cols: for j in 0..total {
            if let Some(ban) = ban_from {
                if j >= ban {
                    break 'cols;
                }
            }
            if basis.contains(&j) {
                continue;
            }
            let mut z = cost(j);
            for i in 0..m {
                let cb = cost(basis[i]);
                if !cb.is_zero() && !t[i][j].is_zero() {
                    z -= cb * &t[i][j];
                }
            }
            if z.is_negative() {
                entering = Some(j);
                break;
            }
        }
        let Some(j) = entering else {
            return Ok(());
        };

        // ratio test; ties broken by the smallest basis variable index
        let mut leaving: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if t[i][j].is_positive() {
                let ratio = &rhs[i] / &t[i][j];
                let better = match &leaving {
                    None => true,
                    Some((r, best)) => {
                        ratio < *best || (ratio == *best && basis[i] < basis[*r])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
        }
        let Some((r, _)) = leaving else {
            return Err(Error::InvalidArgument("unbounded covering LP".into()));
        };
        pivot(t, rhs, basis, r, j);
    }
}

fn drive_out_artificials(
    t: &mut [Vec<BigRational>],
    rhs: &mut [BigRational],
    basis: &mut [usize],
    artificial0: usize,
) {
    let m = t.len();
    for r in 0..m {
        if basis[r] < artificial0 {
            continue;
        }
        debug_assert!(rhs[r].is_zero());
        if let Some(j) = (0..artificial0).find(|&j| !t[r][j].is_zero() && !basis.contains(&j)) {
            pivot(t, rhs, basis, r, j);
        }
        // a fully zero row is redundant and can stay parked on its artificial
    }
}

fn pivot(t: &mut [Vec<BigRational>], rhs: &mut [BigRational], basis: &mut [usize], r: usize, j: usize) {
    let m = t.len();
    let total = t[r].len();
    let pivot_val = t[r][j].clone();
    for col in 0..total {
        t[r][col] /= &pivot_val;
    }
    rhs[r] /= &pivot_val;
    for i in 0..m {
        if i == r || t[i][j].is_zero() {
            continue;
        }
        let factor = t[i][j].clone();
        for col in 0..total {
            let delta = &factor * &t[r][col];
            t[i][col] -= delta;
        }
        let delta = &factor * &rhs[r];
        rhs[i] -= delta;
    }
    basis[r] = j;
}

#[allow(unused)]
fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
