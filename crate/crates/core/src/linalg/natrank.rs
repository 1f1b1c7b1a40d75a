//! Minimal factorization rank over the natural numbers, by exhaustive
//! search. This is deliberately a desk-scale oracle: minimal ℕ-factorization
//! can strictly exceed the rank over ℚ, and this module produces witnesses
//! of that gap.

use num_traits::ToPrimitive;

use super::matrix::Matrix;
use super::scalar::Rat;
use crate::error::{Error, Result};

/// Hard caps for the exhaustive search; exceeding them is a refusal, never a
/// silent truncation.
#[derive(Clone, Copy, Debug)]
pub struct NatRankCaps {
    pub max_dim: usize,
    pub max_entry: u64,
}

impl Default for NatRankCaps {
    fn default() -> Self {
        NatRankCaps {
            max_dim: 4,
            max_entry: 3,
        }
    }
}

/// Outcome of the bounded search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NatFactorRank {
    Exact(usize),
    ExceedsBudget,
}

/// Least `k <= k_max` such that `a = b * c` with `b`, `c` nonnegative integer
/// matrices of inner dimension `k`. Every product term `b[i][t] * c[t][l]` is
/// bounded by `a[i][l]`, and zero slices can always be dropped, so the search
/// over slice outer products is finite.
pub fn min_nat_factor_rank(
    a: &Matrix<Rat>,
    k_max: usize,
    caps: &NatRankCaps,
) -> Result<NatFactorRank> {
    if !a.is_natural() {
        return Err(Error::InvalidInput(
            "min_nat_factor_rank needs a natural-tagged matrix".into(),
        ));
    }
    if a.rows() > caps.max_dim || a.cols() > caps.max_dim {
        return Err(Error::CapExceeded(format!(
            "min_nat_factor_rank caps dimensions at {}, got {}x{}",
            caps.max_dim,
            a.rows(),
            a.cols()
        )));
    }
    let grid: Vec<Vec<u64>> = (0..a.rows())
        .map(|i| {
            a.row(i)
                .iter()
                .map(|e| e.0.to_integer().to_u64().unwrap_or(u64::MAX))
                .collect()
        })
        .collect();
    if grid.iter().flatten().any(|&v| v > caps.max_entry) {
        return Err(Error::CapExceeded(format!(
            "min_nat_factor_rank caps entries at {}",
            caps.max_entry
        )));
    }
    for k in 0..=k_max {
        if search(&grid, k, &(vec![], vec![])) {
            return Ok(NatFactorRank::Exact(k));
        }
    }
    Ok(NatFactorRank::ExceedsBudget)
}

/// Can `rem` be written as a sum of `budget` nonnegative rank-one outer
/// products? Slices are enumerated in nondecreasing encoded order so each
/// multiset of slices is tried once.
fn search(rem: &[Vec<u64>], budget: usize, floor: &(Vec<u64>, Vec<u64>)) -> bool {
    if rem.iter().flatten().all(|&v| v == 0) {
        return true;
    }
    if budget == 0 {
        return false;
    }
    let rows = rem.len();
    let cols = rem[0].len();
    let max = rem.iter().flatten().copied().max().unwrap_or(0);
    let mut u = vec![0u64; rows];
    loop {
        if u.iter().any(|&x| x > 0) {
            let mut v = vec![0u64; cols];
            loop {
                if v.iter().any(|&x| x > 0) {
                    let pair = (u.clone(), v.clone());
                    if pair >= *floor && fits(rem, &u, &v) {
                        let next: Vec<Vec<u64>> = (0..rows)
                            .map(|i| (0..cols).map(|j| rem[i][j] - u[i] * v[j]).collect())
                            .collect();
                        if search(&next, budget - 1, &pair) {
                            return true;
                        }
                    }
                }
                if !bump(&mut v, max) {
                    break;
                }
            }
        }
        if !bump(&mut u, max) {
            break;
        }
    }
    false
}

fn fits(rem: &[Vec<u64>], u: &[u64], v: &[u64]) -> bool {
    for (i, row) in rem.iter().enumerate() {
        for (j, &r) in row.iter().enumerate() {
            if u[i] * v[j] > r {
                return false;
            }
        }
    }
    true
}

/// Odometer increment over vectors with entries in `0..=max`.
fn bump(vec: &mut [u64], max: u64) -> bool {
    for x in vec.iter_mut() {
        if *x < max {
            *x += 1;
            return true;
        }
        *x = 0;
    }
    false
}
