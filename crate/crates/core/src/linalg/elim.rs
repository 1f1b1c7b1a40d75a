//! Exact elimination routines: rank (three routes), reduced row echelon
//! form, full-rank factorization, one-sided inverses, and the coupled
//! factorization used to cut decompositions along boundary ranks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;
use super::scalar::{Gf2, Rat, Scalar};
use crate::error::{Error, Result};

/// Rank by plain Gaussian elimination over the field. Works for any scalar;
/// kept as the reference route the specialised ranks are checked against.
pub fn dense_rank<S: Scalar>(m: &Matrix<S>) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut work: Vec<Vec<S>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let pivot = (rank..rows).find(|&r| !work[r][col].is_zero());
        let Some(p) = pivot else { continue };
        work.swap(rank, p);
        let inv = work[rank][col].inverse().expect("pivot is nonzero");
        for r in rank + 1..rows {
            if work[r][col].is_zero() {
                continue;
            }
            let factor = work[r][col].clone() * inv.clone();
            for c in col..cols {
                let delta = factor.clone() * work[rank][c].clone();
                work[r][c] = work[r][c].clone() - delta;
            }
        }
        rank += 1;
    }
    rank
}

/// GF(2) rank with rows packed into machine words.
pub fn gf2_rank_packed(m: &Matrix<Gf2>) -> usize {
    let cols = m.cols();
    let words = cols.div_ceil(64);
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut rank = 0;
    for i in 0..m.rows() {
        let mut row = vec![0u64; words];
        for j in 0..cols {
            if m.get(i, j).0 {
                row[j / 64] |= 1 << (j % 64);
            }
        }
        for (lead, pivot) in &pivots {
            if row[lead / 64] >> (lead % 64) & 1 == 1 {
                for (w, p) in row.iter_mut().zip(pivot) {
                    *w ^= p;
                }
            }
        }
        if let Some(lead) = (0..cols).find(|j| row[j / 64] >> (j % 64) & 1 == 1) {
            pivots.push((lead, row));
            pivots.sort_by_key(|(l, _)| *l);
            rank += 1;
        }
    }
    rank
}

/// Fraction-free rank for rational matrices: each row is scaled to integers,
/// then Bareiss elimination keeps every intermediate value an exact integer.
pub fn bareiss_rank(m: &Matrix<Rat>) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut work: Vec<Vec<BigInt>> = Vec::with_capacity(rows);
    for i in 0..rows {
        let mut lcm = BigInt::one();
        for e in m.row(i) {
            lcm = lcm.lcm(e.0.denom());
        }
        work.push(
            m.row(i)
                .iter()
                .map(|e| (&e.0 * &lcm).to_integer())
                .collect(),
        );
    }
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        work.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let num = &work[rank][col] * &work[r][c] - &work[r][col] * &work[rank][c];
                work[r][c] = num / &prev;
            }
            work[r][col] = BigInt::zero();
        }
        prev = work[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Reduced row echelon form together with the pivot column indices.
pub fn rref<S: Scalar>(m: &Matrix<S>) -> (Matrix<S>, Vec<usize>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut work: Vec<Vec<S>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !work[i][col].is_zero()) else {
            continue;
        };
        work.swap(r, p);
        let inv = work[r][col].inverse().expect("pivot is nonzero");
        for c in col..cols {
            work[r][c] = work[r][c].clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !work[i][col].is_zero() {
                let factor = work[i][col].clone();
                for c in col..cols {
                    let delta = factor.clone() * work[r][c].clone();
                    work[i][c] = work[i][c].clone() - delta;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let flat = Matrix::from_fn(rows, cols, |i, j| work[i][j].clone());
    (flat, pivots)
}

/// A full-rank factorization `a = left * right` with inner dimension
/// `rank(a)`; `left` has full column rank and `right` full row rank.
#[derive(Clone, Debug)]
pub struct FullRankFactorization<S> {
    pub left: Matrix<S>,
    pub right: Matrix<S>,
}

impl<S: Scalar> FullRankFactorization<S> {
    pub fn inner_dim(&self) -> usize {
        self.left.cols()
    }

    /// In rational mode: do both factors stay inside ℕ?
    pub fn is_natural(&self) -> bool {
        self.left.is_natural() && self.right.is_natural()
    }
}

/// Factor through the column space: `left` collects the pivot columns of `a`
/// and `right` the nonzero rows of its reduced echelon form.
pub fn full_rank_factorization<S: Scalar>(a: &Matrix<S>) -> FullRankFactorization<S> {
    let (reduced, pivots) = rref(a);
    let r = pivots.len();
    let all_rows: Vec<usize> = (0..a.rows()).collect();
    let left = a
        .submatrix(&all_rows, &pivots)
        .expect("pivot columns are in range");
    let right = reduced
        .submatrix(&(0..r).collect::<Vec<_>>(), &(0..a.cols()).collect::<Vec<_>>())
        .expect("echelon rows are in range");
    FullRankFactorization { left, right }
}

/// Left inverse of a matrix with full column rank: `linv * a = I`.
pub fn left_inverse<S: Scalar>(a: &Matrix<S>) -> Result<Matrix<S>> {
    let (rows, cols) = (a.rows(), a.cols());
    let augmented = a.hstack(&Matrix::identity(rows))?;
    let (reduced, pivots) = rref(&augmented);
    let lead: Vec<usize> = pivots.iter().cloned().take_while(|&c| c < cols).collect();
    if lead.len() != cols {
        return Err(Error::InvalidInput(format!(
            "left inverse requires full column rank, got rank {} of {} columns",
            lead.len(),
            cols
        )));
    }
    let rows_sel: Vec<usize> = (0..cols).collect();
    let cols_sel: Vec<usize> = (cols..cols + rows).collect();
    reduced.submatrix(&rows_sel, &cols_sel)
}

/// The coupled pair of full-rank factorizations sharing a core `s`:
/// `(a1|c) = l1 * (n1 | s * l2^T)` and `(a2|c^T) = l2 * (n2 | s^T * l1^T)`.
#[derive(Clone, Debug)]
pub struct CoupledFactorization<S> {
    pub l1: Matrix<S>,
    pub n1: Matrix<S>,
    pub l2: Matrix<S>,
    pub n2: Matrix<S>,
    pub s: Matrix<S>,
}

impl<S: Scalar> CoupledFactorization<S> {
    pub fn rank1(&self) -> usize {
        self.l1.cols()
    }

    pub fn rank2(&self) -> usize {
        self.l2.cols()
    }

    pub fn is_natural(&self) -> bool {
        self.l1.is_natural()
            && self.n1.is_natural()
            && self.l2.is_natural()
            && self.n2.is_natural()
            && self.s.is_natural()
    }

    /// Both defining equations, checked exactly.
    pub fn verify(&self, a1: &Matrix<S>, a2: &Matrix<S>, c: &Matrix<S>) -> Result<bool> {
        let lhs1 = a1.hstack(c)?;
        let rhs1 = self
            .l1
            .multiply(&self.n1.hstack(&self.s.multiply(&self.l2.transpose())?)?)?;
        let lhs2 = a2.hstack(&c.transpose())?;
        let rhs2 = self.l2.multiply(
            &self
                .n2
                .hstack(&self.s.transpose().multiply(&self.l1.transpose())?)?,
        )?;
        Ok(lhs1 == rhs1 && lhs2 == rhs2)
    }
}

/// Coupled rank factorization. `a1` and `c` share their row space (`a1` is
/// `k1 x n`, `c` is `k1 x k2`), and `a2` is `k2 x n`. The core `s` solves
/// `l1 * s * l2^T = c`, which is possible because the column space of `c`
/// lies in that of `l1` and its row space in that of `l2^T`.
pub fn coupled_rank_factorization<S: Scalar>(
    a1: &Matrix<S>,
    a2: &Matrix<S>,
    c: &Matrix<S>,
) -> Result<CoupledFactorization<S>> {
    if a1.rows() != c.rows() {
        return Err(Error::dims("coupled (a1 vs c)", (a1.rows(), a1.cols()), (c.rows(), c.cols())));
    }
    if a2.rows() != c.cols() {
        return Err(Error::dims("coupled (a2 vs c^T)", (a2.rows(), a2.cols()), (c.cols(), c.rows())));
    }
    let f1 = full_rank_factorization(&a1.hstack(c)?);
    let f2 = full_rank_factorization(&a2.hstack(&c.transpose())?);
    let r1 = f1.inner_dim();
    let r2 = f2.inner_dim();
    let n1 = f1
        .right
        .submatrix(&(0..r1).collect::<Vec<_>>(), &(0..a1.cols()).collect::<Vec<_>>())?;
    let n2 = f2
        .right
        .submatrix(&(0..r2).collect::<Vec<_>>(), &(0..a2.cols()).collect::<Vec<_>>())?;
    let s = if r1 == 0 || r2 == 0 {
        Matrix::zeros(r1, r2)
    } else {
        let linv1 = left_inverse(&f1.left)?;
        let linv2 = left_inverse(&f2.left)?;
        linv1.multiply(c)?.multiply(&linv2.transpose())?
    };
    Ok(CoupledFactorization {
        l1: f1.left,
        n1,
        l2: f2.left,
        n2,
        s,
    })
}
