//! Dense exact matrices. Zero-row and zero-column matrices are first-class
//! citizens: they represent morphisms into and out of the monoidal unit.

use std::fmt;

use num_traits::{One, Zero};

use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A dense `rows x cols` matrix with entries in an exact field, stored
/// row-major. As a prop morphism an `m x n` matrix maps `n -> m`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| S::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    /// Build from explicit rows; all rows must have equal length. An empty
    /// outer vector yields a `0 x 0` matrix.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        let mut entries = Vec::with_capacity(r * c);
        for row in &rows {
            if row.len() != c {
                return Err(Error::InvalidInput(format!(
                    "ragged rows: expected {} columns, found {}",
                    c,
                    row.len()
                )));
            }
        }
        for row in rows {
            entries.extend(row);
        }
        Ok(Matrix { rows: r, cols: c, entries })
    }

    /// Convenience constructor from integer literals.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let c = rows.first().map(|r| r.len()).unwrap_or(0);
        Matrix::from_fn(rows.len(), c, |i, j| {
            let v = rows[i][j];
            if v >= 0 {
                S::from_nat(v as u64)
            } else {
                -S::from_nat(v.unsigned_abs())
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        debug_assert!(i < self.rows && j < self.cols);
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &S> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// True iff every entry is a nonnegative integer. Always true in GF(2).
    pub fn is_natural(&self) -> bool {
        self.entries.iter().all(|e| e.is_natural())
    }

    pub fn multiply(&self, rhs: &Matrix<S>) -> Result<Matrix<S>> {
        if self.cols != rhs.rows {
            return Err(Error::dims(
                "multiply",
                (self.rows, self.cols),
                (rhs.rows, rhs.cols),
            ));
        }
        Ok(Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = S::zero();
            for t in 0..self.cols {
                acc = acc + self.get(i, t).clone() * rhs.get(t, j).clone();
            }
            acc
        }))
    }

    /// Block diagonal sum; the monoidal product of the matrix prop.
    pub fn direct_sum(&self, rhs: &Matrix<S>) -> Matrix<S> {
        Matrix::from_fn(self.rows + rhs.rows, self.cols + rhs.cols, |i, j| {
            if i < self.rows && j < self.cols {
                self.get(i, j).clone()
            } else if i >= self.rows && j >= self.cols {
                rhs.get(i - self.rows, j - self.cols).clone()
            } else {
                S::zero()
            }
        })
    }

    pub fn transpose(&self) -> Matrix<S> {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn hstack(&self, rhs: &Matrix<S>) -> Result<Matrix<S>> {
        if self.rows != rhs.rows {
            return Err(Error::dims(
                "hstack",
                (self.rows, self.cols),
                (rhs.rows, rhs.cols),
            ));
        }
        Ok(Matrix::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - self.cols).clone()
            }
        }))
    }

    pub fn vstack(&self, rhs: &Matrix<S>) -> Result<Matrix<S>> {
        if self.cols != rhs.cols {
            return Err(Error::dims(
                "vstack",
                (self.rows, self.cols),
                (rhs.rows, rhs.cols),
            ));
        }
        Ok(Matrix::from_fn(self.rows + rhs.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                rhs.get(i - self.rows, j).clone()
            }
        }))
    }

    /// Rows and columns picked by explicit index lists, in the order given.
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Result<Matrix<S>> {
        for &i in row_idx {
            if i >= self.rows {
                return Err(Error::IndexOutOfRange(format!(
                    "row {} of a {}x{} matrix",
                    i, self.rows, self.cols
                )));
            }
        }
        for &j in col_idx {
            if j >= self.cols {
                return Err(Error::IndexOutOfRange(format!(
                    "column {} of a {}x{} matrix",
                    j, self.rows, self.cols
                )));
            }
        }
        Ok(Matrix::from_fn(row_idx.len(), col_idx.len(), |i, j| {
            self.get(row_idx[i], col_idx[j]).clone()
        }))
    }

    pub fn add(&self, rhs: &Matrix<S>) -> Result<Matrix<S>> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::dims(
                "add",
                (self.rows, self.cols),
                (rhs.rows, rhs.cols),
            ));
        }
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).clone() + rhs.get(i, j).clone()
        }))
    }

    /// Rank over the active field.
    pub fn rank(&self) -> usize {
        S::rank_of(self)
    }
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}x{}:", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, " [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<S: Scalar> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
