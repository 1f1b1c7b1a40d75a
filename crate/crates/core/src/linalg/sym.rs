//! Adjacency classes: square matrices up to `G + G^T = H + H^T`, which makes
//! edge orientation immaterial. Over GF(2) the symmetrization has a zero
//! diagonal, so self-loops vanish — the simple-graph convention.

use super::matrix::Matrix;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Equivalence class of a square matrix under symmetrization.
#[derive(Clone, Debug)]
pub struct SymClass<S> {
    rep: Matrix<S>,
}

impl<S: Scalar> SymClass<S> {
    pub fn new(rep: Matrix<S>) -> Result<Self> {
        if rep.rows() != rep.cols() {
            return Err(Error::InvalidInput(format!(
                "adjacency class representative must be square, got {}x{}",
                rep.rows(),
                rep.cols()
            )));
        }
        Ok(SymClass { rep })
    }

    pub fn size(&self) -> usize {
        self.rep.rows()
    }

    pub fn rep(&self) -> &Matrix<S> {
        &self.rep
    }

    /// `G + G^T`, the canonical invariant of the class.
    pub fn symmetrized(&self) -> Matrix<S> {
        self.rep
            .add(&self.rep.transpose())
            .expect("square matrices add")
    }
}

impl<S: Scalar> PartialEq for SymClass<S> {
    fn eq(&self, other: &Self) -> bool {
        self.size() == other.size() && self.symmetrized() == other.symmetrized()
    }
}

impl<S: Scalar> Eq for SymClass<S> {}

/// Do two square matrices of equal size denote the same adjacency class?
pub fn sym_class_equal<S: Scalar>(g: &Matrix<S>, h: &Matrix<S>) -> Result<bool> {
    if g.rows() != g.cols() || h.rows() != h.cols() {
        return Err(Error::InvalidInput(
            "adjacency representatives must be square".into(),
        ));
    }
    if g.rows() != h.rows() {
        return Err(Error::dims("sym_class_equal", (g.rows(), g.cols()), (h.rows(), h.cols())));
    }
    Ok(g.add(&g.transpose())? == h.add(&h.transpose())?)
}

/// A permutation of `0..len`, stored as `image[i] = where i goes`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(Error::InvalidInput(format!(
                    "not a permutation of 0..{n}: {image:?}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    pub fn swap(n: usize, a: usize, b: usize) -> Result<Self> {
        let mut image: Vec<usize> = (0..n).collect();
        if a >= n || b >= n {
            return Err(Error::IndexOutOfRange(format!("swap({a},{b}) with size {n}")));
        }
        image.swap(a, b);
        Ok(Permutation { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v] = i;
        }
        Permutation { image }
    }

    /// The permutation matrix sigma with `sigma[p(i)][i] = 1`, so that
    /// `sigma * m` moves row `i` of `m` to row `p(i)`.
    pub fn matrix<S: Scalar>(&self) -> Matrix<S> {
        let n = self.image.len();
        Matrix::from_fn(n, n, |i, j| {
            if self.image[j] == i {
                S::from_nat(1)
            } else {
                S::from_nat(0)
            }
        })
    }
}

/// `sigma * m`: row `i` of the input becomes row `perm(i)` of the output.
pub fn apply_permutation_rows<S: Scalar>(m: &Matrix<S>, perm: &Permutation) -> Result<Matrix<S>> {
    if m.rows() != perm.len() {
        return Err(Error::InvalidInput(format!(
            "permutation of size {} applied to {} rows",
            perm.len(),
            m.rows()
        )));
    }
    let inv = perm.inverse();
    Ok(Matrix::from_fn(m.rows(), m.cols(), |i, j| {
        m.get(inv.apply(i), j).clone()
    }))
}

/// `sigma * g * sigma^T`: vertex `i` is renamed to `perm(i)`.
pub fn conjugate_by_permutation<S: Scalar>(g: &Matrix<S>, perm: &Permutation) -> Result<Matrix<S>> {
    if g.rows() != g.cols() || g.rows() != perm.len() {
        return Err(Error::InvalidInput(format!(
            "conjugation needs a square matrix matching the permutation size, got {}x{} and {}",
            g.rows(),
            g.cols(),
            perm.len()
        )));
    }
    let inv = perm.inverse();
    Ok(Matrix::from_fn(g.rows(), g.cols(), |i, j| {
        g.get(inv.apply(i), inv.apply(j)).clone()
    }))
}
