//! The prop of matrices: morphisms `n -> m` are `m x n` matrices, composed
//! by matrix product and tensored by block-diagonal sum. Its six generating
//! morphisms carry the weight function `w(g) = max(m, n)`, objects weigh
//! their arity, and the constructions here produce certified decompositions
//! whose width is governed by the ranks of the matrix's block factors.

mod build;
mod oracle;
mod transform;

pub mod io;

pub use build::{
    best_decomposition, bound_by_dims, copy_decomposition, rank_decomposition_of_matrix,
    scalar_decomposition, scalar_value_decomposition, tensor_factorize, transpose_decomposition,
};
pub use oracle::{mwd_oracle, MwdOracle, OracleCaps, OracleOutcome};
pub use transform::{discard_transform, tensor_root_transform, zero_transform};

use std::marker::PhantomData;

use crate::decomp::Prop;
use crate::error::Result;
use crate::linalg::{Matrix, Scalar};

/// The six atomic morphisms, with the symmetry and identity on one wire.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    /// `1 -> 2`, duplicates a wire.
    Copy,
    /// `1 -> 0`, deletes a wire.
    Discard,
    /// `2 -> 1`, merges two wires.
    Add,
    /// `0 -> 1`, produces a fresh zero wire.
    Zero,
    /// `2 -> 2`, crosses two wires.
    Swap,
    /// `1 -> 1`.
    Id,
}

impl Generator {
    pub const ALL: [Generator; 6] = [
        Generator::Copy,
        Generator::Discard,
        Generator::Add,
        Generator::Zero,
        Generator::Swap,
        Generator::Id,
    ];

    pub fn matrix<S: Scalar>(&self) -> Matrix<S> {
        match self {
            Generator::Copy => Matrix::from_ints(&[&[1], &[1]]),
            Generator::Discard => Matrix::zeros(0, 1),
            Generator::Add => Matrix::from_ints(&[&[1, 1]]),
            Generator::Zero => Matrix::zeros(1, 0),
            Generator::Swap => Matrix::from_ints(&[&[0, 1], &[1, 0]]),
            Generator::Id => Matrix::from_ints(&[&[1]]),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Generator::Copy => "copy",
            Generator::Discard => "discard",
            Generator::Add => "add",
            Generator::Zero => "zero",
            Generator::Swap => "swap",
            Generator::Id => "id",
        }
    }

    pub fn from_name(name: &str) -> Option<Generator> {
        Generator::ALL.iter().copied().find(|g| g.name() == name)
    }

    /// Which generator a matrix is, if any.
    pub fn from_matrix<S: Scalar>(m: &Matrix<S>) -> Option<Generator> {
        Generator::ALL
            .iter()
            .copied()
            .find(|g| &g.matrix::<S>() == m)
    }
}

/// The matrix prop as a decomposition client. Atoms are exactly the six
/// generators; the leaf weight `max(m, n)` extends the generator weights to
/// the occasional non-atomic leaf a flagged rational certificate can carry.
pub struct MatrixProp<S>(PhantomData<S>);

impl<S> MatrixProp<S> {
    pub fn new() -> Self {
        MatrixProp(PhantomData)
    }
}

impl<S> Default for MatrixProp<S> {
    fn default() -> Self {
        MatrixProp::new()
    }
}

impl<S: Scalar> Prop for MatrixProp<S> {
    type M = Matrix<S>;

    fn dom(&self, f: &Matrix<S>) -> usize {
        f.cols()
    }

    fn cod(&self, f: &Matrix<S>) -> usize {
        f.rows()
    }

    /// `f ; g` for `f: n -> m`, `g: m -> p` is the product `g * f`.
    fn compose(&self, f: &Matrix<S>, g: &Matrix<S>) -> Result<Matrix<S>> {
        g.multiply(f)
    }

    fn tensor(&self, f: &Matrix<S>, g: &Matrix<S>) -> Matrix<S> {
        f.direct_sum(g)
    }

    fn equal(&self, f: &Matrix<S>, g: &Matrix<S>) -> Result<bool> {
        Ok(f == g)
    }

    fn is_atom(&self, f: &Matrix<S>) -> bool {
        Generator::from_matrix(f).is_some()
    }

    fn weight(&self, f: &Matrix<S>) -> usize {
        f.rows().max(f.cols())
    }

    fn label(&self, f: &Matrix<S>) -> String {
        match Generator::from_matrix(f) {
            Some(g) => g.name().to_string(),
            None => format!("{}x{}", f.rows(), f.cols()),
        }
    }
}
