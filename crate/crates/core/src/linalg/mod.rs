//! Exact dense linear algebra over pluggable scalars: the carrier of every
//! rank computation in the crate.

pub mod elim;
pub mod matrix;
pub mod natrank;
pub mod scalar;
pub mod sym;

pub use elim::{
    coupled_rank_factorization, dense_rank, full_rank_factorization, left_inverse, rref,
    CoupledFactorization, FullRankFactorization,
};
pub use matrix::Matrix;
pub use natrank::{min_nat_factor_rank, NatFactorRank, NatRankCaps};
pub use scalar::{Gf2, Mode, Rat, Scalar};
pub use sym::{
    apply_permutation_rows, conjugate_by_permutation, sym_class_equal, Permutation, SymClass,
};
