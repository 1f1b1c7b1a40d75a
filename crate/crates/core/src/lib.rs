//! Exact width measures for matrices and graphs.
//!
//! The crate is organised around one generic notion — a monoidal
//! decomposition tree whose cost is the widest node — instantiated in two
//! props:
//!
//! * [`bialg`]: matrices under product and block-diagonal sum. Width of a
//!   matrix is governed by the ranks of its block factors, and this module
//!   builds certified decompositions achieving those bounds.
//! * [`opengraph`]: graphs with boundaries, composed along edges with the
//!   connectivity handled by matrix algebra. Width here captures rank width
//!   of graphs up to a factor of two, and the translations in both
//!   directions are executable and checkable.
//!
//! [`rankdec`] contains exact rank-width solvers (subset dynamic programming
//! plus a brute-force tree enumeration used as an independent oracle), and
//! [`linalg`] the exact GF(2)/ℚ linear algebra underneath everything.
//!
//! All core types are generic over the [`linalg::Scalar`] field; the aliases
//! below fix the two concrete instantiations.

pub mod bialg;
pub mod decomp;
pub mod error;
pub mod linalg;
pub mod opengraph;
pub mod rankdec;
pub mod sample;

pub use error::{Error, Result};
pub use linalg::{Gf2, Matrix, Mode, Rat, Scalar};

/// Matrix over the two-element field.
pub type Gf2Matrix = linalg::Matrix<Gf2>;
/// Matrix over arbitrary-precision rationals.
pub type RatMatrix = linalg::Matrix<Rat>;

/// Decomposition of a GF(2) matrix in the matrix prop.
pub type Gf2MatrixDecomposition = decomp::Decomposition<Gf2Matrix>;
/// Decomposition of a rational matrix in the matrix prop.
pub type RatMatrixDecomposition = decomp::Decomposition<RatMatrix>;

/// Graph with dangling edges over GF(2) (simple graphs).
pub type Gf2Dangling = rankdec::DanglingGraph<Gf2>;
/// Graph with dangling edges over ℚ (multigraphs).
pub type RatDangling = rankdec::DanglingGraph<Rat>;

/// Graph with boundaries over GF(2).
pub type Gf2BoundedGraph = opengraph::BoundedGraph<Gf2>;
/// Graph with boundaries over ℚ.
pub type RatBoundedGraph = opengraph::BoundedGraph<Rat>;
