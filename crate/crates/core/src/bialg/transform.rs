//! Width-monotone surgery on decompositions: deleting boundary wires never
//! costs width, and a decomposition of a block-diagonal matrix can always be
//! re-rooted at a tensor node without getting wider.

use std::collections::BTreeSet;

use super::build::{rank_decomposition_of_matrix, transpose_decomposition};
use super::{Generator, MatrixProp};
use crate::decomp::{Decomposition, Prop};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};

type Dec<S> = Decomposition<Matrix<S>>;

/// Decomposition of `f ; (id ⊗ discard_k)` — the last `k` outputs deleted —
/// of width at most the width of `d`.
pub fn discard_transform<S: Scalar>(d: &Dec<S>, k: usize) -> Result<Dec<S>> {
    let prop = MatrixProp::<S>::new();
    let m = prop.cod(&d.evaluate(&prop)?);
    if k > m {
        return Err(Error::IndexOutOfRange(format!(
            "cannot discard {k} of {m} outputs"
        )));
    }
    let drop: BTreeSet<usize> = (m - k..m).collect();
    discard_outputs(d, &drop)
}

/// Decomposition of `(id ⊗ zero_k) ; f` — the last `k` inputs fed zeros —
/// of width at most the width of `d`.
pub fn zero_transform<S: Scalar>(d: &Dec<S>, k: usize) -> Result<Dec<S>> {
    let prop = MatrixProp::<S>::new();
    let n = prop.dom(&d.evaluate(&prop)?);
    if k > n {
        return Err(Error::IndexOutOfRange(format!(
            "cannot zero {k} of {n} inputs"
        )));
    }
    let drop: BTreeSet<usize> = (n - k..n).collect();
    zero_inputs(d, &drop)
}

/// Delete an arbitrary set of output positions. Composition nodes pass the
/// deletion into their second factor; tensor nodes split it; at the leaves a
/// small rewrite table keeps everything atomic at no extra width.
pub(crate) fn discard_outputs<S: Scalar>(d: &Dec<S>, drop: &BTreeSet<usize>) -> Result<Dec<S>> {
    if drop.is_empty() {
        return Ok(d.clone());
    }
    let prop = MatrixProp::<S>::new();
    match d {
        Decomposition::Leaf(g) => discard_leaf(g, drop),
        Decomposition::Tensor(l, r) => {
            let m1 = prop.cod(&l.evaluate(&prop)?);
            let left_drop: BTreeSet<usize> = drop.iter().copied().filter(|&i| i < m1).collect();
            let right_drop: BTreeSet<usize> = drop
                .iter()
                .copied()
                .filter(|&i| i >= m1)
                .map(|i| i - m1)
                .collect();
            Ok(Decomposition::tensor(
                discard_outputs(l, &left_drop)?,
                discard_outputs(r, &right_drop)?,
            ))
        }
        Decomposition::Compose { left, cut, right } => Ok(Decomposition::compose(
            (**left).clone(),
            *cut,
            discard_outputs(right, drop)?,
        )),
    }
}

fn discard_leaf<S: Scalar>(g: &Matrix<S>, drop: &BTreeSet<usize>) -> Result<Dec<S>> {
    for &i in drop {
        if i >= g.rows() {
            return Err(Error::IndexOutOfRange(format!(
                "output {i} of a morphism with {} outputs",
                g.rows()
            )));
        }
    }
    let one = |g: Generator| Decomposition::leaf(g.matrix::<S>());
    let full = drop.len() == g.rows();
    Ok(match Generator::from_matrix(g) {
        Some(Generator::Copy) => {
            if full {
                one(Generator::Discard)
            } else {
                one(Generator::Id)
            }
        }
        Some(Generator::Id) => one(Generator::Discard),
        Some(Generator::Add) => {
            Decomposition::tensor(one(Generator::Discard), one(Generator::Discard))
        }
        Some(Generator::Zero) => {
            Decomposition::compose(one(Generator::Zero), 1, one(Generator::Discard))
        }
        Some(Generator::Swap) => {
            if full {
                Decomposition::tensor(one(Generator::Discard), one(Generator::Discard))
            } else if drop.contains(&0) {
                // keep the first input, delete the second
                Decomposition::tensor(one(Generator::Id), one(Generator::Discard))
            } else {
                Decomposition::tensor(one(Generator::Discard), one(Generator::Id))
            }
        }
        Some(Generator::Discard) => unreachable!("discard has no outputs to delete"),
        None => {
            let keep: Vec<usize> = (0..g.rows()).filter(|i| !drop.contains(i)).collect();
            let cols: Vec<usize> = (0..g.cols()).collect();
            Decomposition::leaf(g.submatrix(&keep, &cols)?)
        }
    })
}

/// Dual surgery through transposition: feeding zeros into inputs.
pub(crate) fn zero_inputs<S: Scalar>(d: &Dec<S>, drop: &BTreeSet<usize>) -> Result<Dec<S>> {
    Ok(transpose_decomposition(&discard_outputs(
        &transpose_decomposition(d),
        drop,
    )?))
}

/// Given a composition-rooted decomposition of `f1 ⊗ f2`, produce a
/// tensor-rooted one no wider: the cut of the root bounds the two ranks
/// from above, so rank decompositions of the factors fit below it, and a
/// rank-zero factor instead restricts the given tree to the other block.
pub fn tensor_root_transform<S: Scalar>(
    d: &Dec<S>,
    f1: &Matrix<S>,
    f2: &Matrix<S>,
) -> Result<Dec<S>> {
    let prop = MatrixProp::<S>::new();
    if !matches!(d, Decomposition::Compose { .. }) {
        return Err(Error::InvalidInput(
            "tensor_root_transform expects a composition-rooted decomposition".into(),
        ));
    }
    let whole = f1.direct_sum(f2);
    if d.evaluate(&prop)? != whole {
        return Err(Error::InvalidInput(
            "decomposition does not evaluate to f1 ⊗ f2".into(),
        ));
    }
    let (r1, r2) = (f1.rank(), f2.rank());
    if r1 > 0 && r2 > 0 {
        return Ok(Decomposition::tensor(
            rank_decomposition_of_matrix(f1)?,
            rank_decomposition_of_matrix(f2)?,
        ));
    }
    if r1 == 0 {
        // restrict d to the second block by deleting f1's boundary
        let out1: BTreeSet<usize> = (0..f1.rows()).collect();
        let in1: BTreeSet<usize> = (0..f1.cols()).collect();
        let d2 = zero_inputs(&discard_outputs(d, &out1)?, &in1)?;
        return Ok(Decomposition::tensor(rank_decomposition_of_matrix(f1)?, d2));
    }
    // r2 == 0: delete f2's boundary, which sits at the high positions
    let out2: BTreeSet<usize> = (f1.rows()..whole.rows()).collect();
    let in2: BTreeSet<usize> = (f1.cols()..whole.cols()).collect();
    let d1 = zero_inputs(&discard_outputs(d, &out2)?, &in2)?;
    Ok(Decomposition::tensor(d1, rank_decomposition_of_matrix(f2)?))
}
