//! Constructions of width-bounded decompositions of matrices. The central
//! routine peels one output row at a time through a copy-and-accumulate
//! gadget, keeping every cut at most one wire above the smaller dimension;
//! rank factorization then turns that into a cut at the rank.

use num_traits::ToPrimitive;

use super::{Generator, MatrixProp};
use crate::decomp::Decomposition;
use crate::error::{Error, Result};
use crate::linalg::{full_rank_factorization, Matrix, Mode, Scalar};

type Dec<S> = Decomposition<Matrix<S>>;

/// Longest scalar the copy/add diamond chain will be unrolled for.
const MAX_CHAIN: u64 = 1 << 16;

fn leaf<S: Scalar>(g: Generator) -> Dec<S> {
    Decomposition::leaf(g.matrix())
}

/// Right-nested tensor chain of `n` copies of one generator; `None` for 0.
fn gen_chain<S: Scalar>(g: Generator, n: usize) -> Option<Dec<S>> {
    let mut out: Option<Dec<S>> = None;
    for _ in 0..n {
        out = Some(match out {
            None => leaf(g),
            Some(rest) => Decomposition::tensor(leaf(g), rest),
        });
    }
    out
}

fn id_chain<S: Scalar>(n: usize) -> Option<Dec<S>> {
    gen_chain(Generator::Id, n)
}

fn tensor_opt<S: Scalar>(a: Option<Dec<S>>, b: Option<Dec<S>>) -> Option<Dec<S>> {
    match (a, b) {
        (None, x) => x,
        (x, None) => x,
        (Some(a), Some(b)) => Some(Decomposition::tensor(a, b)),
    }
}

/// Decomposition of the `1 x 1` matrix `[k]` of width at most 2: `0` is
/// delete-then-create, `1` is the identity wire, and `k >= 2` chains `k - 1`
/// copy/add diamonds so that no cut exceeds two wires.
pub fn scalar_decomposition<S: Scalar>(k: u64) -> Result<Dec<S>> {
    if S::MODE == Mode::Gf2 && k >= 2 {
        return Err(Error::UnsupportedMode(format!(
            "scalar {k} is not a GF(2) value; use 0 or 1"
        )));
    }
    scalar_value_decomposition(&S::from_nat(k))
}

/// As `scalar_decomposition`, but for an arbitrary field element. Values
/// outside ℕ have no expression in the generators: they come back as a bare
/// matrix leaf, which `leaves_atomic` reports and width still counts as 1.
pub fn scalar_value_decomposition<S: Scalar>(value: &S) -> Result<Dec<S>> {
    if value.is_zero() {
        return Ok(Decomposition::compose(
            leaf(Generator::Discard),
            0,
            leaf(Generator::Zero),
        ));
    }
    if value.is_one() {
        return Ok(leaf(Generator::Id));
    }
    match value.as_integer().and_then(|n| n.to_u64()) {
        Some(k) if k <= MAX_CHAIN => {
            let mut d = leaf(Generator::Id);
            for _ in 1..k {
                d = Decomposition::compose(
                    leaf(Generator::Copy),
                    2,
                    Decomposition::compose(
                        Decomposition::tensor(leaf(Generator::Id), d),
                        2,
                        leaf(Generator::Add),
                    ),
                );
            }
            Ok(d)
        }
        Some(k) => Err(Error::CapExceeded(format!(
            "scalar {k} exceeds the diamond-chain cap {MAX_CHAIN}"
        ))),
        None => Ok(Decomposition::leaf(Matrix::from_fn(1, 1, |_, _| {
            value.clone()
        }))),
    }
}

/// Decomposition of the crossing `x_{1,m}: 1 + m -> m + 1` that moves the
/// first wire past the next `m`, out of atomic swaps. Cuts stay at `m + 1`.
fn swap_block<S: Scalar>(m: usize) -> Dec<S> {
    assert!(m >= 1);
    if m == 1 {
        return leaf(Generator::Swap);
    }
    Decomposition::compose(
        Decomposition::tensor(leaf(Generator::Swap), id_chain(m - 1).expect("m >= 2")),
        m + 1,
        Decomposition::tensor(leaf(Generator::Id), swap_block(m - 1)),
    )
}

/// Decomposition of the coherent copy `n -> 2n` (outputs are the inputs
/// twice over) with every cut at most `n + 1`, built by peeling one copied
/// wire at a time through the family `(x-block, z-block) -> (x, z, x)`.
pub fn copy_decomposition<S: Scalar>(n: usize) -> Result<Dec<S>> {
    if n == 0 {
        return Err(Error::InvalidInput("copy of zero wires".into()));
    }
    Ok(gamma_copy(n, 0))
}

/// `gamma_{n,m}: n + m -> n + m + n`, `(x, z) -> (x, z, x)`.
fn gamma_copy<S: Scalar>(n: usize, m: usize) -> Dec<S> {
    debug_assert!(n >= 1);
    if n == 1 {
        // (copy ⊗ id_m) ; (id ⊗ x_{1,m})
        let first = tensor_opt(Some(leaf(Generator::Copy)), id_chain(m)).expect("nonempty");
        if m == 0 {
            return first;
        }
        return Decomposition::compose(
            first,
            m + 2,
            Decomposition::tensor(leaf(Generator::Id), swap_block(m)),
        );
    }
    // copy the n-th wire, shuffle one copy past the z block, recurse
    let slice1 = tensor_opt(
        id_chain(n - 1),
        tensor_opt(Some(leaf(Generator::Copy)), id_chain(m)),
    )
    .expect("nonempty");
    let rest = Decomposition::tensor(gamma_copy(n - 1, m + 1), leaf(Generator::Id));
    if m == 0 {
        return Decomposition::compose(slice1, n + m + 1, rest);
    }
    let slice2 = tensor_opt(id_chain(n), Some(swap_block(m))).expect("nonempty");
    Decomposition::compose(
        slice1,
        n + m + 1,
        Decomposition::compose(slice2, n + m + 1, rest),
    )
}

/// The accumulate gadget `(acc, x) -> (x, acc + k*x)`, a `2 -> 2` block with
/// internal cuts of three wires.
fn accumulate_block<S: Scalar>(k: &S) -> Result<Dec<S>> {
    let scale = scalar_value_decomposition(k)?;
    Ok(Decomposition::compose(
        Decomposition::tensor(leaf(Generator::Id), leaf(Generator::Copy)),
        3,
        Decomposition::compose(
            Decomposition::tensor(leaf(Generator::Id), Decomposition::tensor(leaf(Generator::Id), scale)),
            3,
            Decomposition::compose(
                Decomposition::tensor(leaf(Generator::Swap), leaf(Generator::Id)),
                3,
                Decomposition::tensor(leaf(Generator::Id), leaf(Generator::Add)),
            ),
        ),
    ))
}

/// Decomposition of `x -> (x, a . x)` for a row vector `a` of length
/// `n >= 1`: the row is folded into a running accumulator that walks across
/// the wires, so no cut exceeds `n + 1`.
fn gamma_row<S: Scalar>(a: &[S]) -> Result<Dec<S>> {
    let n = a.len();
    debug_assert!(n >= 1);
    let seed = Decomposition::compose(
        leaf(Generator::Copy),
        2,
        Decomposition::tensor(leaf(Generator::Id), scalar_value_decomposition(&a[0])?),
    );
    let mut d = tensor_opt(Some(seed), id_chain(n - 1)).expect("nonempty");
    for (i, coeff) in a.iter().enumerate().skip(1) {
        let slice = tensor_opt(
            id_chain(i),
            tensor_opt(Some(accumulate_block(coeff)?), id_chain(n - i - 1)),
        )
        .expect("nonempty");
        d = Decomposition::compose(d, n + 1, slice);
    }
    Ok(d)
}

/// Reverse a decomposition: transpose every leaf and flip composition. The
/// generators are closed under transpose, widths are unchanged, and the
/// evaluation is the transposed matrix.
pub fn transpose_decomposition<S: Scalar>(d: &Dec<S>) -> Dec<S> {
    match d {
        Decomposition::Leaf(m) => Decomposition::Leaf(m.transpose()),
        Decomposition::Tensor(l, r) => {
            Decomposition::tensor(transpose_decomposition(l), transpose_decomposition(r))
        }
        Decomposition::Compose { left, cut, right } => Decomposition::compose(
            transpose_decomposition(right),
            *cut,
            transpose_decomposition(left),
        ),
    }
}

/// A valid decomposition of any matrix with width at most `min(m, n) + 1`:
/// rows (or dually columns) are peeled off one at a time, each through the
/// copy-and-accumulate walk whose cuts stay one above the peeled side.
pub fn bound_by_dims<S: Scalar>(f: &Matrix<S>) -> Result<Dec<S>> {
    let (m, n) = (f.rows(), f.cols());
    if m == 0 && n == 0 {
        return Ok(Decomposition::compose(
            leaf(Generator::Zero),
            1,
            leaf(Generator::Discard),
        ));
    }
    if m == 0 {
        return Ok(gen_chain(Generator::Discard, n).expect("n >= 1"));
    }
    if n == 0 {
        return Ok(gen_chain(Generator::Zero, m).expect("m >= 1"));
    }
    if m == 1 && n == 1 {
        return scalar_value_decomposition(f.get(0, 0));
    }
    if m < n {
        return Ok(transpose_decomposition(&bound_by_dims(&f.transpose())?));
    }
    // n <= m and m >= 2: peel the highest-index output row
    let last = f.row(m - 1).to_vec();
    let rest = f.submatrix(&(0..m - 1).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>())?;
    Ok(Decomposition::compose(
        gamma_row(&last)?,
        n + 1,
        Decomposition::tensor(bound_by_dims(&rest)?, leaf(Generator::Id)),
    ))
}

/// Decomposition cut at the rank: factor `f = l * r` with inner dimension
/// `rank(f)` and decompose both factors by their dimensions, for a width of
/// at most `rank(f) + 1`. Identities come back as plain wire bundles.
pub fn rank_decomposition_of_matrix<S: Scalar>(f: &Matrix<S>) -> Result<Dec<S>> {
    let (m, n) = (f.rows(), f.cols());
    if m == n && n >= 1 && *f == Matrix::identity(n) {
        return Ok(id_chain(n).expect("n >= 1"));
    }
    let factors = full_rank_factorization(f);
    let r = factors.inner_dim();
    if r == 0 {
        return match (n, m) {
            (0, 0) => Ok(Decomposition::compose(
                leaf(Generator::Zero),
                1,
                leaf(Generator::Discard),
            )),
            (0, _) => Ok(gen_chain(Generator::Zero, m).expect("m >= 1")),
            (_, 0) => Ok(gen_chain(Generator::Discard, n).expect("n >= 1")),
            _ => Ok(Decomposition::compose(
                gen_chain(Generator::Discard, n).expect("n >= 1"),
                0,
                gen_chain(Generator::Zero, m).expect("m >= 1"),
            )),
        };
    }
    Ok(Decomposition::compose(
        bound_by_dims(&factors.right)?,
        r,
        bound_by_dims(&factors.left)?,
    ))
}

/// The finest block-diagonal factorization `f = f_1 ⊗ ... ⊗ f_k`, scanning
/// split points left to right and recursing greedily. Zero-arity factors
/// come out consumer before producer, which pins the zero-matrix case down
/// to one canonical answer.
pub fn tensor_factorize<S: Scalar>(f: &Matrix<S>) -> Vec<Matrix<S>> {
    let (m, n) = (f.rows(), f.cols());
    if m == 0 && n == 0 {
        return Vec::new();
    }
    for i in 0..=m {
        for j in 0..=n {
            if (i == 0 && j == 0) || (i == m && j == n) {
                continue;
            }
            let top_right_zero =
                (0..i).all(|r| (j..n).all(|c| f.get(r, c).is_zero()));
            let bottom_left_zero =
                (i..m).all(|r| (0..j).all(|c| f.get(r, c).is_zero()));
            if top_right_zero && bottom_left_zero {
                let rows: Vec<usize> = (0..i).collect();
                let cols: Vec<usize> = (0..j).collect();
                let first = f.submatrix(&rows, &cols).expect("in range");
                let rows2: Vec<usize> = (i..m).collect();
                let cols2: Vec<usize> = (j..n).collect();
                let rest = f.submatrix(&rows2, &cols2).expect("in range");
                let mut out = vec![first];
                out.extend(tensor_factorize(&rest));
                return out;
            }
        }
    }
    vec![f.clone()]
}

/// Tensor of rank decompositions over the finest block factorization: width
/// at most `max_i rank(f_i) + 1`, the certified upper bound for a matrix's
/// monoidal width.
pub fn best_decomposition<S: Scalar>(f: &Matrix<S>) -> Result<Dec<S>> {
    let factors = tensor_factorize(f);
    let mut parts = factors
        .iter()
        .map(rank_decomposition_of_matrix)
        .collect::<Result<Vec<_>>>()?;
    let Some(mut d) = parts.pop() else {
        // the 0 x 0 identity
        return Ok(Decomposition::compose(
            leaf(Generator::Zero),
            1,
            leaf(Generator::Discard),
        ));
    };
    while let Some(prev) = parts.pop() {
        d = Decomposition::tensor(prev, d);
    }
    Ok(d)
}

/// Shorthand for the prop the constructions above live in.
pub fn prop<S: Scalar>() -> MatrixProp<S> {
    MatrixProp::new()
}
