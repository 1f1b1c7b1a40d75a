//! Seeded random instances for tests and the CLI generator. Everything here
//! is deterministic given the RNG state.

use rand::Rng;

use crate::linalg::{Matrix, Scalar, SymClass};
use crate::opengraph::BoundedGraph;
use crate::rankdec::DanglingGraph;

/// Random matrix with natural entries in `0..=max_entry` (reduced into the
/// field, so GF(2) sees parities).
pub fn random_matrix<S: Scalar>(
    rng: &mut impl Rng,
    rows: usize,
    cols: usize,
    max_entry: u64,
) -> Matrix<S> {
    Matrix::from_fn(rows, cols, |_, _| {
        S::from_nat(rng.gen_range(0..=max_entry))
    })
}

/// Random simple graph as a strictly-upper-triangular adjacency
/// representative over `n` vertices.
pub fn random_graph<S: Scalar>(rng: &mut impl Rng, n: usize, edge_prob: f64) -> SymClass<S> {
    let mut rep = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(edge_prob) {
                rep.set(i, j, S::from_nat(1));
            }
        }
    }
    SymClass::new(rep).expect("square by construction")
}

/// Random graph with dangling edges: a random graph plus a random 0/1
/// boundary matrix over `ports` ports.
pub fn random_dangling<S: Scalar>(
    rng: &mut impl Rng,
    n: usize,
    ports: usize,
    edge_prob: f64,
) -> DanglingGraph<S> {
    let adjacency = random_graph(rng, n, edge_prob);
    let boundary = Matrix::from_fn(n, ports, |_, _| {
        if rng.gen_bool(edge_prob) {
            S::from_nat(1)
        } else {
            S::from_nat(0)
        }
    });
    DanglingGraph::new(adjacency, boundary).expect("shapes agree by construction")
}

/// Random graph with boundaries on up to `max_vertices` vertices and small
/// arities, dense enough to exercise every component.
pub fn random_bounded_graph<S: Scalar>(
    rng: &mut impl Rng,
    max_vertices: usize,
    max_arity: usize,
    max_entry: u64,
) -> BoundedGraph<S> {
    let k = rng.gen_range(0..=max_vertices);
    let n = rng.gen_range(0..=max_arity);
    let m = rng.gen_range(0..=max_arity);
    let g = Matrix::from_fn(k, k, |i, j| {
        if j > i {
            S::from_nat(rng.gen_range(0..=max_entry))
        } else {
            S::from_nat(0)
        }
    });
    let l = random_matrix(rng, k, n, max_entry);
    let r = random_matrix(rng, k, m, max_entry);
    let p = random_matrix(rng, m, n, max_entry);
    let f = Matrix::from_fn(m, m, |i, j| {
        if j > i {
            S::from_nat(rng.gen_range(0..=max_entry))
        } else {
            S::from_nat(0)
        }
    });
    BoundedGraph::new(n, m, g, l, r, p, f).expect("shapes agree by construction")
}
