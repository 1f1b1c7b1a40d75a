//! Graphs with dangling edges, rank decompositions over unrooted subcubic
//! trees, and their rooted recursive counterpart whose node labels are
//! derived, never stored: a node over vertex sets `V1 | V2` hands each child
//! its rows of the ambient boundary extended by the cross-edge matrix. That
//! makes the defining block conditions hold by construction, and boundary
//! surgery reduces to "same shape, new root graph".

mod solve;
mod translate;

pub mod io;

pub use solve::{rrwd_exact, rwd_enumerate_oracle, rwd_exact, SolverCaps};
pub use translate::{subtree_boundary_rank, to_rank_dec, to_recursive, Side};

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, SymClass};

/// A graph with dangling edges: an adjacency class on `k` vertices plus a
/// `k x n` matrix recording which vertex dangles to which of `n` ports.
#[derive(Clone, Debug, PartialEq)]
pub struct DanglingGraph<S> {
    adjacency: SymClass<S>,
    boundary: Matrix<S>,
}

impl<S: Scalar> DanglingGraph<S> {
    pub fn new(adjacency: SymClass<S>, boundary: Matrix<S>) -> Result<Self> {
        if boundary.rows() != adjacency.size() {
            return Err(Error::InvalidInput(format!(
                "boundary has {} rows for {} vertices",
                boundary.rows(),
                adjacency.size()
            )));
        }
        Ok(DanglingGraph { adjacency, boundary })
    }

    /// A graph with no ports.
    pub fn closed(adjacency: SymClass<S>) -> Self {
        let k = adjacency.size();
        DanglingGraph {
            adjacency,
            boundary: Matrix::zeros(k, 0),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.size()
    }

    pub fn port_count(&self) -> usize {
        self.boundary.cols()
    }

    pub fn adjacency(&self) -> &SymClass<S> {
        &self.adjacency
    }

    pub fn boundary(&self) -> &Matrix<S> {
        &self.boundary
    }

    /// Same graph, new boundary matrix.
    pub fn with_boundary(&self, boundary: Matrix<S>) -> Result<Self> {
        DanglingGraph::new(self.adjacency.clone(), boundary)
    }
}

/// Cross-edge matrix of a vertex bipartition: entry `(i, j)` is the
/// multiplicity between the `i`-th vertex of `part` and the `j`-th vertex of
/// the complement, read off the symmetrized adjacency.
pub fn cut_matrix<S: Scalar>(graph: &SymClass<S>, part: &BTreeSet<usize>) -> Result<Matrix<S>> {
    let k = graph.size();
    for &v in part {
        if v >= k {
            return Err(Error::IndexOutOfRange(format!("vertex {v} of {k}")));
        }
    }
    let rows: Vec<usize> = part.iter().copied().collect();
    let cols: Vec<usize> = (0..k).filter(|v| !part.contains(v)).collect();
    graph.symmetrized().submatrix(&rows, &cols)
}

/// An unrooted subcubic tree whose leaves are in bijection with the graph's
/// vertices. A single-vertex graph gets the one-node tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankDecTree {
    node_count: usize,
    edges: Vec<(usize, usize)>,
    /// `leaf_vertex[node]` is the graph vertex at that leaf, if any.
    leaf_vertex: Vec<Option<usize>>,
}

impl RankDecTree {
    pub fn new(
        node_count: usize,
        edges: Vec<(usize, usize)>,
        leaf_vertex: Vec<Option<usize>>,
    ) -> Result<Self> {
        let t = RankDecTree {
            node_count,
            edges,
            leaf_vertex,
        };
        t.check_tree()?;
        Ok(t)
    }

    pub fn single_node(vertex: usize) -> Self {
        RankDecTree {
            node_count: 1,
            edges: Vec::new(),
            leaf_vertex: vec![Some(vertex)],
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn leaf_vertex(&self) -> &[Option<usize>] {
        &self.leaf_vertex
    }

    fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.node_count];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    fn check_tree(&self) -> Result<()> {
        if self.node_count == 0 {
            return Err(Error::InvalidInput("a tree has at least one node".into()));
        }
        if self.leaf_vertex.len() != self.node_count {
            return Err(Error::InvalidInput("leaf map length must match node count".into()));
        }
        if self.edges.len() + 1 != self.node_count {
            return Err(Error::InvalidInput(format!(
                "{} edges cannot span a tree on {} nodes",
                self.edges.len(),
                self.node_count
            )));
        }
        for &(a, b) in &self.edges {
            if a >= self.node_count || b >= self.node_count {
                return Err(Error::IndexOutOfRange(format!("tree edge ({a},{b})")));
            }
        }
        // connectivity
        let mut seen = vec![false; self.node_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                let next = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if !seen[next] {
                    seen[next] = true;
                    stack.push(next);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidInput("tree is not connected".into()));
        }
        let deg = self.degrees();
        if deg.iter().any(|&d| d > 3) {
            return Err(Error::InvalidInput("tree is not subcubic".into()));
        }
        for (node, slot) in self.leaf_vertex.iter().enumerate() {
            let is_leaf = deg[node] <= 1;
            if slot.is_some() != is_leaf {
                return Err(Error::InvalidInput(format!(
                    "node {node} has degree {} but leaf label {slot:?}",
                    deg[node]
                )));
            }
        }
        Ok(())
    }

    /// Is the leaf labelling a bijection with `0..k`?
    pub fn check_bijection(&self, k: usize) -> Result<()> {
        let mut seen = vec![false; k];
        let mut count = 0;
        for slot in self.leaf_vertex.iter().flatten() {
            if *slot >= k || seen[*slot] {
                return Err(Error::InvalidInput(format!(
                    "leaf labels are not a bijection with 0..{k}"
                )));
            }
            seen[*slot] = true;
            count += 1;
        }
        if count != k {
            return Err(Error::InvalidInput(format!(
                "{count} leaves label {k} vertices"
            )));
        }
        Ok(())
    }

    /// The graph vertices on the side of `edges[idx]` containing its first
    /// endpoint, after deleting that edge.
    pub fn edge_side(&self, idx: usize) -> Result<BTreeSet<usize>> {
        let &(root, cut_to) = self
            .edges
            .get(idx)
            .ok_or_else(|| Error::IndexOutOfRange(format!("tree edge {idx}")))?;
        let mut seen = vec![false; self.node_count];
        seen[root] = true;
        seen[cut_to] = true; // blocked
        let mut out = BTreeSet::new();
        let mut stack = vec![root];
        if let Some(v) = self.leaf_vertex[root] {
            out.insert(v);
        }
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                if (a, b) == self.edges[idx] || (b, a) == self.edges[idx] {
                    continue;
                }
                let next = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if !seen[next] {
                    seen[next] = true;
                    if let Some(gv) = self.leaf_vertex[next] {
                        out.insert(gv);
                    }
                    stack.push(next);
                }
            }
        }
        Ok(out)
    }
}

/// Width of a rank decomposition: the maximum, over tree edges, of the rank
/// of the cut matrix of the bipartition that edge induces.
pub fn rank_dec_width<S: Scalar>(graph: &SymClass<S>, tree: &RankDecTree) -> Result<usize> {
    tree.check_bijection(graph.size())?;
    let mut width = 0;
    for idx in 0..tree.edges().len() {
        let part = tree.edge_side(idx)?;
        width = width.max(cut_matrix(graph, &part)?.rank());
    }
    Ok(width)
}

/// The rooted binary shape of a recursive rank decomposition; leaves carry
/// vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    Leaf(usize),
    Branch(Box<Shape>, Box<Shape>),
}

impl Shape {
    pub fn branch(l: Shape, r: Shape) -> Shape {
        Shape::Branch(Box::new(l), Box::new(r))
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Shape::Leaf(_) => 1,
            Shape::Branch(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// Vertices in left-to-right leaf order.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<usize>) {
        match self {
            Shape::Leaf(v) => out.push(*v),
            Shape::Branch(l, r) => {
                l.collect(out);
                r.collect(out);
            }
        }
    }

    /// Right comb over the given vertices; `None` when empty.
    pub fn comb(vertices: &[usize]) -> Option<Shape> {
        let (&first, rest) = vertices.split_first()?;
        match Shape::comb(rest) {
            None => Some(Shape::Leaf(first)),
            Some(tail) => Some(Shape::branch(Shape::Leaf(first), tail)),
        }
    }

    pub fn offset(&self, delta: usize) -> Shape {
        match self {
            Shape::Leaf(v) => Shape::Leaf(v + delta),
            Shape::Branch(l, r) => Shape::branch(l.offset(delta), r.offset(delta)),
        }
    }
}

/// A recursive rank decomposition: the root graph plus a shape; every node
/// label is derived on demand per the block rules, so the side conditions
/// hold by construction.
#[derive(Clone, Debug)]
pub struct RecRankDec<S> {
    graph: DanglingGraph<S>,
    shape: Option<Shape>,
}

impl<S: Scalar> RecRankDec<S> {
    pub fn new(graph: DanglingGraph<S>, shape: Option<Shape>) -> Result<Self> {
        let k = graph.vertex_count();
        match &shape {
            None => {
                if k != 0 {
                    return Err(Error::InvalidInput(format!(
                        "a decomposition of {k} vertices needs a shape"
                    )));
                }
            }
            Some(s) => {
                let mut leaves = s.leaves();
                leaves.sort_unstable();
                let expect: Vec<usize> = (0..k).collect();
                if leaves != expect {
                    return Err(Error::InvalidInput(format!(
                        "shape leaves must cover 0..{k} exactly"
                    )));
                }
            }
        }
        Ok(RecRankDec { graph, shape })
    }

    pub fn graph(&self) -> &DanglingGraph<S> {
        &self.graph
    }

    pub fn shape(&self) -> Option<&Shape> {
        self.shape.as_ref()
    }

    /// Same shape over a new root graph with the given boundary.
    pub fn with_boundary(&self, boundary: Matrix<S>) -> Result<Self> {
        Ok(RecRankDec {
            graph: self.graph.with_boundary(boundary)?,
            shape: self.shape.clone(),
        })
    }

    /// Same shape over an entirely new root graph (matching vertex count).
    pub fn with_graph(&self, graph: DanglingGraph<S>) -> Result<Self> {
        if graph.vertex_count() != self.graph.vertex_count() {
            return Err(Error::InvalidInput(
                "replacement graph must keep the vertex count".into(),
            ));
        }
        Ok(RecRankDec {
            graph,
            shape: self.shape.clone(),
        })
    }

    /// Width per the recursion: the rank of the boundary at this node,
    /// maximised with the widths of the two derived children. Equivalently
    /// the maximum derived boundary rank over all subtrees.
    pub fn width(&self) -> usize {
        match &self.shape {
            None => self.graph.boundary().rank(),
            Some(shape) => {
                let sym = self.graph.adjacency().symmetrized();
                let verts = shape.leaves();
                let rows = verts.clone();
                let cols: Vec<usize> = (0..self.graph.boundary().cols()).collect();
                let bnd = self
                    .graph
                    .boundary()
                    .submatrix(&rows, &cols)
                    .expect("leaf order is in range");
                node_width(shape, &verts, &bnd, &sym)
            }
        }
    }

    /// The derived child graphs of the root split, in leaf order: each child
    /// keeps its rows of the boundary and gains the cross-edge columns.
    pub fn root_children(&self) -> Option<(DanglingGraph<S>, DanglingGraph<S>)> {
        let Some(Shape::Branch(l, _)) = &self.shape else {
            return None;
        };
        let sym = self.graph.adjacency().symmetrized();
        let verts = self.shape.as_ref().unwrap().leaves();
        let cols: Vec<usize> = (0..self.graph.boundary().cols()).collect();
        let bnd = self
            .graph
            .boundary()
            .submatrix(&verts, &cols)
            .expect("in range");
        let (g1, g2) = derive_children(
            l.leaf_count(),
            &verts,
            &bnd,
            &sym,
            self.graph.adjacency().rep(),
        );
        Some((g1, g2))
    }
}

fn node_width<S: Scalar>(shape: &Shape, verts: &[usize], bnd: &Matrix<S>, sym: &Matrix<S>) -> usize {
    let here = bnd.rank();
    match shape {
        Shape::Leaf(_) => here,
        Shape::Branch(l, r) => {
            let k1 = l.leaf_count();
            let (v1, v2) = verts.split_at(k1);
            let (b1, b2) = split_boundaries(k1, verts, bnd, sym);
            here.max(node_width(l, v1, &b1, sym))
                .max(node_width(r, v2, &b2, sym))
        }
    }
}

/// `B1 = (A1 | C)`, `B2 = (A2 | C^T)` where `A_i` are the rows of the
/// ambient boundary and `C` the cross-edge block of the symmetrized
/// adjacency.
pub(crate) fn split_boundaries<S: Scalar>(
    k1: usize,
    verts: &[usize],
    bnd: &Matrix<S>,
    sym: &Matrix<S>,
) -> (Matrix<S>, Matrix<S>) {
    let (v1, v2) = verts.split_at(k1);
    let all_cols: Vec<usize> = (0..bnd.cols()).collect();
    let a1 = bnd
        .submatrix(&(0..k1).collect::<Vec<_>>(), &all_cols)
        .expect("in range");
    let a2 = bnd
        .submatrix(&(k1..verts.len()).collect::<Vec<_>>(), &all_cols)
        .expect("in range");
    let c = sym.submatrix(v1, v2).expect("in range");
    let b1 = a1.hstack(&c).expect("row counts agree");
    let b2 = a2.hstack(&c.transpose()).expect("row counts agree");
    (b1, b2)
}

pub(crate) fn derive_children<S: Scalar>(
    k1: usize,
    verts: &[usize],
    bnd: &Matrix<S>,
    sym: &Matrix<S>,
    rep: &Matrix<S>,
) -> (DanglingGraph<S>, DanglingGraph<S>) {
    let (v1, v2) = verts.split_at(k1);
    let (b1, b2) = split_boundaries(k1, verts, bnd, sym);
    let g1 = SymClass::new(rep.submatrix(v1, v1).expect("in range")).expect("square");
    let g2 = SymClass::new(rep.submatrix(v2, v2).expect("in range")).expect("square");
    (
        DanglingGraph {
            adjacency: g1,
            boundary: b1,
        },
        DanglingGraph {
            adjacency: g2,
            boundary: b2,
        },
    )
}
