//! Generic monoidal decomposition trees with width semantics, parameterized
//! over a prop interface so both the matrix prop and the prop of graphs with
//! boundaries reuse them.
//!
//! A decomposition is a binary tree: leaves carry atomic morphisms, tensor
//! nodes are free, and each composition node records the arity it cuts over.
//! The width of the tree is the cost of its most expensive node.

use serde_json::{json, Value};

use crate::error::{Error, Result};

/// What a client prop must supply: arities, composition, tensor, equality,
/// the atom predicate, and the weight function. Object weights must be
/// additive: `w(n + m) = w(n) + w(m)` and `w(0) = 0`.
pub trait Prop {
    type M: Clone;

    fn dom(&self, f: &Self::M) -> usize;
    fn cod(&self, f: &Self::M) -> usize;
    fn compose(&self, f: &Self::M, g: &Self::M) -> Result<Self::M>;
    fn tensor(&self, f: &Self::M, g: &Self::M) -> Self::M;
    fn equal(&self, f: &Self::M, g: &Self::M) -> Result<bool>;
    fn is_atom(&self, f: &Self::M) -> bool;
    /// Weight of a morphism used at a leaf.
    fn weight(&self, f: &Self::M) -> usize;
    /// Weight of an object (a wire bundle of the given arity).
    fn object_weight(&self, n: usize) -> usize {
        n
    }
    /// Human-readable node label for rendering.
    fn label(&self, f: &Self::M) -> String;
}

/// A monoidal decomposition: a binary tree of sequential cuts and monoidal
/// products over atomic leaves. Cut arities are stored explicitly so that
/// malformed certificates are detectable rather than silently re-derived.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition<M> {
    Leaf(M),
    Tensor(Box<Decomposition<M>>, Box<Decomposition<M>>),
    Compose {
        left: Box<Decomposition<M>>,
        cut: usize,
        right: Box<Decomposition<M>>,
    },
}

impl<M: Clone> Decomposition<M> {
    pub fn leaf(m: M) -> Self {
        Decomposition::Leaf(m)
    }

    pub fn tensor(left: Decomposition<M>, right: Decomposition<M>) -> Self {
        Decomposition::Tensor(Box::new(left), Box::new(right))
    }

    pub fn compose(left: Decomposition<M>, cut: usize, right: Decomposition<M>) -> Self {
        Decomposition::Compose {
            left: Box::new(left),
            cut,
            right: Box::new(right),
        }
    }

    /// Width of the tree: leaves cost their atom weight, tensor nodes the
    /// maximum of their children, composition nodes additionally the weight
    /// of the cut object.
    pub fn width<P: Prop<M = M>>(&self, prop: &P) -> usize {
        match self {
            Decomposition::Leaf(m) => prop.weight(m),
            Decomposition::Tensor(l, r) => l.width(prop).max(r.width(prop)),
            Decomposition::Compose { left, cut, right } => left
                .width(prop)
                .max(prop.object_weight(*cut))
                .max(right.width(prop)),
        }
    }

    /// The same number computed through the labelled-tree view: flatten all
    /// nodes to their labels (atoms, tensor nodes of weight zero, and cut
    /// objects) and take the maximum label weight.
    pub fn max_node_width<P: Prop<M = M>>(&self, prop: &P) -> usize {
        let mut weights = Vec::new();
        self.collect_node_weights(prop, &mut weights);
        weights.into_iter().max().unwrap_or(0)
    }

    fn collect_node_weights<P: Prop<M = M>>(&self, prop: &P, out: &mut Vec<usize>) {
        match self {
            Decomposition::Leaf(m) => out.push(prop.weight(m)),
            Decomposition::Tensor(l, r) => {
                out.push(0);
                l.collect_node_weights(prop, out);
                r.collect_node_weights(prop, out);
            }
            Decomposition::Compose { left, cut, right } => {
                out.push(prop.object_weight(*cut));
                left.collect_node_weights(prop, out);
                right.collect_node_weights(prop, out);
            }
        }
    }

    /// Fold the tree back into a morphism, checking arities at every node.
    pub fn evaluate<P: Prop<M = M>>(&self, prop: &P) -> Result<M> {
        self.evaluate_at(prop, &mut Vec::new())
    }

    fn evaluate_at<P: Prop<M = M>>(&self, prop: &P, path: &mut Vec<&'static str>) -> Result<M> {
        match self {
            Decomposition::Leaf(m) => Ok(m.clone()),
            Decomposition::Tensor(l, r) => {
                path.push("l");
                let lv = l.evaluate_at(prop, path)?;
                path.pop();
                path.push("r");
                let rv = r.evaluate_at(prop, path)?;
                path.pop();
                Ok(prop.tensor(&lv, &rv))
            }
            Decomposition::Compose { left, cut, right } => {
                path.push("l");
                let lv = left.evaluate_at(prop, path)?;
                path.pop();
                path.push("r");
                let rv = right.evaluate_at(prop, path)?;
                path.pop();
                if prop.cod(&lv) != *cut || prop.dom(&rv) != *cut {
                    return Err(Error::ArityMismatch {
                        path: if path.is_empty() {
                            "root".into()
                        } else {
                            path.join(".")
                        },
                        detail: format!(
                            "composition over {} wires joins cod {} with dom {}",
                            cut,
                            prop.cod(&lv),
                            prop.dom(&rv)
                        ),
                    });
                }
                prop.compose(&lv, &rv)
            }
        }
    }

    /// True iff the tree evaluates to a morphism prop-equal to `f`. Arity
    /// failures inside the tree count as invalid, not as errors.
    pub fn validate<P: Prop<M = M>>(&self, prop: &P, f: &M) -> Result<bool> {
        match self.evaluate(prop) {
            Ok(v) => prop.equal(&v, f),
            Err(Error::ArityMismatch { .. }) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Every leaf morphism, left to right.
    pub fn leaves(&self) -> Vec<&M> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a M>) {
        match self {
            Decomposition::Leaf(m) => out.push(m),
            Decomposition::Tensor(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
            Decomposition::Compose { left, right, .. } => {
                left.collect_leaves(out);
                right.collect_leaves(out);
            }
        }
    }

    /// Do all leaves satisfy the prop's atom predicate?
    pub fn leaves_atomic<P: Prop<M = M>>(&self, prop: &P) -> bool {
        self.leaves().into_iter().all(|m| prop.is_atom(m))
    }

    pub fn map_leaves<N: Clone>(&self, f: &mut impl FnMut(&M) -> N) -> Decomposition<N> {
        match self {
            Decomposition::Leaf(m) => Decomposition::Leaf(f(m)),
            Decomposition::Tensor(l, r) => {
                Decomposition::tensor(l.map_leaves(f), r.map_leaves(f))
            }
            Decomposition::Compose { left, cut, right } => {
                Decomposition::compose(left.map_leaves(f), *cut, right.map_leaves(f))
            }
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            Decomposition::Leaf(_) => 1,
            Decomposition::Tensor(l, r) => 1 + l.node_count() + r.node_count(),
            Decomposition::Compose { left, right, .. } => {
                1 + left.node_count() + right.node_count()
            }
        }
    }

    /// JSON form: `{"leaf": payload}`, `{"tensor": [l, r]}`, or
    /// `{"compose": {"cut": k, "left": l, "right": r}}`. The leaf payload
    /// format is owned by the client prop.
    pub fn to_json(&self, leaf: &impl Fn(&M) -> Value) -> Value {
        match self {
            Decomposition::Leaf(m) => json!({ "leaf": leaf(m) }),
            Decomposition::Tensor(l, r) => {
                json!({ "tensor": [l.to_json(leaf), r.to_json(leaf)] })
            }
            Decomposition::Compose { left, cut, right } => json!({
                "compose": {
                    "cut": cut,
                    "left": left.to_json(leaf),
                    "right": right.to_json(leaf),
                }
            }),
        }
    }

    pub fn from_json(v: &Value, leaf: &impl Fn(&Value) -> Result<M>) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::InvalidInput("decomposition node must be an object".into()))?;
        if let Some(payload) = obj.get("leaf") {
            return Ok(Decomposition::Leaf(leaf(payload)?));
        }
        if let Some(pair) = obj.get("tensor") {
            let arr = pair
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| Error::InvalidInput("tensor node expects [left, right]".into()))?;
            return Ok(Decomposition::tensor(
                Decomposition::from_json(&arr[0], leaf)?,
                Decomposition::from_json(&arr[1], leaf)?,
            ));
        }
        if let Some(c) = obj.get("compose") {
            let cut = c
                .get("cut")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::InvalidInput("compose node expects a numeric cut".into()))?;
            let left = c
                .get("left")
                .ok_or_else(|| Error::InvalidInput("compose node missing left".into()))?;
            let right = c
                .get("right")
                .ok_or_else(|| Error::InvalidInput("compose node missing right".into()))?;
            return Ok(Decomposition::compose(
                Decomposition::from_json(left, leaf)?,
                cut as usize,
                Decomposition::from_json(right, leaf)?,
            ));
        }
        Err(Error::InvalidInput(
            "decomposition node must be one of leaf/tensor/compose".into(),
        ))
    }

    /// DOT rendering with node labels `⊗`, `;k`, or the atom's own label.
    pub fn to_dot<P: Prop<M = M>>(&self, prop: &P) -> String {
        let mut out = String::from("graph decomposition {\n  node [shape=box];\n");
        let mut next = 0usize;
        self.dot_node(prop, &mut out, &mut next);
        out.push_str("}\n");
        out
    }

    fn dot_node<P: Prop<M = M>>(&self, prop: &P, out: &mut String, next: &mut usize) -> usize {
        let id = *next;
        *next += 1;
        match self {
            Decomposition::Leaf(m) => {
                out.push_str(&format!("  n{} [label=\"{}\"];\n", id, prop.label(m)));
            }
            Decomposition::Tensor(l, r) => {
                out.push_str(&format!("  n{} [label=\"⊗\"];\n", id));
                let a = l.dot_node(prop, out, next);
                let b = r.dot_node(prop, out, next);
                out.push_str(&format!("  n{id} -- n{a};\n  n{id} -- n{b};\n"));
            }
            Decomposition::Compose { left, cut, right } => {
                out.push_str(&format!("  n{} [label=\";{}\"];\n", id, cut));
                let a = left.dot_node(prop, out, next);
                let b = right.dot_node(prop, out, next);
                out.push_str(&format!("  n{id} -- n{a};\n  n{id} -- n{b};\n"));
            }
        }
        id
    }
}
