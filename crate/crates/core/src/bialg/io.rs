//! JSON form of matrix-prop decompositions. Leaves are either a generator
//! name ("copy", "add", ...) or `{"matrix": [[..]]}`.

use serde_json::{json, Value};

use super::Generator;
use crate::decomp::Decomposition;
use crate::error::{Error, Result};
use crate::jsonio::{matrix_from_value, matrix_to_value};
use crate::linalg::{Matrix, Scalar};

pub fn leaf_to_value<S: Scalar>(m: &Matrix<S>) -> Value {
    match Generator::from_matrix(m) {
        Some(g) => json!(g.name()),
        None => json!({ "matrix": matrix_to_value(m) }),
    }
}

pub fn leaf_from_value<S: Scalar>(v: &Value) -> Result<Matrix<S>> {
    if let Some(name) = v.as_str() {
        return Generator::from_name(name)
            .map(|g| g.matrix())
            .ok_or_else(|| Error::InvalidInput(format!("unknown generator {name:?}")));
    }
    if let Some(inner) = v.get("matrix") {
        return matrix_from_value(inner, None);
    }
    Err(Error::InvalidInput(format!(
        "matrix-prop leaf must be a generator name or {{\"matrix\": ...}}, got {v}"
    )))
}

pub fn decomposition_to_value<S: Scalar>(d: &Decomposition<Matrix<S>>) -> Value {
    d.to_json(&leaf_to_value)
}

pub fn decomposition_from_value<S: Scalar>(v: &Value) -> Result<Decomposition<Matrix<S>>> {
    Decomposition::from_json(v, &leaf_from_value::<S>)
}
