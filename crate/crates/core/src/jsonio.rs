//! Shared JSON conventions: matrices are arrays of arrays of integers, with
//! decimal strings once a value leaves the 64-bit range and `p/q` strings
//! for the rational values that can appear inside flagged certificates.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};

pub fn entry_to_value<S: Scalar>(s: &S) -> Value {
    match s.as_integer() {
        Some(n) => match n.to_i64() {
            Some(small) => json!(small),
            None => json!(n.to_string()),
        },
        None => json!(format!("{}", s)),
    }
}

pub fn entry_from_value<S: Scalar>(v: &Value) -> Result<S> {
    match v {
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| Error::InvalidInput(format!("entry {} is not an integer", n)))?;
            Ok(int_to_scalar(i))
        }
        Value::String(s) => parse_entry(s),
        _ => Err(Error::InvalidInput(format!(
            "matrix entry must be a number or string, got {}",
            v
        ))),
    }
}

fn int_to_scalar<S: Scalar>(i: i64) -> S {
    if i >= 0 {
        S::from_nat(i as u64)
    } else {
        -S::from_nat(i.unsigned_abs())
    }
}

fn parse_entry<S: Scalar>(s: &str) -> Result<S> {
    let mk_int = |txt: &str| -> Result<S> {
        let n: BigInt = txt
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad integer literal {:?}", txt)))?;
        Ok(S::from_bigint(&n))
    };
    match s.split_once('/') {
        None => mk_int(s),
        Some((num, den)) => {
            let n: S = mk_int(num)?;
            let d: S = mk_int(den)?;
            let inv = d
                .inverse()
                .ok_or_else(|| Error::InvalidInput(format!("zero denominator in {:?}", s)))?;
            Ok(n * inv)
        }
    }
}

pub fn matrix_to_value<S: Scalar>(m: &Matrix<S>) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array(m.row(i).iter().map(entry_to_value).collect()))
        .collect();
    Value::Array(rows)
}

/// Parse nested arrays. A matrix with zero rows has no intrinsic column
/// count, so callers with shape context pass `cols_hint`.
pub fn matrix_from_value<S: Scalar>(v: &Value, cols_hint: Option<usize>) -> Result<Matrix<S>> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::InvalidInput(format!("expected an array of rows, got {}", v)))?;
    let mut parsed: Vec<Vec<S>> = Vec::with_capacity(rows.len());
    for row in rows {
        let cells = row
            .as_array()
            .ok_or_else(|| Error::InvalidInput(format!("expected a row array, got {}", row)))?;
        parsed.push(cells.iter().map(entry_from_value).collect::<Result<_>>()?);
    }
    if parsed.is_empty() {
        return Ok(Matrix::zeros(0, cols_hint.unwrap_or(0)));
    }
    if let Some(c) = cols_hint {
        if parsed[0].len() != c {
            return Err(Error::InvalidInput(format!(
                "expected {} columns, found {}",
                c,
                parsed[0].len()
            )));
        }
    }
    Matrix::from_rows(parsed)
}
