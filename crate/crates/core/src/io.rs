//! Operator file format: `{"arity": k, "dim": 2^k, "entries": [[re, im], ...]}`
//! in row-major order, every number written with 17 significant digits.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::tensor::DenseOperator;

#[derive(Deserialize)]
struct OperatorFile {
    arity: usize,
    dim: usize,
    entries: Vec<[f64; 2]>,
}

fn number(x: f64) -> Result<String> {
    if !x.is_finite() {
        return Err(Error::NonFinite);
    }
    Ok(format!("{x:.16e}"))
}

pub fn operator_to_json(op: &DenseOperator) -> Result<String> {
    let mut out = format!(
        "{{\"arity\": {}, \"dim\": {}, \"entries\": [",
        op.arity(),
        op.dim()
    );
    for (i, e) in op.entries().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write!(out, "\n  [{}, {}]", number(e.re)?, number(e.im)?).expect("string write");
    }
    out.push_str("\n]}\n");
    Ok(out)
}

pub fn operator_from_json(text: &str) -> Result<DenseOperator> {
    let file: OperatorFile = serde_json::from_str(text)?;
    if file.arity == 0 || file.arity > 16 {
        return Err(Error::Format(format!("unsupported arity {}", file.arity)));
    }
    if file.dim != 1 << file.arity {
        return Err(Error::Format(format!(
            "dim {} does not match arity {}",
            file.dim, file.arity
        )));
    }
    let entries = file
        .entries
        .into_iter()
        .map(|[re, im]| Complex64::new(re, im))
        .collect();
    DenseOperator::new(file.arity, entries)
}

pub fn write_operator(path: impl AsRef<Path>, op: &DenseOperator) -> Result<()> {
    fs::write(path, operator_to_json(op)?)?;
    Ok(())
}

pub fn read_operator(path: impl AsRef<Path>) -> Result<DenseOperator> {
    operator_from_json(&fs::read_to_string(path)?)
}
