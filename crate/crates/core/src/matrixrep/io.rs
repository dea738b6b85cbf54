//! Representation files:
//!
//! ```json
//! { "algebra": "A1+C^4", "degree": 5,
//!   "basis": [ { "label": "A1[0].e_1_2", "matrix": [[0, 1, ...], ...] }, ... ] }
//! ```
//!
//! Entries are JSON integers or `"p/q"` strings.

use std::io::Write;
use std::path::Path;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{natural_basis, IdealBlock, MatrixRep};
use crate::algebra::ReductiveAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{format_q, parse_q, QMatrix, Q};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepFile {
    pub algebra: String,
    pub degree: usize,
    pub basis: Vec<BasisEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BasisEntry {
    pub label: String,
    pub matrix: Vec<Vec<Value>>,
}

fn entry_to_json(x: &Q) -> Value {
    if x.is_integer() {
        if let Some(v) = x.numer().to_i64() {
            return Value::from(v);
        }
    }
    Value::from(format_q(x))
}

fn entry_from_json(v: &Value) -> Result<Q> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|i| Q::from_integer(i.into()))
            .ok_or_else(|| Error::Format(format!("non-integer number {n}; use \"p/q\""))),
        Value::String(s) => parse_q(s).ok_or_else(|| Error::Format(format!("bad rational `{s}`"))),
        other => Err(Error::Format(format!("unexpected matrix entry {other}"))),
    }
}

pub fn rep_to_json(r: &MatrixRep) -> RepFile {
    let basis = r
        .basis_labels()
        .into_iter()
        .zip(r.basis_images())
        .map(|(label, m)| BasisEntry {
            label,
            matrix: (0..m.rows())
                .map(|i| m.row(i).iter().map(entry_to_json).collect())
                .collect(),
        })
        .collect();
    RepFile {
        algebra: r.algebra().to_string(),
        degree: r.degree(),
        basis,
    }
}

/// Rebuild a representation, checking the labels against the canonical
/// basis of the declared algebra.
pub fn rep_from_json(file: &RepFile) -> Result<MatrixRep> {
    let g: ReductiveAlgebra = file.algebra.parse()?;
    let n = file.degree;
    let expected = crate::invariants::dim_of(&g) as usize;
    if file.basis.len() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            found: file.basis.len(),
        });
    }
    let mut mats = Vec::with_capacity(file.basis.len());
    for e in &file.basis {
        if e.matrix.len() != n || e.matrix.iter().any(|r| r.len() != n) {
            return Err(Error::Format(format!(
                "matrix for `{}` is not {n} x {n}",
                e.label
            )));
        }
        let rows = e
            .matrix
            .iter()
            .map(|r| r.iter().map(entry_from_json).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        mats.push(if n == 0 {
            QMatrix::zeros(0, 0)
        } else {
            QMatrix::from_rows(rows)
        });
    }
    let mut it = mats.into_iter();
    let mut simples = Vec::new();
    for &t in g.simples() {
        let (_, labels, _) = natural_basis(t)?;
        let images: Vec<QMatrix> = it.by_ref().take(labels.len()).collect();
        simples.push(IdealBlock {
            simple_type: t,
            labels,
            images,
        });
    }
    let rep = MatrixRep::from_parts(n, simples, it.collect());
    for (want, got) in rep.basis_labels().iter().zip(&file.basis) {
        if *want != got.label {
            return Err(Error::Format(format!(
                "basis label `{}` where `{want}` was expected",
                got.label
            )));
        }
    }
    Ok(rep)
}

pub fn read_rep_file(path: &Path) -> Result<MatrixRep> {
    let text = std::fs::read_to_string(path)?;
    let file: RepFile = serde_json::from_str(&text)?;
    rep_from_json(&file)
}

/// Write atomically: a sibling temporary file is renamed into place.
pub fn write_rep_file(r: &MatrixRep, path: &Path) -> Result<()> {
    let text = serde_json::to_string_pretty(&rep_to_json(r))?;
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let tmp = dir.join(format!(
        ".{}.tmp",
        path.file_name().and_then(|s| s.to_str()).unwrap_or("rep")
    ));
    {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(text.as_bytes())?;
        f.write_all(b"\n")?;
        f.sync_all()?;
    }
    std::fs::rename(&tmp, path)?;
    Ok(())
}
