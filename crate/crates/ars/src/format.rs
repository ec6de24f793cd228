//! Matrix file formats.
//!
//! Text: a header line `m n`, then `m` lines of `n` space-separated 0/1
//! digits. JSON: `{"m": 2, "n": 2, "rows": [[1, 0], [0, 1]]}`. A file whose
//! first non-blank character is `{` is read as JSON.

use std::io::Read;
use std::path::Path;

use anyhow::{bail, ensure, Context, Result};
use ars_core::BinaryMatrix;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub m: usize,
    pub n: usize,
    pub rows: Vec<Vec<u8>>,
}

impl From<&BinaryMatrix> for MatrixJson {
    fn from(a: &BinaryMatrix) -> Self {
        Self {
            m: a.nrows(),
            n: a.ncols(),
            rows: a.to_rows(),
        }
    }
}

impl TryFrom<MatrixJson> for BinaryMatrix {
    type Error = anyhow::Error;

    fn try_from(j: MatrixJson) -> Result<Self> {
        ensure!(
            j.rows.len() == j.m,
            "expected {} rows, found {}",
            j.m,
            j.rows.len()
        );
        for (i, row) in j.rows.iter().enumerate() {
            ensure!(
                row.len() == j.n,
                "row {i}: expected {} entries, found {}",
                j.n,
                row.len()
            );
        }
        Ok(BinaryMatrix::from_rows(&j.rows, j.n)?)
    }
}

pub fn parse_text(src: &str) -> Result<BinaryMatrix> {
    let mut lines = src.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().context("missing `m n` header")?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|x| x.parse().with_context(|| format!("bad dimension `{x}`")))
        .collect::<Result<_>>()?;
    let [m, n] = dims[..] else {
        bail!("header must be `m n`, found `{header}`")
    };
    let mut rows = Vec::with_capacity(m);
    for (i, line) in lines.enumerate() {
        ensure!(i < m, "more than {m} rows");
        let row: Vec<u8> = line
            .split_whitespace()
            .map(|x| match x {
                "0" => Ok(0),
                "1" => Ok(1),
                _ => bail!("row {i}: entry `{x}` is not 0 or 1"),
            })
            .collect::<Result<_>>()?;
        ensure!(
            row.len() == n,
            "row {i}: expected {n} entries, found {}",
            row.len()
        );
        rows.push(row);
    }
    ensure!(rows.len() == m, "expected {m} rows, found {}", rows.len());
    Ok(BinaryMatrix::from_rows(&rows, n)?)
}

pub fn parse_json(src: &str) -> Result<BinaryMatrix> {
    let j: MatrixJson = serde_json::from_str(src).context("bad matrix JSON")?;
    j.try_into()
}

pub fn parse_matrix(src: &str) -> Result<BinaryMatrix> {
    if src.trim_start().starts_with('{') {
        parse_json(src)
    } else {
        parse_text(src)
    }
}

pub fn to_text(a: &BinaryMatrix) -> String {
    let mut out = format!("{} {}", a.nrows(), a.ncols());
    for row in a.rows() {
        out.push('\n');
        let cells: Vec<&str> = row.iter().map(|&b| if b { "1" } else { "0" }).collect();
        out.push_str(&cells.join(" "));
    }
    out
}

/// Reads a matrix from `path`, or from stdin when `path` is `-`.
pub fn read_matrix(path: &Path) -> Result<BinaryMatrix> {
    let src = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading stdin")?;
        buf
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    parse_matrix(&src)
}
