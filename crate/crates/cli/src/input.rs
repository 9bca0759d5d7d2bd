//! Input documents: structure constants, subalgebra dimension and an
//! optional connection, all with 1-based indices and rational strings.
//!
//! Slots `1..=q` span the chosen complement (identified with g/h) and
//! `q+1..=n` span h, where `q = dim − subalgebra_dim`.

use std::fs;
use std::path::Path;

use liepair::exact::{format_scalar, parse_scalar, Scalar};
use liepair::lie_pair::{validate_connection, Connection, LiePair};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}:{line}:{column}: {msg}")]
    Parse { path: String, line: usize, column: usize, msg: String },
    #[error("{0}")]
    Validation(#[from] liepair::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Entry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct InputDoc {
    pub dim: usize,
    pub subalgebra_dim: usize,
    pub bracket: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub connection: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// A connection given on its own, either as `{"connection": [...]}` or a bare list.
#[derive(Deserialize)]
#[serde(untagged)]
enum ConnectionDoc {
    Wrapped { connection: Vec<Entry> },
    Bare(Vec<Entry>),
}

pub struct Loaded {
    pub doc: InputDoc,
    pub pair: LiePair,
    pub conn: Connection,
    pub labels: Vec<String>,
}

fn read(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|source| InputError::Io { path: path.display().to_string(), source })
}

fn json_error(path: &Path, e: serde_json::Error) -> InputError {
    InputError::Parse { path: path.display().to_string(), line: e.line(), column: e.column(), msg: e.to_string() }
}

fn scalar(s: &str) -> Result<Scalar, InputError> {
    Ok(parse_scalar(s)?)
}

fn index(v: usize, max: usize, what: &str) -> Result<usize, InputError> {
    if v == 0 || v > max {
        return Err(InputError::Usage(format!("{what} index {v} outside 1..={max}")));
    }
    Ok(v - 1)
}

pub fn parse_input(path: &Path, connection_override: Option<&Path>) -> Result<Loaded, InputError> {
    let text = read(path)?;
    let mut doc: InputDoc = serde_json::from_str(&text).map_err(|e| json_error(path, e))?;
    if let Some(cp) = connection_override {
        let text = read(cp)?;
        let c: ConnectionDoc = serde_json::from_str(&text).map_err(|e| json_error(cp, e))?;
        doc.connection = Some(match c {
            ConnectionDoc::Wrapped { connection } => connection,
            ConnectionDoc::Bare(v) => v,
        });
    }
    let n = doc.dim;
    let mut entries = Vec::with_capacity(doc.bracket.len());
    for e in &doc.bracket {
        entries.push((index(e.i, n, "bracket")?, index(e.j, n, "bracket")?, index(e.k, n, "bracket")?, scalar(&e.coeff)?));
    }
    let pair = LiePair::new(n, doc.subalgebra_dim, &entries)?;
    let conn = match &doc.connection {
        None => Connection::zero_extension(&pair),
        Some(list) => {
            let q = pair.quotient_dim();
            let mut gamma = Connection::zero_extension(&pair).gamma().clone();
            for e in list {
                let (i, j, k) = (index(e.i, n, "connection")?, index(e.j, q, "connection")?, index(e.k, q, "connection")?);
                gamma[i][j][k] = scalar(&e.coeff)?;
            }
            validate_connection(&pair, gamma)?
        }
    };
    let labels = match &doc.labels {
        Some(l) if l.len() == n => l.clone(),
        Some(l) => return Err(InputError::Usage(format!("{} labels for dimension {n}", l.len()))),
        None => (1..=n).map(|i| format!("e{i}")).collect(),
    };
    Ok(Loaded { doc, pair, conn, labels })
}

/// Canonical form of a document: entries sorted, coefficients normalized,
/// zero entries dropped.
pub fn canonical(doc: &InputDoc) -> Result<InputDoc, InputError> {
    let norm = |list: &[Entry]| -> Result<Vec<Entry>, InputError> {
        let mut out: Vec<Entry> = Vec::new();
        for e in list {
            let c = scalar(&e.coeff)?;
            if c != Scalar::from_integer(0.into()) {
                out.push(Entry { i: e.i, j: e.j, k: e.k, coeff: format_scalar(&c) });
            }
        }
        out.sort_by_key(|e| (e.i, e.j, e.k));
        Ok(out)
    };
    Ok(InputDoc {
        dim: doc.dim,
        subalgebra_dim: doc.subalgebra_dim,
        bracket: norm(&doc.bracket)?,
        connection: doc.connection.as_deref().map(norm).transpose()?,
        labels: doc.labels.clone(),
    })
}

/// `"1,1,2"` → 0-based slots `[0, 0, 1]`, each in `1..=max`.
pub fn parse_monomial(s: &str, max: usize) -> Result<Vec<usize>, InputError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            let v: usize = t.trim().parse().map_err(|_| InputError::Usage(format!("bad monomial entry {t:?}")))?;
            index(v, max, "monomial")
        })
        .collect()
}
