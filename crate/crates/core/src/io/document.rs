use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::linalg::rational::{format_rational, parse_rational, ParseRationalError};
use crate::linalg::{RatMatrix, Rational};
use crate::representation::{validate_rep, Assumption, AssumptionSet, Generator, RepError, RepKind, Representation};

pub const SCHEMA_VERSION: &str = "1";

/// A matrix entry as written on disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

impl Entry {
    fn to_rational(&self) -> Result<Rational, ParseRationalError> {
        match self {
            Entry::Int(n) => Ok(Rational::from_integer(BigInt::from(*n))),
            Entry::Text(s) => parse_rational(s),
        }
    }

    /// Integers that fit in `i64` become JSON numbers, everything else a string.
    pub fn from_rational(r: &Rational) -> Self {
        match r.is_integer().then(|| r.numer().to_i64()).flatten() {
            Some(n) => Entry::Int(n),
            None => Entry::Text(format_rational(r)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorDocument {
    pub label: String,
    pub matrix: Vec<Vec<Entry>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepDocument {
    #[serde(default = "default_schema_version")]
    pub schema_version: String,
    pub dimension: usize,
    pub kind: String,
    #[serde(default)]
    pub generators: Vec<GeneratorDocument>,
    #[serde(default)]
    pub assumptions: BTreeMap<String, bool>,
}

fn default_schema_version() -> String {
    SCHEMA_VERSION.to_string()
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("{path}: {source}")]
    Read {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("unsupported schema_version \"{0}\", expected \"1\"")]
    SchemaVersion(String),
    #[error("unknown kind \"{0}\", expected linear, affine or projective-class")]
    UnknownKind(String),
    #[error("unknown assumption \"{0}\"")]
    UnknownAssumption(String),
    #[error("generator '{label}': row {row} has {found} entries, expected {expected}")]
    RaggedRow { label: String, row: usize, expected: usize, found: usize },
    #[error("generator '{label}': entry ({row}, {col}): {source}")]
    Entry {
        label: String,
        row: usize,
        col: usize,
        #[source]
        source: ParseRationalError,
    },
    #[error("duplicate generator label '{0}'")]
    DuplicateLabel(String),
    #[error(transparent)]
    Invalid(#[from] RepError),
}

impl RepDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(|e| DocumentError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_representation(&self) -> Result<Representation, DocumentError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(DocumentError::SchemaVersion(self.schema_version.clone()));
        }
        let kind = RepKind::parse(&self.kind).ok_or_else(|| DocumentError::UnknownKind(self.kind.clone()))?;
        let mut assumptions = AssumptionSet::default();
        for (key, &value) in &self.assumptions {
            let a = Assumption::from_key(key).ok_or_else(|| DocumentError::UnknownAssumption(key.clone()))?;
            assumptions.set(a, value);
        }
        let mut generators = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            if generators.iter().any(|h: &Generator| h.label == g.label) {
                return Err(DocumentError::DuplicateLabel(g.label.clone()));
            }
            generators.push(Generator::new(g.label.clone(), parse_matrix(g)?));
        }
        Ok(validate_rep(generators, kind, self.dimension, assumptions)?)
    }

    /// Canonical document: reduced entries and every assumption key listed.
    pub fn from_representation(rep: &Representation) -> Self {
        let assumptions = rep.assumptions();
        RepDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            dimension: rep.dimension(),
            kind: rep.kind().as_str().to_string(),
            generators: rep
                .generators()
                .iter()
                .map(|g| GeneratorDocument {
                    label: g.label.clone(),
                    matrix: (0..g.matrix.rows())
                        .map(|i| (0..g.matrix.cols()).map(|j| Entry::from_rational(&g.matrix[(i, j)])).collect())
                        .collect(),
                })
                .collect(),
            assumptions: Assumption::ALL
                .iter()
                .map(|&a| (a.key().to_string(), assumptions.holds(a)))
                .collect(),
        }
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}

fn parse_matrix(g: &GeneratorDocument) -> Result<RatMatrix, DocumentError> {
    let n = g.matrix.len();
    let mut rows = Vec::with_capacity(n);
    for (i, row) in g.matrix.iter().enumerate() {
        let expected = g.matrix[0].len();
        if row.len() != expected {
            return Err(DocumentError::RaggedRow {
                label: g.label.clone(),
                row: i,
                expected,
                found: row.len(),
            });
        }
        let parsed = row
            .iter()
            .enumerate()
            .map(|(j, e)| {
                e.to_rational().map_err(|source| DocumentError::Entry {
                    label: g.label.clone(),
                    row: i,
                    col: j,
                    source,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(parsed);
    }
    if rows.is_empty() {
        return Ok(RatMatrix::zeros(0, 0));
    }
    Ok(RatMatrix::from_rows(rows).expect("row lengths checked"))
}

pub fn parse_rep(text: &str) -> Result<Representation, DocumentError> {
    RepDocument::parse(text)?.to_representation()
}

pub fn load_rep_file(path: impl AsRef<Path>) -> Result<Representation, DocumentError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| DocumentError::Read {
        path: path.display().to_string(),
        source,
    })?;
    parse_rep(&text)
}

pub fn write_rep(rep: &Representation) -> String {
    RepDocument::from_representation(rep).to_json()
}

/// Hex SHA-256 of the canonical document.
pub fn input_digest(rep: &Representation) -> String {
    hex::encode(Sha256::digest(write_rep(rep).as_bytes()))
}
