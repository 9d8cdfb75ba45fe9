//! Labelled curves from CSV files: `label,a1,a2,a3,a4,a6` per line, entries
//! integers or `num/den`; `#` starts a comment.

use std::collections::HashSet;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{format_rational, parse_rational};
use crate::curve::WeierstrassCurve;

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}: {msg}")]
    Parse { line: u64, msg: String },
    #[error("line {line}: curve {label} is singular")]
    Singular { line: u64, label: String },
    #[error("line {line}: duplicate label {label}")]
    DuplicateLabel { line: u64, label: String },
}

#[derive(Clone, Debug)]
pub struct FixtureSet {
    pub curves: Vec<(String, WeierstrassCurve)>,
    pub source: PathBuf,
}

impl FixtureSet {
    pub fn get(&self, label: &str) -> Option<&WeierstrassCurve> {
        self.curves.iter().find(|(l, _)| l == label).map(|(_, e)| e)
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }
}

/// Parse `"a1,a2,a3,a4,a6"`.
pub fn parse_curve(s: &str) -> Result<WeierstrassCurve, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 5 {
        return Err(format!("expected 5 coefficients, got {}", parts.len()));
    }
    let mut a = Vec::with_capacity(5);
    for p in parts {
        a.push(parse_rational(p).map_err(|e| e.to_string())?);
    }
    let a: [_; 5] = a.try_into().unwrap();
    WeierstrassCurve::new(a).map_err(|e| e.to_string())
}

/// Returns the set and any warnings (an empty file is allowed but noted).
pub fn ingest_fixtures(path: &Path) -> Result<(FixtureSet, Vec<String>), FixtureError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| FixtureError::Io { path: path.display().to_string(), source })?;
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut curves = Vec::new();
    let mut seen = HashSet::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| FixtureError::Parse {
            line: e.position().map_or(0, |p| p.line()),
            msg: e.to_string(),
        })?;
        let line = rec.position().map_or(0, |p| p.line());
        if rec.iter().all(str::is_empty) {
            continue;
        }
        if rec.len() != 6 {
            return Err(FixtureError::Parse { line, msg: format!("expected 6 fields, got {}", rec.len()) });
        }
        let label = rec[0].to_string();
        let mut a = Vec::with_capacity(5);
        for f in rec.iter().skip(1) {
            a.push(parse_rational(f).map_err(|e| FixtureError::Parse { line, msg: e.to_string() })?);
        }
        let e = WeierstrassCurve::new(a.try_into().unwrap())
            .map_err(|_| FixtureError::Singular { line, label: label.clone() })?;
        if !seen.insert(label.clone()) {
            return Err(FixtureError::DuplicateLabel { line, label });
        }
        curves.push((label, e));
    }
    let mut warnings = Vec::new();
    if curves.is_empty() {
        warnings.push(format!("{}: no curves", path.display()));
    }
    Ok((FixtureSet { curves, source: path.to_path_buf() }, warnings))
}

/// JSON form of one fixture.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureCurve {
    pub label: String,
    pub coeffs: [String; 5],
    pub j: String,
}

impl FixtureCurve {
    pub fn of(label: &str, e: &WeierstrassCurve) -> Self {
        FixtureCurve {
            label: label.to_string(),
            coeffs: e.coeffs().clone().map(|c| format_rational(&c)),
            j: format_rational(&e.j_invariant()),
        }
    }
}
