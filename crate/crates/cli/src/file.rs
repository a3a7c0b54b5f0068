//! The matrix-set file format.
//!
//! ```json
//! {
//!   "n": 2,
//!   "label": "pauli",
//!   "alpha": [
//!     [[["0", "0"], ["1", "0"]], [["1", "0"], ["0", "0"]]],
//!     [[["0", "0"], ["0", "-1"]], [["0", "1"], ["0", "0"]]],
//!     [[["1", "0"], ["0", "0"]], [["0", "0"], ["-1", "0"]]]
//!   ],
//!   "beta": [[["0", "0"], ["0", "0"]], [["0", "0"], ["0", "0"]]]
//! }
//! ```
//!
//! Every entry is `[re, im]`, each a string matching `-?[0-9]+(/[1-9][0-9]*)?`.

use std::fmt;
use std::path::Path;

use dirac_core::symmat::{SetError, Slot};
use dirac_core::{CMatrix, ComplexRational, MatrixSet, Rational};
use serde::de::{self, Deserializer, Visitor};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}, column {column}, at {field}: {message}")]
    Syntax { field: String, line: usize, column: usize, message: String },
    #[error("at {field}: {message}")]
    Shape { field: String, message: String },
}

/// Parses `-?[0-9]+(/[1-9][0-9]*)?`; anything else is `None`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    let (num, den) = match digits.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (digits, None),
    };
    let all_digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(num) {
        return None;
    }
    if let Some(d) = den {
        if !all_digits(d) || d.starts_with('0') {
            return None;
        }
    }
    s.parse().ok()
}

struct Literal(Rational);

impl<'de> Deserialize<'de> for Literal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Literal;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational string such as \"-3/4\"")
            }
            fn visit_str<E: de::Error>(self, s: &str) -> Result<Literal, E> {
                parse_rational(s)
                    .map(Literal)
                    .ok_or_else(|| E::custom(format!("not a rational literal: {s:?}")))
            }
        }
        d.deserialize_str(V)
    }
}

#[derive(Deserialize)]
struct Entry(Literal, Literal);

type RawMatrix = Vec<Vec<Entry>>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    n: usize,
    #[serde(default)]
    label: Option<String>,
    alpha: Vec<RawMatrix>,
    beta: RawMatrix,
}

fn field_name(slot: Slot) -> String {
    match slot {
        Slot::Alpha(k) => format!("alpha[{k}]"),
        Slot::Beta => "beta".into(),
    }
}

fn shape(field: impl Into<String>, message: impl Into<String>) -> FileError {
    FileError::Shape { field: field.into(), message: message.into() }
}

fn build_matrix(raw: RawMatrix, n: usize, field: &str) -> Result<CMatrix, FileError> {
    if raw.len() != n {
        return Err(shape(field, format!("expected {n} rows, found {}", raw.len())));
    }
    let mut rows = Vec::with_capacity(n);
    for (i, row) in raw.into_iter().enumerate() {
        if row.len() != n {
            return Err(shape(format!("{field}[{i}]"), format!("expected {n} entries, found {}", row.len())));
        }
        rows.push(row.into_iter().map(|Entry(re, im)| ComplexRational::new(re.0, im.0)).collect());
    }
    Ok(CMatrix::from_rows(rows).expect("square by construction"))
}

/// Parses file contents; `default_label` is used when the file has none.
pub fn parse_matrix_str(text: &str, default_label: &str) -> Result<MatrixSet, FileError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let raw: RawFile = serde_path_to_error::deserialize(de).map_err(|e| {
        let field = match e.path().to_string().as_str() {
            "." => "top level".to_string(),
            p => p.to_string(),
        };
        let inner = e.into_inner();
        let (line, column) = (inner.line(), inner.column());
        let full = inner.to_string();
        let suffix = format!(" at line {line} column {column}");
        let message = full.strip_suffix(&suffix).unwrap_or(&full).to_string();
        FileError::Syntax { field, line, column, message }
    })?;
    let n = raw.n;
    if !(2..=4).contains(&n) {
        return Err(shape("n", format!("dimension {n} is not supported (2, 3 or 4)")));
    }
    if raw.alpha.len() != 3 {
        return Err(shape("alpha", format!("expected 3 matrices, found {}", raw.alpha.len())));
    }
    let mut alphas = Vec::with_capacity(3);
    for (k, m) in raw.alpha.into_iter().enumerate() {
        alphas.push(build_matrix(m, n, &format!("alpha[{k}]"))?);
    }
    let beta = build_matrix(raw.beta, n, "beta")?;
    let alphas: [CMatrix; 3] = alphas.try_into().expect("three matrices");
    let label = raw.label.unwrap_or_else(|| default_label.to_string());
    MatrixSet::new(alphas, beta, label).map_err(|e| match e {
        SetError::NotHermitian { slot, row, col } => {
            let f = field_name(slot);
            let (i, j) = (row - 1, col - 1);
            shape(format!("{f}[{i}][{j}]"), format!("not the complex conjugate of {f}[{j}][{i}]; matrix is not Hermitian"))
        }
        other => shape("top level", other.to_string()),
    })
}

/// Reads and parses a file; the label defaults to the file stem.
pub fn parse_matrix_file(path: &Path) -> Result<MatrixSet, FileError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| FileError::Io { path: path.display().to_string(), source })?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("unlabeled");
    parse_matrix_str(&text, stem)
}

fn write_matrix(out: &mut String, m: &CMatrix, indent: &str) {
    out.push_str("[\n");
    let rows: Vec<String> = m
        .rows()
        .map(|row| {
            let entries: Vec<String> = row.iter().map(|z| format!("[\"{}\", \"{}\"]", z.re, z.im)).collect();
            format!("{indent}  [{}]", entries.join(", "))
        })
        .collect();
    out.push_str(&rows.join(",\n"));
    out.push('\n');
    out.push_str(indent);
    out.push(']');
}

/// Serializes a set, one matrix row per line.
pub fn to_json(set: &MatrixSet) -> String {
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"n\": {},\n", set.n()));
    let label = serde_json::to_string(set.label()).expect("strings serialize");
    out.push_str(&format!("  \"label\": {label},\n"));
    out.push_str("  \"alpha\": [\n");
    for (k, a) in set.alphas().iter().enumerate() {
        out.push_str("    ");
        write_matrix(&mut out, a, "    ");
        out.push_str(if k < 2 { ",\n" } else { "\n" });
    }
    out.push_str("  ],\n  \"beta\": ");
    write_matrix(&mut out, set.beta(), "  ");
    out.push_str("\n}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use dirac_core::rat;

    #[test]
    fn rational_grammar() {
        assert_eq!(parse_rational("-3/4"), Some(rat(-3, 4)));
        assert_eq!(parse_rational("0"), Some(rat(0, 1)));
        assert_eq!(parse_rational("6/4"), Some(rat(3, 2)));
        for bad in ["1.5", "", "-", "1/0", "1/04", "+1", "1/", "/2", " 1", "1e3", "--1"] {
            assert_eq!(parse_rational(bad), None, "{bad:?}");
        }
    }

    #[test]
    fn hermitian_pair_accepted() {
        let text = r#"{"n": 2,
            "alpha": [[[["0","0"],["1/2","-1/3"]],[["1/2","1/3"],["0","0"]]],
                      [[["0","0"],["0","0"]],[["0","0"],["0","0"]]],
                      [[["0","0"],["0","0"]],[["0","0"],["0","0"]]]],
            "beta": [[["0","0"],["0","0"]],[["0","0"],["0","0"]]]}"#;
        let set = parse_matrix_str(text, "t").unwrap();
        assert_eq!(*set.alpha(0).get(0, 1), ComplexRational::new(rat(1, 2), rat(-1, 3)));
        assert_eq!(set.label(), "t");
    }

    #[test]
    fn non_hermitian_located() {
        let text = r#"{"n": 2,
            "alpha": [[[["0","0"],["1/2","1/3"]],[["1/2","1/3"],["0","0"]]],
                      [[["0","0"],["0","0"]],[["0","0"],["0","0"]]],
                      [[["0","0"],["0","0"]],[["0","0"],["0","0"]]]],
            "beta": [[["0","0"],["0","0"]],[["0","0"],["0","0"]]]}"#;
        let err = parse_matrix_str(text, "t").unwrap_err().to_string();
        assert!(err.contains("alpha[0][0][1]") && err.contains("not Hermitian"), "{err}");
    }

    #[test]
    fn shape_errors() {
        let row = r#"[["0","0"],["0","0"]]"#;
        let m2 = format!("[{row},{row}]");
        let two_alphas = format!(r#"{{"n": 2, "alpha": [{m2},{m2}], "beta": {m2}}}"#);
        assert!(parse_matrix_str(&two_alphas, "t").unwrap_err().to_string().contains("expected 3 matrices"));
        let ragged = format!(r#"{{"n": 2, "alpha": [{m2},{m2},[{row}]], "beta": {m2}}}"#);
        let err = parse_matrix_str(&ragged, "t").unwrap_err().to_string();
        assert!(err.contains("alpha[2]") && err.contains("expected 2 rows"), "{err}");
        let too_big = format!(r#"{{"n": 5, "alpha": [{m2},{m2},{m2}], "beta": {m2}}}"#);
        assert!(parse_matrix_str(&too_big, "t").unwrap_err().to_string().contains("not supported"));
    }
}
