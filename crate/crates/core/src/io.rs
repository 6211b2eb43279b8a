//! Instance files, switching-function files and matrix serialization.
//!
//! Instance files are JSON documents with one incidence per line in
//! canonical `(vertex, edge, k)` order, so the canonical rendering of a
//! parsed instance reproduces the file byte for byte.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{validate, IncidenceSpec, OrientedHypergraph, SwitchingFunction, ValidationReport};
use crate::matrix::{LabeledMatrix, MatrixError};
use crate::sign::Sign;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error("instance violates hypergraph invariants: {0}")]
    Invalid(ValidationReport),
    #[error("matrix: {0}")]
    Matrix(#[from] MatrixError),
}

impl From<serde_json::Error> for ParseError {
    fn from(err: serde_json::Error) -> Self {
        ParseError::Syntax {
            line: err.line(),
            column: err.column(),
            message: err.to_string(),
        }
    }
}

fn field_error(field: impl Into<String>, message: impl Into<String>) -> ParseError {
    ParseError::Field {
        field: field.into(),
        message: message.into(),
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    format_version: i64,
    vertices: Vec<String>,
    edges: Vec<String>,
    incidences: Vec<RawIncidence>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawIncidence {
    v: String,
    e: String,
    k: i64,
    sign: i64,
}

/// Parses an instance document into a validated hypergraph.
pub fn parse_instance(text: &str) -> Result<OrientedHypergraph, ParseError> {
    let raw: RawInstance = serde_json::from_str(text)?;
    if raw.format_version != i64::from(FORMAT_VERSION) {
        return Err(field_error(
            "format_version",
            format!("unsupported version {} (expected {FORMAT_VERSION})", raw.format_version),
        ));
    }
    let mut incidences = Vec::with_capacity(raw.incidences.len());
    for (i, inc) in raw.incidences.into_iter().enumerate() {
        let sign = Sign::from_i64(inc.sign).ok_or_else(|| {
            field_error(
                format!("incidences[{i}].sign"),
                format!("must be 1 or -1, got {}", inc.sign),
            )
        })?;
        let mult = u32::try_from(inc.k)
            .ok()
            .filter(|&k| k >= 1)
            .ok_or_else(|| field_error(format!("incidences[{i}].k"), format!("must be a positive integer, got {}", inc.k)))?;
        incidences.push(IncidenceSpec {
            vertex: inc.v,
            edge: inc.e,
            mult,
            sign,
        });
    }
    let report = validate(&raw.vertices, &raw.edges, &incidences);
    if !report.is_valid() {
        return Err(ParseError::Invalid(report));
    }
    Ok(OrientedHypergraph::new(raw.vertices, raw.edges, incidences).expect("validated above"))
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn json_list(items: &[String]) -> String {
    let inner: Vec<String> = items.iter().map(|s| json_str(s)).collect();
    format!("[{}]", inner.join(", "))
}

/// Canonical instance rendering.
pub fn serialize_instance(g: &OrientedHypergraph) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"format_version\": {FORMAT_VERSION},");
    let _ = writeln!(out, "  \"vertices\": {},", json_list(g.vertices()));
    let _ = writeln!(out, "  \"edges\": {},", json_list(g.edges()));
    let specs = g.incidence_specs();
    if specs.is_empty() {
        out.push_str("  \"incidences\": []\n");
    } else {
        out.push_str("  \"incidences\": [\n");
        for (i, inc) in specs.iter().enumerate() {
            let _ = write!(
                out,
                "    {{\"v\": {}, \"e\": {}, \"k\": {}, \"sign\": {}}}",
                json_str(&inc.vertex),
                json_str(&inc.edge),
                inc.mult,
                inc.sign.to_i64()
            );
            out.push_str(if i + 1 < specs.len() { ",\n" } else { "\n" });
        }
        out.push_str("  ]\n");
    }
    out.push_str("}\n");
    out
}

/// Parses a switching-function file: a JSON object mapping vertex labels to `1` or `-1`.
pub fn parse_theta(text: &str) -> Result<SwitchingFunction, ParseError> {
    let raw: BTreeMap<String, i64> = serde_json::from_str(text)?;
    raw.into_iter()
        .map(|(v, x)| {
            Sign::from_i64(x)
                .map(|s| (v.clone(), s))
                .ok_or_else(|| field_error(v, format!("must be 1 or -1, got {x}")))
        })
        .collect()
}

pub fn serialize_theta(theta: &SwitchingFunction) -> String {
    let raw: BTreeMap<&String, i64> = theta.assignment().iter().map(|(k, v)| (k, v.to_i64())).collect();
    let mut text = serde_json::to_string_pretty(&raw).expect("maps always serialize");
    text.push('\n');
    text
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixFormat {
    Csv,
    Json,
}

#[derive(Serialize, Deserialize)]
struct MatrixDocument {
    rows: Vec<String>,
    cols: Vec<String>,
    entries: Vec<Vec<i64>>,
}

/// CSV has a header of column labels after an empty corner cell, then one
/// line per row starting with its label. JSON is `{rows, cols, entries}`.
pub fn serialize_matrix(m: &LabeledMatrix, format: MatrixFormat) -> String {
    match format {
        MatrixFormat::Csv => {
            let mut writer = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
            let header = std::iter::once("").chain(m.col_labels().iter().map(String::as_str));
            writer.write_record(header).expect("in-memory write");
            for (i, label) in m.row_labels().iter().enumerate() {
                let row = std::iter::once(label.clone()).chain(m.row(i).iter().map(i64::to_string));
                writer.write_record(row).expect("in-memory write");
            }
            String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 input")
        }
        MatrixFormat::Json => {
            let doc = MatrixDocument {
                rows: m.row_labels().to_vec(),
                cols: m.col_labels().to_vec(),
                entries: m.to_rows(),
            };
            let mut text = serde_json::to_string(&doc).expect("matrices always serialize");
            text.push('\n');
            text
        }
    }
}

pub fn parse_matrix(text: &str, format: MatrixFormat) -> Result<LabeledMatrix, ParseError> {
    match format {
        MatrixFormat::Csv => {
            let mut reader = csv::ReaderBuilder::new()
                .has_headers(false)
                .flexible(true)
                .from_reader(text.as_bytes());
            let mut records = reader.records();
            let header = match records.next() {
                Some(r) => r.map_err(csv_error)?,
                None => return Err(field_error("header", "missing header line")),
            };
            let cols: Vec<String> = header.iter().skip(1).map(str::to_owned).collect();
            let mut rows = Vec::new();
            let mut entries = Vec::new();
            for (line, record) in records.enumerate() {
                let record = record.map_err(csv_error)?;
                let mut fields = record.iter();
                rows.push(fields.next().unwrap_or_default().to_owned());
                let values: Vec<&str> = fields.collect();
                if values.len() != cols.len() {
                    return Err(field_error(
                        format!("row {}", line + 1),
                        format!("expected {} entries, got {}", cols.len(), values.len()),
                    ));
                }
                for (j, v) in values.into_iter().enumerate() {
                    let x = v.trim().parse::<i64>().map_err(|e| {
                        field_error(format!("row {}, column {}", line + 1, j + 1), e.to_string())
                    })?;
                    entries.push(x);
                }
            }
            Ok(LabeledMatrix::new(rows, cols, entries)?)
        }
        MatrixFormat::Json => {
            let doc: MatrixDocument = serde_json::from_str(text)?;
            if doc.entries.len() != doc.rows.len() {
                return Err(field_error("entries", "one entry row per row label"));
            }
            let entries: Vec<i64> = doc.entries.into_iter().flatten().collect();
            Ok(LabeledMatrix::new(doc.rows, doc.cols, entries)?)
        }
    }
}

fn csv_error(err: csv::Error) -> ParseError {
    let line = err.position().map_or(0, |p| p.line() as usize);
    ParseError::Syntax {
        line,
        column: 0,
        message: err.to_string(),
    }
}
