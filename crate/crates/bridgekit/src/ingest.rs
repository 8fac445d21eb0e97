//! Reading code tables from CSV or JSON-lines files.
//!
//! Column names are matched after lower-casing and collapsing punctuation to
//! `_`, so spreadsheet headers such as `Wirtinger Number` or
//! `Any Homomorphism? (1=Y,0=N)` map to `wirtinger_number` and
//! `any_homomorphism`.

use std::io::BufRead;
use std::path::Path;

use bridgekit_core::ParsedCode;
use serde_json::Value;

use crate::error::{PipelineError, Result};

/// Labeling hints carried by census tables.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Hints {
    pub wirtinger_number: Option<usize>,
    pub any_homomorphism: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct IngestedRow {
    /// `file:line` of the row, used in provenance tags.
    pub origin: String,
    pub code: ParsedCode,
    pub hints: Hints,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reject {
    pub origin: String,
    pub raw: String,
    pub reason: String,
}

#[derive(Debug, Default)]
pub struct Ingested {
    pub rows: Vec<IngestedRow>,
    pub rejects: Vec<Reject>,
}

impl Ingested {
    pub fn rows_read(&self) -> usize {
        self.rows.len() + self.rejects.len()
    }
}

fn normalize_header(h: &str) -> String {
    let mut out = String::new();
    for c in h.trim().chars() {
        if c.is_ascii_alphanumeric() {
            out.push(c.to_ascii_lowercase());
        } else if !out.ends_with('_') {
            out.push('_');
        }
    }
    out.trim_matches('_').to_string()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Field {
    Code,
    Signs,
    Wirtinger,
    AnyHomomorphism,
}

fn classify(header: &str) -> Option<Field> {
    let h = normalize_header(header);
    match h.as_str() {
        "gauss_code" | "code" => Some(Field::Code),
        "signs" | "crossing_signs" => Some(Field::Signs),
        "wirtinger_number" => Some(Field::Wirtinger),
        _ if h.starts_with("any_homomorphism") => Some(Field::AnyHomomorphism),
        _ => None,
    }
}

/// Raw string cells of one row, before validation.
#[derive(Debug, Default)]
struct RawRow {
    code: String,
    signs: Option<String>,
    wirtinger: Option<String>,
    any_homomorphism: Option<String>,
}

fn build(origin: String, raw: RawRow) -> std::result::Result<IngestedRow, Reject> {
    let mut text = raw.code.trim().to_string();
    if let Some(signs) = raw
        .signs
        .as_deref()
        .map(str::trim)
        .filter(|s| !s.is_empty())
    {
        if !text.contains('|') {
            text = format!("{text} | {signs}");
        }
    }
    let reject = |reason: String| Reject {
        origin: origin.clone(),
        raw: text.clone(),
        reason,
    };
    let code = ParsedCode::parse(&text).map_err(|e| reject(format!("{e:?}: {e}")))?;
    let wirtinger_number = match raw
        .wirtinger
        .as_deref()
        .map(str::trim)
        .filter(|s| !s.is_empty())
    {
        None => None,
        Some(s) => Some(
            s.parse::<f64>()
                .ok()
                .filter(|v| v.fract() == 0.0 && *v >= 1.0)
                .map(|v| v as usize)
                .ok_or_else(|| reject(format!("bad wirtinger_number `{s}`")))?,
        ),
    };
    let any_homomorphism = match raw
        .any_homomorphism
        .as_deref()
        .map(str::trim)
        .filter(|s| !s.is_empty())
    {
        None => None,
        Some("1") | Some("1.0") | Some("Y") | Some("y") | Some("true") => Some(true),
        Some("0") | Some("0.0") | Some("N") | Some("n") | Some("false") => Some(false),
        Some(s) => return Err(reject(format!("bad any_homomorphism `{s}`"))),
    };
    Ok(IngestedRow {
        origin,
        code,
        hints: Hints {
            wirtinger_number,
            any_homomorphism,
        },
    })
}

fn unreadable(path: &Path, source: std::io::Error) -> PipelineError {
    PipelineError::FileUnreadable {
        path: path.to_owned(),
        source,
    }
}

fn label(path: &Path) -> String {
    path.file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

fn read_csv(path: &Path, out: &mut Ingested) -> Result<()> {
    let mut reader = csv::ReaderBuilder::new()
        .flexible(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| match e.into_kind() {
            csv::ErrorKind::Io(io) => unreadable(path, io),
            other => PipelineError::MalformedInput {
                path: path.to_owned(),
                message: format!("{other:?}"),
            },
        })?;
    let headers = reader
        .headers()
        .map_err(|e| PipelineError::MalformedInput {
            path: path.to_owned(),
            message: e.to_string(),
        })?
        .clone();
    let fields: Vec<Option<Field>> = headers.iter().map(classify).collect();
    if !fields.contains(&Some(Field::Code)) {
        return Err(PipelineError::NoCodeColumn {
            path: path.to_owned(),
        });
    }
    let name = label(path);
    for (i, record) in reader.records().enumerate() {
        // header is line 1
        let origin = format!("{name}:{}", i + 2);
        let record = match record {
            Ok(r) => r,
            Err(e) => {
                out.rejects.push(Reject {
                    origin,
                    raw: String::new(),
                    reason: e.to_string(),
                });
                continue;
            }
        };
        let mut raw = RawRow::default();
        for (field, cell) in fields.iter().zip(record.iter()) {
            match field {
                Some(Field::Code) => raw.code = cell.to_string(),
                Some(Field::Signs) => raw.signs = Some(cell.to_string()),
                Some(Field::Wirtinger) => raw.wirtinger = Some(cell.to_string()),
                Some(Field::AnyHomomorphism) => raw.any_homomorphism = Some(cell.to_string()),
                None => {}
            }
        }
        match build(origin, raw) {
            Ok(row) => out.rows.push(row),
            Err(r) => out.rejects.push(r),
        }
    }
    Ok(())
}

fn cell_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => None,
        Value::String(s) => Some(s.clone()),
        Value::Number(n) => Some(n.to_string()),
        Value::Bool(b) => Some(if *b { "1" } else { "0" }.to_string()),
        Value::Array(items) => Some(
            items
                .iter()
                .map(|x| match x {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                })
                .collect::<Vec<_>>()
                .join(" "),
        ),
        Value::Object(_) => Some(v.to_string()),
    }
}

fn read_jsonl(path: &Path, out: &mut Ingested) -> Result<()> {
    let file = std::fs::File::open(path).map_err(|e| unreadable(path, e))?;
    let name = label(path);
    let mut saw_code = false;
    let mut any_line = false;
    for (i, line) in std::io::BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| unreadable(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        any_line = true;
        let origin = format!("{name}:{}", i + 1);
        let obj = match serde_json::from_str::<Value>(&line) {
            Ok(Value::Object(map)) => map,
            Ok(_) => {
                out.rejects.push(Reject {
                    origin,
                    raw: line,
                    reason: "not a JSON object".into(),
                });
                continue;
            }
            Err(e) => {
                out.rejects.push(Reject {
                    origin,
                    raw: line,
                    reason: e.to_string(),
                });
                continue;
            }
        };
        let mut raw = RawRow::default();
        let mut has_code = false;
        for (key, value) in &obj {
            let text = cell_text(value);
            match classify(key) {
                Some(Field::Code) => {
                    has_code = true;
                    raw.code = text.unwrap_or_default();
                }
                Some(Field::Signs) => raw.signs = text,
                Some(Field::Wirtinger) => raw.wirtinger = text,
                Some(Field::AnyHomomorphism) => raw.any_homomorphism = text,
                None => {}
            }
        }
        if !has_code {
            out.rejects.push(Reject {
                origin,
                raw: line,
                reason: "no gauss_code field".into(),
            });
            continue;
        }
        saw_code = true;
        match build(origin, raw) {
            Ok(row) => out.rows.push(row),
            Err(r) => out.rejects.push(r),
        }
    }
    if any_line && !saw_code {
        return Err(PipelineError::NoCodeColumn {
            path: path.to_owned(),
        });
    }
    Ok(())
}

fn is_jsonl(path: &Path) -> bool {
    matches!(
        path.extension()
            .and_then(|e| e.to_str())
            .map(str::to_ascii_lowercase)
            .as_deref(),
        Some("jsonl") | Some("ndjson") | Some("json")
    )
}

/// Reads every file in order; bad rows become [`Reject`]s, bad files errors.
pub fn ingest(paths: &[impl AsRef<Path>]) -> Result<Ingested> {
    let mut out = Ingested::default();
    for path in paths {
        let path = path.as_ref();
        if is_jsonl(path) {
            read_jsonl(path, &mut out)?;
        } else {
            read_csv(path, &mut out)?;
        }
    }
    Ok(out)
}
