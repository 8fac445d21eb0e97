//! Text files holding quandle and biquandle operation tables.
//!
//! ```text
//! 4
//! <4 rows of the over table>
//! <4 rows of the under table>
//! ```
//!
//! A file whose first line is `quandle` (optionally followed by the order on
//! the same line) holds only the under table; the over table is trivial.

use std::path::Path;

use bridgekit_core::Biquandle;

use crate::error::{PipelineError, Result};

/// A structure together with the name it is reported under.
#[derive(Debug, Clone)]
pub struct NamedStructure {
    pub name: String,
    pub structure: Biquandle,
}

impl NamedStructure {
    pub fn new(name: impl Into<String>, structure: Biquandle) -> Self {
        NamedStructure {
            name: name.into(),
            structure,
        }
    }

    pub fn r3() -> Self {
        Self::new("R3", Biquandle::r3())
    }

    pub fn y4() -> Self {
        Self::new("Y", Biquandle::y4())
    }
}

pub fn parse_table_text(text: &str) -> Result<Biquandle, String> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let first = lines.next().ok_or("empty file")?;
    let mut head = first.split_whitespace();
    let quandle = first.to_ascii_lowercase().starts_with("quandle");
    if quandle {
        head.next();
    }
    let order: usize = match head.next() {
        Some(tok) => tok.parse().map_err(|_| format!("bad order `{tok}`"))?,
        None => {
            let line = lines.next().ok_or("missing order")?;
            line.parse().map_err(|_| format!("bad order `{line}`"))?
        }
    };
    let mut rows = Vec::new();
    for line in lines {
        let row: Vec<usize> = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| format!("bad entry `{t}`")))
            .collect::<Result<_, _>>()?;
        rows.push(row);
    }
    let expected = if quandle { order } else { 2 * order };
    if rows.len() != expected {
        return Err(format!("expected {expected} rows, found {}", rows.len()));
    }
    let built = if quandle {
        Biquandle::quandle(rows)
    } else {
        let under = rows.split_off(order);
        Biquandle::from_tables(rows, under)
    };
    built.map_err(|e| e.to_string())
}

pub fn load_structure(path: &Path) -> Result<NamedStructure> {
    let text = std::fs::read_to_string(path).map_err(|source| PipelineError::FileUnreadable {
        path: path.to_owned(),
        source,
    })?;
    let structure = parse_table_text(&text).map_err(|message| PipelineError::BadTable {
        path: path.to_owned(),
        message,
    })?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    Ok(NamedStructure { name, structure })
}
