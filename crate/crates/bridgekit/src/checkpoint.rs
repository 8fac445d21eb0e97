//! Append-only store of finished analyses, keyed by canonical code text.
//!
//! The first line records the run settings that affect analyses; later lines
//! are `{"key": ..., "analysis": ...}`. A torn final line from an interrupted
//! run is skipped on load.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Read, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{PipelineError, Result};
use crate::record::Analysis;

#[derive(Serialize, Deserialize)]
struct Header {
    config: serde_json::Value,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    key: String,
    analysis: Analysis,
}

pub struct Checkpoint {
    path: PathBuf,
    writer: BufWriter<File>,
}

fn unwritable(path: &Path, source: std::io::Error) -> PipelineError {
    PipelineError::OutputUnwritable {
        path: path.to_owned(),
        source,
    }
}

fn ends_with_newline(path: &Path) -> Result<bool> {
    let mut file = File::open(path).map_err(|source| PipelineError::FileUnreadable {
        path: path.to_owned(),
        source,
    })?;
    let mut last = [0u8];
    file.seek(SeekFrom::End(-1))
        .and_then(|_| file.read_exact(&mut last))
        .map_err(|source| PipelineError::FileUnreadable {
            path: path.to_owned(),
            source,
        })?;
    Ok(last[0] == b'\n')
}

/// Reads the entries of `path` if it was written under the same `config`.
/// A missing file or a config mismatch yields an empty map.
pub fn load(path: &Path, config: &serde_json::Value) -> Result<HashMap<String, Analysis>> {
    let mut out = HashMap::new();
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(out),
        Err(source) => {
            return Err(PipelineError::FileUnreadable {
                path: path.to_owned(),
                source,
            })
        }
    };
    let mut lines = BufReader::new(file).lines();
    let header = match lines.next() {
        Some(line) => line.map_err(|source| PipelineError::FileUnreadable {
            path: path.to_owned(),
            source,
        })?,
        None => return Ok(out),
    };
    match serde_json::from_str::<Header>(&header) {
        Ok(h) if &h.config == config => {}
        _ => {
            log::warn!(
                "{}: written under different settings, not reused",
                path.display()
            );
            return Ok(out);
        }
    }
    for line in lines {
        let line = line.map_err(|source| PipelineError::FileUnreadable {
            path: path.to_owned(),
            source,
        })?;
        match serde_json::from_str::<Entry>(&line) {
            Ok(e) => {
                out.insert(e.key, e.analysis);
            }
            Err(_) => log::warn!("{}: skipping unreadable entry", path.display()),
        }
    }
    Ok(out)
}

impl Checkpoint {
    /// Opens `path` for appending when `keep` holds (the entries were loaded
    /// under the same settings), otherwise starts it afresh.
    pub fn open(path: &Path, config: &serde_json::Value, keep: bool) -> Result<Self> {
        let keep = keep && path.metadata().map(|m| m.len() > 0).unwrap_or(false);
        let file = if keep {
            OpenOptions::new().append(true).open(path)
        } else {
            File::create(path)
        }
        .map_err(|e| unwritable(path, e))?;
        let mut cp = Checkpoint {
            path: path.to_owned(),
            writer: BufWriter::new(file),
        };
        if keep && !ends_with_newline(path)? {
            // terminate a torn last line so the next entry starts cleanly
            cp.line("")?;
        }
        if !keep {
            let header = serde_json::to_string(&Header {
                config: config.clone(),
            })
            .expect("serializable");
            cp.line(&header)?;
            cp.flush()?;
        }
        Ok(cp)
    }

    fn line(&mut self, text: &str) -> Result<()> {
        writeln!(self.writer, "{text}").map_err(|e| unwritable(&self.path, e))
    }

    pub fn append(&mut self, key: &str, analysis: &Analysis) -> Result<()> {
        let text = serde_json::to_string(&Entry {
            key: key.to_string(),
            analysis: analysis.clone(),
        })
        .expect("serializable");
        self.line(&text)
    }

    pub fn flush(&mut self) -> Result<()> {
        self.writer.flush().map_err(|e| unwritable(&self.path, e))
    }
}
