//! The dataset run: ingest, expand, deduplicate, analyze, label, export.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use bridgekit_core::bridge::{bridge_label, default_k_max, LabelRules};
use bridgekit_core::{ParsedCode, Sign, SignedGaussCode};
use rayon::prelude::*;
use serde::Serialize;

use crate::checkpoint::{self, Checkpoint};
use crate::error::{PipelineError, Result};
use crate::ingest::{ingest, Hints};
use crate::record::{analyze, Analysis, KnotRecord, Selection};
use crate::tables::NamedStructure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum DedupMode {
    Canonical,
    Jones,
    #[default]
    Both,
}

impl DedupMode {
    fn canonical(self) -> bool {
        matches!(self, DedupMode::Canonical | DedupMode::Both)
    }

    fn jones(self) -> bool {
        matches!(self, DedupMode::Jones | DedupMode::Both)
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub inputs: Vec<PathBuf>,
    /// Directory receiving `dataset.csv`, `dataset.jsonl`, `rejects.csv`,
    /// `summary.json` and, unless `resume` names another file,
    /// `checkpoint.jsonl`.
    pub output: PathBuf,
    /// Replace every input code by its single-crossing virtualizations.
    pub virtualize: bool,
    /// Inputs are rows of a classical census (enables the census labeling
    /// rules for rows that are not virtualized).
    pub census: bool,
    /// Seed count the Wirtinger search is reported from. Defaults to 2 for
    /// census rows and 1 otherwise.
    pub k_start: Option<usize>,
    /// Cap on the Wirtinger search; defaults to `min(crossings, 6)`.
    pub k_max: Option<usize>,
    pub quandles: Vec<NamedStructure>,
    pub biquandles: Vec<NamedStructure>,
    pub dedup: DedupMode,
    pub jobs: usize,
    pub resume: Option<PathBuf>,
    pub selection: Selection,
    pub chunk_size: usize,
}

impl RunConfig {
    pub fn new(inputs: Vec<PathBuf>, output: PathBuf) -> Self {
        RunConfig {
            inputs,
            output,
            virtualize: false,
            census: false,
            k_start: None,
            k_max: None,
            quandles: vec![NamedStructure::r3()],
            biquandles: vec![NamedStructure::y4()],
            dedup: DedupMode::Both,
            jobs: 1,
            resume: None,
            selection: Selection::default(),
            chunk_size: 256,
        }
    }

    fn validate(&self) -> Result<()> {
        let s = self.selection;
        if !(s.wirtinger || s.colorings || s.jones) {
            return Err(PipelineError::Config("no invariant selected".into()));
        }
        if self.jobs == 0 {
            return Err(PipelineError::Config("--jobs must be at least 1".into()));
        }
        if self.chunk_size == 0 {
            return Err(PipelineError::Config(
                "chunk size must be at least 1".into(),
            ));
        }
        if self.k_start.is_some_and(|k| !(1..=2).contains(&k)) {
            return Err(PipelineError::Config("--k-start must be 1 or 2".into()));
        }
        if self.k_max == Some(0) {
            return Err(PipelineError::Config("--k-max must be at least 1".into()));
        }
        if self.dedup.jones() && !s.jones {
            return Err(PipelineError::Config(
                "jones dedup needs the jones invariant".into(),
            ));
        }
        Ok(())
    }

    /// Settings that change an [`Analysis`]; checkpoints from runs with other
    /// settings are not reused.
    fn fingerprint(&self) -> serde_json::Value {
        let tables = |list: &[NamedStructure]| -> Vec<serde_json::Value> {
            list.iter()
                .map(|s| {
                    serde_json::json!({
                        "name": s.name,
                        "over": s.structure.over_table(),
                        "under": s.structure.under_table(),
                    })
                })
                .collect()
        };
        serde_json::json!({
            "k_max": self.k_max,
            "selection": self.selection,
            "quandles": tables(&self.quandles),
            "biquandles": tables(&self.biquandles),
        })
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub rows_read: usize,
    pub rejected: usize,
    pub candidates: usize,
    /// `rejected + candidates`: every ingested row or generated code.
    pub ingested: usize,
    pub deduplicated_canonical: usize,
    pub deduplicated_jones: usize,
    pub exported: usize,
    pub signs_assumed: usize,
    pub exact: usize,
    pub bounded: usize,
    pub exact_rate: f64,
    pub b1_lower_histogram: BTreeMap<usize, usize>,
    pub b1_exact_histogram: BTreeMap<usize, usize>,
    pub b1_upper_histogram: BTreeMap<usize, usize>,
    pub b1_upper_unknown: usize,
    pub b2_lower_histogram: BTreeMap<usize, usize>,
    pub b2_lower_unknown: usize,
    pub analyses_reused: usize,
    pub analyses_computed: usize,
    pub jobs: usize,
    pub elapsed_seconds: f64,
    pub codes_per_second: f64,
}

struct Candidate {
    seq: usize,
    source: String,
    /// Census labeling rules and hints apply.
    from_census: bool,
    virtualized: bool,
    code: SignedGaussCode,
    signs_assumed: bool,
    hints: Hints,
    key: String,
}

fn unwritable(path: &Path) -> impl Fn(std::io::Error) -> PipelineError + '_ {
    move |source| PipelineError::OutputUnwritable {
        path: path.to_owned(),
        source,
    }
}

fn csv_unwritable(path: &Path) -> impl Fn(csv::Error) -> PipelineError + '_ {
    move |e| PipelineError::OutputUnwritable {
        path: path.to_owned(),
        source: e.into(),
    }
}

fn signs_text(code: &SignedGaussCode) -> String {
    code.signs()
        .iter()
        .map(|s| match s {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn code_text(code: &SignedGaussCode) -> String {
    if code.is_empty() {
        "[]".to_string()
    } else {
        code.code().to_string()
    }
}

fn build_record(c: &Candidate, a: &Analysis, config: &RunConfig) -> Result<KnotRecord> {
    let unknot = c.code.is_empty();
    let k_start = if unknot {
        1
    } else {
        config.k_start.unwrap_or(if c.from_census { 2 } else { 1 })
    };
    let computed = if unknot {
        a.wirtinger.map(|_| 1)
    } else {
        a.wirtinger.map(|w| w.max(k_start))
    };
    let hinted = if c.virtualized {
        None
    } else {
        c.hints.wirtinger_number
    };
    let upper = match (computed, hinted) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    };
    let rules = LabelRules {
        k_start,
        classical_census: c.from_census,
        exact_hint: if c.from_census {
            c.hints.any_homomorphism
        } else {
            None
        },
    };
    let lowers: Vec<usize> = a.quandle_lower.into_iter().collect();
    let b1 = bridge_label(upper, &lowers, rules).map_err(|source| PipelineError::Inconsistent {
        code: c.code.to_string(),
        source,
    })?;
    Ok(KnotRecord {
        code: code_text(&c.code),
        signs: (!c.signs_assumed).then(|| signs_text(&c.code)),
        signs_assumed: c.signs_assumed,
        crossings: a.crossings,
        strands: a.strands,
        overbridges: a.overbridges,
        parity_ok: a.parity_ok,
        unknot,
        wirtinger_upper: computed,
        quandle_lower: a.quandle_lower,
        biquandle_counts: a.counts.clone(),
        b1: b1.into(),
        b2_lower: a.b2_lower,
        jones_fp: a.jones_fp.clone(),
        source: c.source.clone(),
    })
}

fn expand(
    config: &RunConfig,
    rows: Vec<crate::ingest::IngestedRow>,
    summary: &mut Summary,
) -> Vec<Candidate> {
    let mut out = Vec::new();
    for row in rows {
        let signs_assumed = !row.code.is_signed();
        if signs_assumed {
            summary.signs_assumed += 1;
        }
        let code = match row.code {
            ParsedCode::Signed(s) => s,
            ParsedCode::Unsigned(c) => c.with_uniform_sign(Sign::Negative),
        };
        let mut push = |code: SignedGaussCode, source: String, virtualized: bool| {
            let code = code.canonical_form();
            out.push(Candidate {
                seq: out.len(),
                source,
                from_census: config.census && !virtualized,
                virtualized,
                key: code.to_string(),
                code,
                signs_assumed,
                hints: row.hints,
            });
        };
        if config.virtualize {
            for k in 1..=code.crossing_count() as u32 {
                let v = code.virtualize_remove(k).expect("label in range");
                push(v, format!("virtualized({},{k})", row.origin), true);
            }
        } else {
            let source = if config.census {
                "census"
            } else {
                "constructed"
            };
            push(code, source.to_string(), false);
        }
    }
    out
}

fn write_outputs(
    config: &RunConfig,
    records: &[KnotRecord],
    rejects: &[crate::ingest::Reject],
) -> Result<()> {
    let out = &config.output;
    let csv_path = out.join("dataset.csv");
    let mut w = csv::Writer::from_path(&csv_path).map_err(csv_unwritable(&csv_path))?;
    if records.is_empty() {
        w.write_record(crate::record::CSV_COLUMNS)
            .map_err(csv_unwritable(&csv_path))?;
    }
    for r in records {
        w.serialize(r.csv_row())
            .map_err(csv_unwritable(&csv_path))?;
    }
    w.flush().map_err(unwritable(&csv_path))?;

    let jsonl_path = out.join("dataset.jsonl");
    let file = File::create(&jsonl_path).map_err(unwritable(&jsonl_path))?;
    let mut w = BufWriter::new(file);
    for r in records {
        serde_json::to_writer(&mut w, r).map_err(|e| unwritable(&jsonl_path)(e.into()))?;
        w.write_all(b"\n").map_err(unwritable(&jsonl_path))?;
    }
    w.flush().map_err(unwritable(&jsonl_path))?;

    let rejects_path = out.join("rejects.csv");
    let mut w = csv::Writer::from_path(&rejects_path).map_err(csv_unwritable(&rejects_path))?;
    w.write_record(["origin", "raw", "reason"])
        .map_err(csv_unwritable(&rejects_path))?;
    for r in rejects {
        w.write_record([&r.origin, &r.raw, &r.reason])
            .map_err(csv_unwritable(&rejects_path))?;
    }
    w.flush().map_err(unwritable(&rejects_path))
}

/// Runs the whole pipeline and writes its outputs.
///
/// Bad rows go to `rejects.csv`; only unreadable inputs, unwritable outputs,
/// bad settings and internal inconsistencies abort the run.
pub fn run(config: &RunConfig) -> Result<Summary> {
    config.validate()?;
    let started = Instant::now();
    std::fs::create_dir_all(&config.output).map_err(unwritable(&config.output))?;
    let mut summary = Summary {
        jobs: config.jobs,
        ..Summary::default()
    };

    let ingested = ingest(&config.inputs)?;
    summary.rows_read = ingested.rows_read();
    summary.rejected = ingested.rejects.len();
    for r in &ingested.rejects {
        log::info!("rejected {}: {}", r.origin, r.reason);
    }
    let candidates = expand(config, ingested.rows, &mut summary);
    if summary.signs_assumed > 0 {
        log::warn!(
            "{} rows have no signs; all their crossings are taken as negative and their jones and \
             biquandle values depend on that choice",
            summary.signs_assumed
        );
    }
    summary.candidates = candidates.len();
    summary.ingested = summary.rejected + summary.candidates;

    let mut seen = HashSet::new();
    let mut kept = Vec::with_capacity(candidates.len());
    for c in candidates {
        if seen.insert(c.key.clone()) || !config.dedup.canonical() {
            kept.push(c);
        } else {
            log::debug!("canonical duplicate: {} ({})", c.key, c.source);
            summary.deduplicated_canonical += 1;
        }
    }

    let fingerprint = config.fingerprint();
    let checkpoint_path = config
        .resume
        .clone()
        .unwrap_or_else(|| config.output.join("checkpoint.jsonl"));
    let mut analyses = match &config.resume {
        Some(path) => checkpoint::load(path, &fingerprint)?,
        None => HashMap::new(),
    };
    let reusable = !analyses.is_empty();
    let mut cp = Checkpoint::open(&checkpoint_path, &fingerprint, reusable)?;

    let mut pending: Vec<&Candidate> = Vec::new();
    let mut queued = HashSet::new();
    for c in &kept {
        if analyses.contains_key(&c.key) {
            summary.analyses_reused += 1;
        } else if queued.insert(c.key.as_str()) {
            pending.push(c);
        }
    }
    summary.analyses_computed = pending.len();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| PipelineError::Config(e.to_string()))?;
    for chunk in pending.chunks(config.chunk_size) {
        let done: Vec<Analysis> = pool.install(|| {
            chunk
                .par_iter()
                .map(|c| {
                    let k_max = config
                        .k_max
                        .unwrap_or_else(|| default_k_max(c.code.code(), true));
                    analyze(
                        &c.code,
                        config.selection,
                        k_max,
                        &config.quandles,
                        &config.biquandles,
                    )
                })
                .collect()
        });
        for (c, a) in chunk.iter().zip(done) {
            cp.append(&c.key, &a)?;
            analyses.insert(c.key.clone(), a);
        }
        cp.flush()?;
    }

    let mut fingerprints = HashSet::new();
    let mut records = Vec::with_capacity(kept.len());
    for c in &kept {
        let a = &analyses[&c.key];
        if config.dedup.jones() {
            let fp = a.jones_fp.clone().expect("jones selected");
            if !fingerprints.insert(fp) {
                log::debug!("jones duplicate: {} ({})", c.key, c.source);
                summary.deduplicated_jones += 1;
                continue;
            }
        }
        records.push((c, build_record(c, a, config)?));
    }
    records.sort_by(|(a, ra), (b, rb)| {
        (&ra.code, &ra.signs, &ra.source, a.seq).cmp(&(&rb.code, &rb.signs, &rb.source, b.seq))
    });
    let records: Vec<KnotRecord> = records.into_iter().map(|(_, r)| r).collect();
    summary.exported = records.len();

    let accounted = summary.exported
        + summary.rejected
        + summary.deduplicated_canonical
        + summary.deduplicated_jones;
    if accounted != summary.ingested {
        return Err(PipelineError::Accounting(format!(
            "ingested {} but exported {} + rejected {} + deduplicated {} + {}",
            summary.ingested,
            summary.exported,
            summary.rejected,
            summary.deduplicated_canonical,
            summary.deduplicated_jones
        )));
    }

    for r in &records {
        *summary.b1_lower_histogram.entry(r.b1.lower).or_default() += 1;
        if r.b1.exact {
            summary.exact += 1;
            *summary.b1_exact_histogram.entry(r.b1.lower).or_default() += 1;
        } else {
            summary.bounded += 1;
        }
        match r.b1.upper {
            Some(u) => *summary.b1_upper_histogram.entry(u).or_default() += 1,
            None => summary.b1_upper_unknown += 1,
        }
        match r.b2_lower {
            Some(b) => *summary.b2_lower_histogram.entry(b).or_default() += 1,
            None => summary.b2_lower_unknown += 1,
        }
    }
    if summary.exported > 0 {
        summary.exact_rate = summary.exact as f64 / summary.exported as f64;
    }

    write_outputs(config, &records, &ingested.rejects)?;
    summary.elapsed_seconds = started.elapsed().as_secs_f64();
    if summary.elapsed_seconds > 0.0 {
        summary.codes_per_second = summary.candidates as f64 / summary.elapsed_seconds;
    }
    let summary_path = config.output.join("summary.json");
    let text = serde_json::to_string_pretty(&summary).expect("serializable");
    std::fs::write(&summary_path, text + "\n").map_err(unwritable(&summary_path))?;
    Ok(summary)
}
