//! Per-code results and their CSV / JSON-lines layouts.

use std::collections::BTreeMap;

use bridgekit_core::biquandle::{coloring_lower_bound, count_colorings};
use bridgekit_core::bracket::jones_fingerprint;
use bridgekit_core::bridge::{wirtinger_number, BridgeBounds};
use bridgekit_core::{ColoringKind, GaussCode, SignedGaussCode};
use serde::{Deserialize, Serialize};

use crate::tables::NamedStructure;

/// Which invariants a run computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Selection {
    pub wirtinger: bool,
    pub colorings: bool,
    pub jones: bool,
}

impl Default for Selection {
    fn default() -> Self {
        Selection {
            wirtinger: true,
            colorings: true,
            jones: true,
        }
    }
}

/// Invariants of one code. They depend only on the code, so they are
/// computed on its canonical form and can be cached under that key.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub crossings: usize,
    pub strands: usize,
    pub overbridges: usize,
    pub parity_ok: bool,
    /// Smallest full seed set over both orientations, with the search
    /// starting at 1; absent when the search hit its cap or was not run.
    pub wirtinger: Option<usize>,
    pub counts: BTreeMap<String, u64>,
    /// Best first-bridge lower bound over the quandles.
    pub quandle_lower: Option<usize>,
    /// Best second-bridge lower bound over the biquandles.
    pub b2_lower: Option<usize>,
    pub jones_fp: Option<String>,
}

pub fn analyze(
    code: &SignedGaussCode,
    selection: Selection,
    k_max: usize,
    quandles: &[NamedStructure],
    biquandles: &[NamedStructure],
) -> Analysis {
    let plain = code.code();
    // the moves follow the orientation, so both directions are searched
    let wirtinger = if selection.wirtinger {
        let seeds = |c: &GaussCode| wirtinger_number(c, 1, k_max).value();
        match (seeds(plain), seeds(&plain.reverse())) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    } else {
        None
    };
    let mut counts = BTreeMap::new();
    let mut best = |list: &[NamedStructure], kind: ColoringKind| -> Option<usize> {
        if !selection.colorings {
            return None;
        }
        list.iter()
            .filter_map(|s| {
                let count = count_colorings(code, &s.structure);
                counts.insert(s.name.clone(), count);
                coloring_lower_bound(count, s.structure.order(), kind).ok()
            })
            .max()
    };
    let quandle_lower = best(quandles, ColoringKind::Quandle);
    let b2_lower = best(biquandles, ColoringKind::Biquandle);
    Analysis {
        crossings: plain.crossing_count(),
        strands: plain.crossing_count().max(1),
        overbridges: plain.overbridge_count(),
        parity_ok: plain.parity_filter(),
        wirtinger,
        counts,
        quandle_lower,
        b2_lower,
        jones_fp: selection.jones.then(|| jones_fingerprint(code)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub lower: usize,
    pub upper: Option<usize>,
    pub exact: bool,
}

impl From<BridgeBounds> for Bounds {
    fn from(b: BridgeBounds) -> Self {
        Bounds {
            lower: b.lower,
            upper: b.upper,
            exact: b.exact,
        }
    }
}

/// One exported dataset row (the JSON-lines layout).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotRecord {
    pub code: String,
    /// `+`/`-` per crossing; absent when the input had no signs and all
    /// crossings were taken as negative.
    pub signs: Option<String>,
    pub signs_assumed: bool,
    pub crossings: usize,
    pub strands: usize,
    pub overbridges: usize,
    pub parity_ok: bool,
    pub unknot: bool,
    pub wirtinger_upper: Option<usize>,
    pub quandle_lower: Option<usize>,
    pub biquandle_counts: BTreeMap<String, u64>,
    pub b1: Bounds,
    pub b2_lower: Option<usize>,
    pub jones_fp: Option<String>,
    pub source: String,
}

/// The CSV layout; field order is the column order.
#[derive(Debug, Serialize)]
pub struct CsvRow<'a> {
    pub code: &'a str,
    pub signs: &'a str,
    pub crossings: usize,
    pub strands: usize,
    pub overbridges: usize,
    pub wirtinger_upper: Option<usize>,
    pub quandle_lower: Option<usize>,
    pub b1_lower: usize,
    pub b1_upper: Option<usize>,
    pub b1_exact: bool,
    pub b2_lower: Option<usize>,
    pub jones_fp: Option<&'a str>,
    pub source: &'a str,
}

pub const CSV_COLUMNS: [&str; 13] = [
    "code",
    "signs",
    "crossings",
    "strands",
    "overbridges",
    "wirtinger_upper",
    "quandle_lower",
    "b1_lower",
    "b1_upper",
    "b1_exact",
    "b2_lower",
    "jones_fp",
    "source",
];

impl KnotRecord {
    pub fn csv_row(&self) -> CsvRow<'_> {
        CsvRow {
            code: &self.code,
            signs: self.signs.as_deref().unwrap_or(""),
            crossings: self.crossings,
            strands: self.strands,
            overbridges: self.overbridges,
            wirtinger_upper: self.wirtinger_upper,
            quandle_lower: self.quandle_lower,
            b1_lower: self.b1.lower,
            b1_upper: self.b1.upper,
            b1_exact: self.b1.exact,
            b2_lower: self.b2_lower,
            jones_fp: self.jones_fp.as_deref(),
            source: &self.source,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_analysis() {
        let t: SignedGaussCode = "-1 2 -3 1 -2 3 | - - -".parse().unwrap();
        let a = analyze(
            &t,
            Selection::default(),
            6,
            &[NamedStructure::r3()],
            &[NamedStructure::y4()],
        );
        assert_eq!(a.crossings, 3);
        assert_eq!(a.overbridges, 3);
        assert_eq!(a.wirtinger, Some(2));
        assert_eq!(a.counts["R3"], 9);
        assert_eq!(a.counts["Y"], 4);
        assert_eq!(a.quandle_lower, Some(2));
        assert_eq!(a.b2_lower, Some(1));
        assert_eq!(a.jones_fp.as_deref(), Some("-1*A^16+1*A^12+1*A^4"));
    }

    #[test]
    fn csv_header_matches_row_fields() {
        let mut w = csv::Writer::from_writer(Vec::new());
        let t: SignedGaussCode = "-1 1 | +".parse().unwrap();
        let a = analyze(&t, Selection::default(), 1, &[], &[]);
        let rec = KnotRecord {
            code: t.code().to_string(),
            signs: Some("+".into()),
            signs_assumed: false,
            crossings: a.crossings,
            strands: a.strands,
            overbridges: a.overbridges,
            parity_ok: a.parity_ok,
            unknot: false,
            wirtinger_upper: a.wirtinger,
            quandle_lower: None,
            biquandle_counts: a.counts,
            b1: Bounds {
                lower: 1,
                upper: Some(1),
                exact: true,
            },
            b2_lower: None,
            jones_fp: a.jones_fp,
            source: "constructed".into(),
        };
        w.serialize(rec.csv_row()).unwrap();
        let text = String::from_utf8(w.into_inner().unwrap()).unwrap();
        assert_eq!(text.lines().next().unwrap(), CSV_COLUMNS.join(","));
    }
}
