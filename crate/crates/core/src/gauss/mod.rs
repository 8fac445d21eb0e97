//! Gauss codes and the structural operations on them.
//!
//! A code with `n` crossings is a cyclic sequence of length `2n` in which every
//! label `1..=n` appears once positive (over-pass) and once negative
//! (under-pass). Positions are read modulo `2n` everywhere.

mod braid;
mod canonical;
mod moves;
mod text;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

pub use moves::Kink;
pub use text::ParsedCode;

/// Crossing sign; `Positive` is the right-handed crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Positive,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

/// Where the two passes of one crossing sit in the sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingPositions {
    pub over: usize,
    pub under: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussCode {
    entries: Vec<i32>,
}

/// Maximal run between two consecutive under-passes.
///
/// `entries` holds the covered sub-sequence including both negative
/// endpoints; for a single-crossing code the strand wraps all the way around
/// and both endpoints are the same entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strand {
    pub start_index: usize,
    pub end_index: usize,
    pub entries: Vec<i32>,
}

impl Strand {
    /// Over-passes strictly inside the strand.
    pub fn interior(&self) -> &[i32] {
        &self.entries[1..self.entries.len() - 1]
    }

    pub fn is_overbridge(&self) -> bool {
        self.interior().iter().any(|&e| e > 0)
    }
}

impl GaussCode {
    /// Validates `entries`; labels that are not exactly `1..=n` are renumbered
    /// by order of first appearance.
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        let (entries, _) = normalize(&entries)?;
        Ok(GaussCode { entries })
    }

    /// The crossingless diagram.
    pub fn unknot() -> Self {
        GaussCode::default()
    }

    pub(crate) fn from_valid(entries: Vec<i32>) -> Self {
        debug_assert!(normalize(&entries)
            .map(|(e, _)| e == entries)
            .unwrap_or(false));
        GaussCode { entries }
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn crossing_count(&self) -> usize {
        self.entries.len() / 2
    }

    /// Indexed by `label - 1`.
    pub fn crossing_positions(&self) -> Vec<CrossingPositions> {
        let mut out = vec![CrossingPositions { over: 0, under: 0 }; self.crossing_count()];
        for (p, &e) in self.entries.iter().enumerate() {
            let slot = &mut out[e.unsigned_abs() as usize - 1];
            if e > 0 {
                slot.over = p;
            } else {
                slot.under = p;
            }
        }
        out
    }

    pub fn positions_of(&self, label: u32) -> Result<CrossingPositions> {
        if label == 0 || label as usize > self.crossing_count() {
            return Err(Error::LabelAbsent(label));
        }
        Ok(self.crossing_positions()[label as usize - 1])
    }

    /// Splits the cyclic sequence at its under-passes.
    ///
    /// Strand `i` starts at the `i`-th negative entry (in sequence order) and
    /// ends at the next one.
    pub fn strands(&self) -> Result<Vec<Strand>> {
        if self.is_empty() {
            return Err(Error::EmptyCode);
        }
        let m = self.len();
        let negatives: Vec<usize> = (0..m).filter(|&p| self.entries[p] < 0).collect();
        let n = negatives.len();
        Ok((0..n)
            .map(|i| {
                let start = negatives[i];
                let end = negatives[(i + 1) % n];
                let mut span = (end + m - start) % m;
                if span == 0 {
                    span = m;
                }
                let entries = (0..=span).map(|d| self.entries[(start + d) % m]).collect();
                Strand {
                    start_index: start,
                    end_index: end,
                    entries,
                }
            })
            .collect())
    }

    /// For every position, the strand it belongs to: under-passes map to the
    /// strand they start, over-passes to the strand that contains them.
    pub(crate) fn strand_of_positions(&self) -> Vec<usize> {
        let m = self.len();
        let mut out = vec![0; m];
        let Some(first) = (0..m).find(|&p| self.entries[p] < 0) else {
            return out;
        };
        let mut current = 0;
        for d in 0..m {
            let p = (first + d) % m;
            if self.entries[p] < 0 && d > 0 {
                current += 1;
            }
            out[p] = current;
        }
        out
    }

    pub fn overbridge_count(&self) -> usize {
        match self.strands() {
            Ok(strands) => strands.iter().filter(|s| s.is_overbridge()).count(),
            Err(_) => 0,
        }
    }

    /// Necessary condition for a planar diagram: every crossing has an even
    /// number of entries between its two passes. `false` proves the code is
    /// not classical; `true` is inconclusive.
    pub fn parity_filter(&self) -> bool {
        self.crossing_positions().iter().all(|c| {
            let (lo, hi) = if c.over < c.under {
                (c.over, c.under)
            } else {
                (c.under, c.over)
            };
            (hi - lo - 1) % 2 == 0
        })
    }

    /// Deletes both passes of crossing `k`, turning it virtual. Labels above
    /// `k` shift down by one.
    pub fn virtualize_remove(&self, k: u32) -> Result<GaussCode> {
        self.positions_of(k)?;
        Ok(GaussCode {
            entries: remove_labels(&self.entries, &[k]),
        })
    }

    /// Exchanges over and under at crossing `j`.
    pub fn crossing_switch(&self, j: u32) -> Result<GaussCode> {
        self.positions_of(j)?;
        let entries = self
            .entries
            .iter()
            .map(|&e| if e.unsigned_abs() == j { -e } else { e })
            .collect();
        Ok(GaussCode { entries })
    }

    /// Connected sum with the cut at position 0 of `self`.
    pub fn connected_sum(&self, other: &GaussCode) -> GaussCode {
        self.connected_sum_at(other, 0)
    }

    /// Inserts the whole of `other`, relabelled above this code's crossings,
    /// just before position `cut`.
    pub fn connected_sum_at(&self, other: &GaussCode, cut: usize) -> GaussCode {
        let shift = self.crossing_count() as i32;
        let cut = if self.is_empty() { 0 } else { cut % self.len() };
        let mut entries = Vec::with_capacity(self.len() + other.len());
        entries.extend_from_slice(&self.entries[..cut]);
        entries.extend(other.entries.iter().map(|&e| e + e.signum() * shift));
        entries.extend_from_slice(&self.entries[cut..]);
        GaussCode { entries }
    }

    /// Cyclic rotation so that the result starts at old position `k`.
    pub fn rotate(&self, k: usize) -> GaussCode {
        if self.is_empty() {
            return self.clone();
        }
        let mut entries = self.entries.clone();
        entries.rotate_left(k % self.len());
        GaussCode { entries }
    }

    /// Same diagram traversed in the opposite direction.
    pub fn reverse(&self) -> GaussCode {
        let mut entries = self.entries.clone();
        entries.reverse();
        GaussCode { entries }
    }

    /// Attaches crossing signs (`signs[i]` belongs to label `i + 1`).
    pub fn with_signs(self, signs: Vec<Sign>) -> Result<SignedGaussCode> {
        SignedGaussCode::new(self, signs)
    }

    pub fn with_uniform_sign(self, sign: Sign) -> SignedGaussCode {
        let n = self.crossing_count();
        SignedGaussCode {
            code: self,
            signs: vec![sign; n],
        }
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// A Gauss code with a sign for every crossing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SignedGaussCode {
    code: GaussCode,
    signs: Vec<Sign>,
}

impl SignedGaussCode {
    pub fn new(code: GaussCode, signs: Vec<Sign>) -> Result<Self> {
        if signs.len() != code.crossing_count() {
            return Err(Error::MalformedSignBlock(alloc::format!(
                "{} signs for {} crossings",
                signs.len(),
                code.crossing_count()
            )));
        }
        Ok(SignedGaussCode { code, signs })
    }

    /// Convenience constructor from raw entries and `±1` signs.
    pub fn from_parts(entries: Vec<i32>, signs: &[i32]) -> Result<Self> {
        let (entries, old_of_new) = normalize(&entries)?;
        if signs.len() != old_of_new.len() {
            return Err(Error::MalformedSignBlock(alloc::format!(
                "{} signs for {} crossings",
                signs.len(),
                old_of_new.len()
            )));
        }
        let mut sorted: Vec<u32> = old_of_new.clone();
        sorted.sort_unstable();
        let mut by_old = BTreeMap::new();
        for (old, &s) in sorted.iter().zip(signs) {
            let sign = match s {
                1 => Sign::Positive,
                -1 => Sign::Negative,
                _ => return Err(Error::MalformedSignBlock(alloc::format!("sign {s}"))),
            };
            by_old.insert(*old, sign);
        }
        let signs = old_of_new.iter().map(|old| by_old[old]).collect();
        Ok(SignedGaussCode {
            code: GaussCode { entries },
            signs,
        })
    }

    pub fn unknot() -> Self {
        SignedGaussCode::default()
    }

    pub fn code(&self) -> &GaussCode {
        &self.code
    }

    pub fn into_code(self) -> GaussCode {
        self.code
    }

    pub fn entries(&self) -> &[i32] {
        self.code.entries()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn sign(&self, label: u32) -> Result<Sign> {
        self.signs
            .get((label as usize).wrapping_sub(1))
            .copied()
            .ok_or(Error::LabelAbsent(label))
    }

    pub fn crossing_count(&self) -> usize {
        self.code.crossing_count()
    }

    pub fn is_empty(&self) -> bool {
        self.code.is_empty()
    }

    pub fn len(&self) -> usize {
        self.code.len()
    }

    pub fn virtualize_remove(&self, k: u32) -> Result<SignedGaussCode> {
        let code = self.code.virtualize_remove(k)?;
        let mut signs = self.signs.clone();
        signs.remove(k as usize - 1);
        Ok(SignedGaussCode { code, signs })
    }

    /// Switches crossing `j`; its sign flips with it.
    pub fn crossing_switch(&self, j: u32) -> Result<SignedGaussCode> {
        let code = self.code.crossing_switch(j)?;
        let mut signs = self.signs.clone();
        signs[j as usize - 1] = signs[j as usize - 1].flipped();
        Ok(SignedGaussCode { code, signs })
    }

    pub fn connected_sum(&self, other: &SignedGaussCode) -> SignedGaussCode {
        self.connected_sum_at(other, 0)
    }

    pub fn connected_sum_at(&self, other: &SignedGaussCode, cut: usize) -> SignedGaussCode {
        let code = self.code.connected_sum_at(&other.code, cut);
        let mut signs = self.signs.clone();
        signs.extend_from_slice(&other.signs);
        SignedGaussCode { code, signs }
    }

    pub fn rotate(&self, k: usize) -> SignedGaussCode {
        SignedGaussCode {
            code: self.code.rotate(k),
            signs: self.signs.clone(),
        }
    }

    pub fn reverse(&self) -> SignedGaussCode {
        SignedGaussCode {
            code: self.code.reverse(),
            signs: self.signs.clone(),
        }
    }

    pub fn writhe(&self) -> i32 {
        self.signs.iter().map(|s| s.value()).sum()
    }
}

impl fmt::Display for SignedGaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.code.is_empty() {
            return f.write_str("|");
        }
        write!(f, "{} |", self.code)?;
        for s in &self.signs {
            write!(f, " {}", s.symbol())?;
        }
        Ok(())
    }
}

/// Checks the double-occurrence invariant and renumbers non-contiguous labels
/// by first appearance. Returns the new entries and, per new label, the label
/// it had in the input.
fn normalize(raw: &[i32]) -> Result<(Vec<i32>, Vec<u32>)> {
    let mut seen: BTreeMap<u32, (bool, bool)> = BTreeMap::new();
    let mut first_order = Vec::new();
    for &e in raw {
        if e == 0 {
            return Err(Error::ZeroLabel);
        }
        let slot = seen.entry(e.unsigned_abs()).or_insert_with(|| {
            first_order.push(e.unsigned_abs());
            (false, false)
        });
        let flag = if e > 0 { &mut slot.0 } else { &mut slot.1 };
        if *flag {
            return Err(Error::DuplicateOccurrence(e));
        }
        *flag = true;
    }
    if let Some((&label, _)) = seen.iter().find(|(_, &(pos, neg))| !(pos && neg)) {
        return Err(Error::MissingPartner(label));
    }
    let n = seen.len();
    let contiguous = seen.keys().enumerate().all(|(i, &l)| l as usize == i + 1);
    if contiguous {
        return Ok((raw.to_vec(), (1..=n as u32).collect()));
    }
    let new_of_old: BTreeMap<u32, i32> = first_order
        .iter()
        .enumerate()
        .map(|(i, &old)| (old, i as i32 + 1))
        .collect();
    let entries = raw
        .iter()
        .map(|&e| e.signum() * new_of_old[&e.unsigned_abs()])
        .collect();
    Ok((entries, first_order))
}

/// Drops every pass of the given labels and closes the gaps in the label
/// range, keeping relative order.
pub(crate) fn remove_labels(entries: &[i32], labels: &[u32]) -> Vec<i32> {
    entries
        .iter()
        .filter(|e| !labels.contains(&e.unsigned_abs()))
        .map(|&e| {
            let below = labels.iter().filter(|&&l| l < e.unsigned_abs()).count() as i32;
            e - e.signum() * below
        })
        .collect()
}

/// Renumbers labels by first appearance, carrying signs along.
pub(crate) fn relabel_first_appearance(
    entries: &[i32],
    signs: Option<&[Sign]>,
) -> (Vec<i32>, Vec<Sign>) {
    let n = entries.len() / 2;
    let mut new_of_old = vec![0i32; n + 1];
    let mut new_signs = Vec::with_capacity(if signs.is_some() { n } else { 0 });
    let mut next = 1;
    let mut out = Vec::with_capacity(entries.len());
    for &e in entries {
        let old = e.unsigned_abs() as usize;
        if new_of_old[old] == 0 {
            new_of_old[old] = next;
            next += 1;
            if let Some(s) = signs {
                new_signs.push(s[old - 1]);
            }
        }
        out.push(e.signum() * new_of_old[old]);
    }
    (out, new_signs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(v: &[i32]) -> GaussCode {
        GaussCode::new(v.to_vec()).unwrap()
    }

    #[test]
    fn overbridges_of_worked_example() {
        let c = code(&[1, -4, -3, 2, 4, -1, -2, 3]);
        let strands = c.strands().unwrap();
        assert_eq!(strands.len(), 4);
        let bridges: Vec<Vec<i32>> = strands
            .iter()
            .filter(|s| s.is_overbridge())
            .map(|s| s.interior().to_vec())
            .collect();
        assert_eq!(bridges, vec![vec![2, 4], vec![3, 1]]);
        assert_eq!(c.overbridge_count(), 2);
    }

    #[test]
    fn trefoil_strands_are_all_overbridges() {
        let c = code(&[-1, 2, -3, 1, -2, 3]);
        assert_eq!(c.strands().unwrap().len(), 3);
        assert_eq!(c.overbridge_count(), 3);
        assert_eq!(code(&[-1, 2, -4, 4, -3, 1, -2, 3]).overbridge_count(), 4);
    }

    #[test]
    fn single_crossing_strand_wraps() {
        let s = code(&[-1, 1]).strands().unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].entries, vec![-1, 1, -1]);
        assert!(s[0].is_overbridge());
    }

    #[test]
    fn empty_code_has_no_strands() {
        assert_eq!(GaussCode::unknot().strands(), Err(Error::EmptyCode));
        assert_eq!(GaussCode::unknot().overbridge_count(), 0);
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            GaussCode::new(vec![1, -2, -1]),
            Err(Error::MissingPartner(2))
        );
        assert_eq!(
            GaussCode::new(vec![1, 1, -1]),
            Err(Error::DuplicateOccurrence(1))
        );
        assert_eq!(GaussCode::new(vec![0, 1, -1]), Err(Error::ZeroLabel));
    }

    #[test]
    fn non_contiguous_labels_are_renumbered() {
        assert_eq!(code(&[-7, 3, 7, -3]).entries(), &[-1, 2, 1, -2]);
        // contiguous labels keep their numbering even if out of order
        assert_eq!(code(&[2, -1, -2, 1]).entries(), &[2, -1, -2, 1]);
    }

    #[test]
    fn virtualize_and_switch() {
        let t = code(&[-1, 2, -3, 1, -2, 3]);
        assert_eq!(t.virtualize_remove(2).unwrap().entries(), &[-1, -2, 1, 2]);
        assert_eq!(
            code(&[1, -1]).virtualize_remove(1).unwrap(),
            GaussCode::unknot()
        );
        assert_eq!(t.virtualize_remove(4), Err(Error::LabelAbsent(4)));
        assert_eq!(
            t.crossing_switch(1).unwrap().entries(),
            &[1, 2, -3, -1, -2, 3]
        );
        assert_eq!(
            code(&[-1, 1]).crossing_switch(1).unwrap().entries(),
            &[1, -1]
        );
        assert_eq!(t.crossing_switch(0), Err(Error::LabelAbsent(0)));
    }

    #[test]
    fn sixteen_virtualizations_of_a_sixteen_crossing_code() {
        let base = SignedGaussCode::from_braid(
            5,
            &[1, -2, 3, -4, -1, 2, -3, 4, 1, 2, -3, -4, -1, -2, 3, 4],
        )
        .unwrap()
        .into_code();
        assert_eq!(base.crossing_count(), 16);
        let outs: Vec<GaussCode> = (1..=16)
            .map(|k| base.virtualize_remove(k).unwrap())
            .collect();
        assert!(outs.iter().all(|c| c.crossing_count() == 15));
        for i in 0..16 {
            for j in i + 1..16 {
                assert_ne!(outs[i], outs[j]);
            }
        }
    }

    #[test]
    fn parity() {
        assert!(!code(&[1, -2, -1, 2]).parity_filter());
        assert!(code(&[-1, 2, -3, 1, -2, 3]).parity_filter());
        assert!(GaussCode::unknot().parity_filter());
    }

    #[test]
    fn connected_sum_counts() {
        let t = code(&[-1, 2, -3, 1, -2, 3]);
        assert_eq!(t.connected_sum(&GaussCode::unknot()), t);
        let tt = t.connected_sum(&t);
        assert_eq!(tt.crossing_count(), 6);
        assert_eq!(tt.strands().unwrap().len(), 6);
        assert_eq!(tt.entries(), &[-4, 5, -6, 4, -5, 6, -1, 2, -3, 1, -2, 3]);
        assert!(GaussCode::new(tt.entries().to_vec()).is_ok());
    }

    #[test]
    fn signed_switch_flips_sign() {
        let t = SignedGaussCode::from_parts(vec![-1, 2, -3, 1, -2, 3], &[-1, -1, -1]).unwrap();
        let s = t.crossing_switch(2).unwrap();
        assert_eq!(s.sign(2).unwrap(), Sign::Positive);
        assert_eq!(s.writhe(), t.writhe() + 2);
        assert_eq!(s.crossing_switch(2).unwrap(), t);
    }

    #[test]
    fn from_parts_maps_signs_through_relabelling() {
        // labels 5 and 9; signs listed for 5 then 9
        let c = SignedGaussCode::from_parts(vec![9, -5, -9, 5], &[1, -1]).unwrap();
        assert_eq!(c.entries(), &[1, -2, -1, 2]);
        assert_eq!(c.signs(), &[Sign::Negative, Sign::Positive]);
    }
}
