//! Seed propagation over strands and the bounds it gives on the bridge number.
//!
//! Strand `i` is the one starting at the `i`-th under-pass of the code. A
//! crossing `c` can fire once the strand carrying `+c` and the strand ending
//! at `-c` are both colored; firing colors the strand that starts at `-c`.

use alloc::vec;
use alloc::vec::Vec;

use crate::gauss::GaussCode;
use crate::{Error, Result};

/// Strand indices meeting at one crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingStrands {
    pub over: usize,
    pub incoming: usize,
    pub outgoing: usize,
}

pub fn crossing_strands(code: &GaussCode) -> Vec<CrossingStrands> {
    let strand_of = code.strand_of_positions();
    let n = code.crossing_count();
    code.crossing_positions()
        .iter()
        .map(|c| {
            let outgoing = strand_of[c.under];
            CrossingStrands {
                over: strand_of[c.over],
                incoming: (outgoing + n - 1) % n,
                outgoing,
            }
        })
        .collect()
}

/// Colored strands plus the crossings that could fire next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringState {
    moves: Vec<CrossingStrands>,
    colored: Vec<bool>,
}

impl ColoringState {
    pub fn new(code: &GaussCode, seeds: &[usize]) -> Self {
        let moves = crossing_strands(code);
        let mut colored = vec![false; moves.len()];
        for &s in seeds {
            if s < colored.len() {
                colored[s] = true;
            }
        }
        ColoringState { moves, colored }
    }

    pub fn colored(&self) -> &[bool] {
        &self.colored
    }

    pub fn colored_count(&self) -> usize {
        self.colored.iter().filter(|&&c| c).count()
    }

    pub fn is_full(&self) -> bool {
        self.colored.iter().all(|&c| c)
    }

    /// Labels of crossings whose move would color something new.
    pub fn frontier(&self) -> Vec<u32> {
        (0..self.moves.len())
            .filter(|&i| {
                let m = self.moves[i];
                self.colored[m.over] && self.colored[m.incoming] && !self.colored[m.outgoing]
            })
            .map(|i| i as u32 + 1)
            .collect()
    }

    /// Applies the move at `crossing` if it is eligible.
    pub fn fire(&mut self, crossing: u32) -> bool {
        let Some(m) = (crossing as usize)
            .checked_sub(1)
            .and_then(|i| self.moves.get(i))
        else {
            return false;
        };
        if self.colored[m.over] && self.colored[m.incoming] && !self.colored[m.outgoing] {
            self.colored[m.outgoing] = true;
            true
        } else {
            false
        }
    }

    pub fn saturate(&mut self) {
        Propagator::from_moves(self.moves.clone()).saturate(&mut self.colored, &mut Vec::new());
    }
}

/// Runs coloring moves from `seeds` until none applies.
pub fn propagate(code: &GaussCode, seeds: &[usize]) -> ColoringState {
    let mut state = ColoringState::new(code, seeds);
    state.saturate();
    state
}

/// Reusable worklist propagation for many seed sets on one code.
struct Propagator {
    moves: Vec<CrossingStrands>,
    /// Crossings to re-examine when a strand becomes colored.
    watchers: Vec<Vec<usize>>,
}

impl Propagator {
    fn from_moves(moves: Vec<CrossingStrands>) -> Self {
        let mut watchers = vec![Vec::new(); moves.len()];
        for (i, m) in moves.iter().enumerate() {
            watchers[m.over].push(i);
            if m.incoming != m.over {
                watchers[m.incoming].push(i);
            }
        }
        Propagator { moves, watchers }
    }

    /// Saturates in place and returns the number of colored strands.
    fn saturate(&self, colored: &mut [bool], stack: &mut Vec<usize>) -> usize {
        stack.clear();
        stack.extend((0..colored.len()).filter(|&s| colored[s]));
        let mut count = stack.len();
        while let Some(s) = stack.pop() {
            for &c in &self.watchers[s] {
                let m = self.moves[c];
                if colored[m.over] && colored[m.incoming] && !colored[m.outgoing] {
                    colored[m.outgoing] = true;
                    count += 1;
                    stack.push(m.outgoing);
                }
            }
        }
        count
    }
}

/// Outcome of the seed search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WirtingerNumber {
    Seeds(usize),
    /// The code has no crossings; counted as 1.
    Unknot,
    NotFound,
}

impl WirtingerNumber {
    pub fn value(self) -> Option<usize> {
        match self {
            WirtingerNumber::Seeds(k) => Some(k),
            WirtingerNumber::Unknot => Some(1),
            WirtingerNumber::NotFound => None,
        }
    }
}

/// Advances `idx` to the next k-subset of `0..n` in lexicographic order.
fn next_subset(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Smallest `k` in `k_start..=k_max` for which some `k` seeds color every
/// strand.
///
/// A `k` at or above the strand count always succeeds (every strand is a
/// seed), so codes with fewer strands than `k_start` report `k_start`.
pub fn wirtinger_number(code: &GaussCode, k_start: usize, k_max: usize) -> WirtingerNumber {
    if code.is_empty() {
        return WirtingerNumber::Unknot;
    }
    let n = code.crossing_count();
    let k_start = k_start.max(1);
    let propagator = Propagator::from_moves(crossing_strands(code));
    let mut colored = vec![false; n];
    let mut stack = Vec::with_capacity(n);
    for k in k_start..=k_max {
        if k >= n {
            return WirtingerNumber::Seeds(k);
        }
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            colored.iter_mut().for_each(|c| *c = false);
            for &i in &idx {
                colored[i] = true;
            }
            if propagator.saturate(&mut colored, &mut stack) == n {
                return WirtingerNumber::Seeds(k);
            }
            if !next_subset(&mut idx, n) {
                break;
            }
        }
    }
    WirtingerNumber::NotFound
}

/// Default upper end of the search: every strand for single queries, capped
/// at 6 in batch mode.
pub fn default_k_max(code: &GaussCode, batch: bool) -> usize {
    let n = code.crossing_count().max(1);
    if batch {
        n.min(6)
    } else {
        n
    }
}

/// Combined bounds on a bridge number; `upper` is absent when unknown.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BridgeBounds {
    pub lower: usize,
    pub upper: Option<usize>,
    pub exact: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabelRules {
    /// Floor for the lower bound (the seed count the search started from).
    pub k_start: usize,
    /// The code comes from a classical census, where an upper bound of 2 or 3
    /// is known to be attained.
    pub classical_census: bool,
    /// External certificate that the upper bound is attained.
    pub exact_hint: Option<bool>,
}

impl Default for LabelRules {
    fn default() -> Self {
        LabelRules {
            k_start: 1,
            classical_census: false,
            exact_hint: None,
        }
    }
}

/// Merges an upper bound with coloring lower bounds.
///
/// Fails with `InconsistentBounds` when the computed lower bound exceeds the
/// upper bound, which can only come from a bug upstream.
pub fn bridge_label(
    wirtinger_upper: Option<usize>,
    coloring_lowers: &[usize],
    rules: LabelRules,
) -> Result<BridgeBounds> {
    let mut lower = coloring_lowers
        .iter()
        .copied()
        .fold(rules.k_start.max(1), usize::max);
    if let Some(upper) = wirtinger_upper {
        if lower > upper {
            return Err(Error::InconsistentBounds { lower, upper });
        }
        let census_rule = rules.classical_census && (upper == 2 || upper == 3);
        if census_rule || rules.exact_hint == Some(true) {
            lower = upper;
        }
    }
    Ok(BridgeBounds {
        lower,
        upper: wirtinger_upper,
        exact: wirtinger_upper == Some(lower),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(v: &[i32]) -> GaussCode {
        GaussCode::new(v.to_vec()).unwrap()
    }

    #[test]
    fn trefoil_propagation() {
        let t = code(&[-1, 2, -3, 1, -2, 3]);
        for s in 0..3 {
            assert!(!propagate(&t, &[s]).is_full());
        }
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            assert!(propagate(&t, &[a, b]).is_full());
        }
        assert_eq!(wirtinger_number(&t, 2, 3), WirtingerNumber::Seeds(2));
        assert_eq!(wirtinger_number(&t, 1, 3), WirtingerNumber::Seeds(2));
        assert_eq!(wirtinger_number(&t, 1, 1), WirtingerNumber::NotFound);
    }

    #[test]
    fn one_seed_codes() {
        assert_eq!(
            wirtinger_number(&code(&[-1, 1]), 1, 1),
            WirtingerNumber::Seeds(1)
        );
        assert!(propagate(&code(&[-1, 1]), &[0]).is_full());
        assert_eq!(
            wirtinger_number(&code(&[-1, 2, 1, -2]), 1, 2),
            WirtingerNumber::Seeds(1)
        );
        assert_eq!(
            wirtinger_number(&GaussCode::unknot(), 2, 6),
            WirtingerNumber::Unknot
        );
    }

    #[test]
    fn fire_respects_eligibility() {
        let t = code(&[-1, 2, -3, 1, -2, 3]);
        let mut state = ColoringState::new(&t, &[0, 1]);
        let frontier = state.frontier();
        assert_eq!(frontier.len(), 1);
        assert!(state.fire(frontier[0]));
        assert!(!state.fire(frontier[0]));
        assert!(state.is_full());
    }

    #[test]
    fn labels() {
        let census = LabelRules {
            k_start: 2,
            classical_census: true,
            exact_hint: None,
        };
        let b = bridge_label(Some(3), &[2], census).unwrap();
        assert_eq!(
            b,
            BridgeBounds {
                lower: 3,
                upper: Some(3),
                exact: true
            }
        );
        let plain = LabelRules {
            k_start: 2,
            ..LabelRules::default()
        };
        assert!(bridge_label(Some(4), &[4], plain).unwrap().exact);
        let open = bridge_label(Some(4), &[3], plain).unwrap();
        assert_eq!(
            open,
            BridgeBounds {
                lower: 3,
                upper: Some(4),
                exact: false
            }
        );
        let hinted = LabelRules {
            exact_hint: Some(true),
            ..plain
        };
        assert!(bridge_label(Some(4), &[3], hinted).unwrap().exact);
        assert_eq!(
            bridge_label(Some(2), &[3], plain),
            Err(Error::InconsistentBounds { lower: 3, upper: 2 })
        );
        assert!(!bridge_label(None, &[2], plain).unwrap().exact);
    }
}
