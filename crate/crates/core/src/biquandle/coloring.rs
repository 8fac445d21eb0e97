//! Counting colorings by depth-first search with propagation.
//!
//! Each crossing constrains four short arcs `(under_in, under_out, over_in,
//! over_out)`. In a biquandle any of the pairs `(under_in, over_in)`,
//! `(under_out, over_out)` determines the other two, and often other pairs do
//! as well; the search assigns one arc at a time and completes every crossing
//! as soon as some known pair pins it down.

use alloc::vec;
use alloc::vec::Vec;

use super::Biquandle;
use crate::gauss::{Sign, SignedGaussCode};

const UNSET: u16 = u16::MAX;

/// Slot pairs of a relation that can be looked up.
const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

#[derive(Debug, Clone, Copy)]
enum Completion {
    None,
    Unique([u16; 4]),
    Many,
}

/// Allowed `(under_in, under_out, over_in, over_out)` tuples for one sign,
/// indexed by each slot pair.
struct SignTables {
    by_pair: [Vec<Completion>; 6],
}

impl SignTables {
    fn new(b: &Biquandle, sign: Sign) -> Self {
        let n = b.order();
        let mut by_pair: [Vec<Completion>; 6] =
            core::array::from_fn(|_| vec![Completion::None; n * n]);
        for p in 0..n {
            for q in 0..n {
                let t = match sign {
                    // p = under_in, q = over_in
                    Sign::Negative => [p, b.u(p, q), q, b.o(q, p)],
                    // p = under_out, q = over_out
                    Sign::Positive => [b.u(p, q), p, b.o(q, p), q],
                };
                let t = t.map(|v| v as u16);
                for (k, &(i, j)) in PAIRS.iter().enumerate() {
                    let slot = &mut by_pair[k][t[i] as usize * n + t[j] as usize];
                    *slot = match *slot {
                        Completion::None => Completion::Unique(t),
                        Completion::Unique(old) if old == t => Completion::Unique(t),
                        _ => Completion::Many,
                    };
                }
            }
        }
        SignTables { by_pair }
    }
}

struct Relation {
    arcs: [usize; 4],
    sign: Sign,
}

struct Search<'a> {
    order: usize,
    relations: Vec<Relation>,
    touching: Vec<Vec<usize>>,
    tables: [&'a SignTables; 2],
    color: Vec<u16>,
    trail: Vec<usize>,
    queue: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(code: &SignedGaussCode, order: usize, tables: [&'a SignTables; 2]) -> Self {
        let m = code.len();
        let relations: Vec<Relation> = code
            .code()
            .crossing_positions()
            .iter()
            .zip(code.signs())
            .map(|(c, &sign)| Relation {
                arcs: [(c.under + m - 1) % m, c.under, (c.over + m - 1) % m, c.over],
                sign,
            })
            .collect();
        let mut touching = vec![Vec::new(); m];
        for (r, rel) in relations.iter().enumerate() {
            for &a in &rel.arcs {
                if !touching[a].contains(&r) {
                    touching[a].push(r);
                }
            }
        }
        Search {
            order,
            relations,
            touching,
            tables,
            color: vec![UNSET; m],
            trail: Vec::new(),
            queue: Vec::new(),
        }
    }

    fn set(&mut self, arc: usize, v: u16) {
        self.color[arc] = v;
        self.trail.push(arc);
        self.queue.extend_from_slice(&self.touching[arc]);
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let a = self.trail.pop().unwrap_or_default();
            self.color[a] = UNSET;
        }
    }

    /// Colors `arc` and propagates; `false` on contradiction.
    fn assign(&mut self, arc: usize, v: u16) -> bool {
        self.queue.clear();
        self.set(arc, v);
        while let Some(r) = self.queue.pop() {
            if !self.settle(r) {
                return false;
            }
        }
        true
    }

    /// Completes relation `r` if a known pair determines it.
    fn settle(&mut self, r: usize) -> bool {
        let rel = &self.relations[r];
        let arcs = rel.arcs;
        let table = self.tables[match rel.sign {
            Sign::Negative => 0,
            Sign::Positive => 1,
        }];
        let vals = arcs.map(|a| self.color[a]);
        let mut forced = None;
        for (k, &(i, j)) in PAIRS.iter().enumerate() {
            if vals[i] == UNSET || vals[j] == UNSET {
                continue;
            }
            match table.by_pair[k][vals[i] as usize * self.order + vals[j] as usize] {
                Completion::None => return false,
                Completion::Unique(t) => {
                    forced = Some(t);
                    break;
                }
                Completion::Many => {}
            }
        }
        let Some(t) = forced else {
            return true;
        };
        for s in 0..4 {
            let current = self.color[arcs[s]];
            if current == UNSET {
                self.set(arcs[s], t[s]);
            } else if current != t[s] {
                return false;
            }
        }
        true
    }

    fn run(&mut self, visit: &mut dyn FnMut(&[u16])) {
        let Some(arc) = self.color.iter().position(|&c| c == UNSET) else {
            visit(&self.color);
            return;
        };
        for v in 0..self.order as u16 {
            let mark = self.trail.len();
            if self.assign(arc, v) {
                self.run(visit);
            }
            self.undo_to(mark);
        }
    }
}

fn search(code: &SignedGaussCode, b: &Biquandle, visit: &mut dyn FnMut(&[u16])) {
    let neg = SignTables::new(b, Sign::Negative);
    let pos = SignTables::new(b, Sign::Positive);
    Search::new(code, b.order(), [&neg, &pos]).run(visit);
}

/// Number of colorings of the short arcs of `code` by `b`. The crossingless
/// code has one arc and `order` colorings.
pub fn count_colorings(code: &SignedGaussCode, b: &Biquandle) -> u64 {
    if code.is_empty() {
        return b.order() as u64;
    }
    let mut count = 0u64;
    search(code, b, &mut |_| count += 1);
    count
}

/// All colorings as 1-based labels, arc `i` spanning positions `i, i + 1`,
/// in lexicographic order.
pub fn enumerate_colorings(code: &SignedGaussCode, b: &Biquandle) -> Vec<Vec<usize>> {
    if code.is_empty() {
        return (1..=b.order()).map(|x| vec![x]).collect();
    }
    let mut out = Vec::new();
    search(code, b, &mut |c| {
        out.push(c.iter().map(|&v| v as usize + 1).collect())
    });
    out
}
