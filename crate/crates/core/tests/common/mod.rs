//! Independent reference implementations and random generators shared by the
//! integration tests. The oracles favour obviousness over speed: brute force
//! over every labeling, every state, every seed set.

#![allow(dead_code)]

use std::collections::BTreeMap;

use bridgekit_core::gauss::Kink;
use bridgekit_core::{GaussCode, LaurentPolynomial, Sign, SignedGaussCode};
use rand::seq::SliceRandom;
use rand::Rng;

/// `(over position, under position)` per label, found by scanning.
fn passes(entries: &[i32]) -> Vec<(usize, usize)> {
    let n = entries.len() / 2;
    (1..=n as i32)
        .map(|l| {
            let o = entries.iter().position(|&e| e == l).unwrap();
            let u = entries.iter().position(|&e| e == -l).unwrap();
            (o, u)
        })
        .collect()
}

/// Every labeling of the `2n` short arcs by `1..=order` checked against the
/// crossing relations. Tables are 1-based, `table[x-1][y-1]`.
pub fn oracle_colorings(
    code: &SignedGaussCode,
    over: &[Vec<usize>],
    under: &[Vec<usize>],
) -> Vec<Vec<usize>> {
    let order = over.len();
    let entries = code.entries();
    let m = entries.len();
    if m == 0 {
        return (1..=order).map(|x| vec![x]).collect();
    }
    let o = |x: usize, y: usize| over[x - 1][y - 1];
    let u = |x: usize, y: usize| under[x - 1][y - 1];
    let crossings = passes(entries);
    let mut found = Vec::new();
    let mut label = vec![1usize; m];
    loop {
        let ok = crossings.iter().enumerate().all(|(i, &(op, up))| {
            let ui = label[(up + m - 1) % m];
            let uo = label[up];
            let oi = label[(op + m - 1) % m];
            let oo = label[op];
            match code.signs()[i] {
                Sign::Negative => uo == u(ui, oi) && oo == o(oi, ui),
                Sign::Positive => ui == u(uo, oo) && oi == o(oo, uo),
            }
        });
        if ok {
            found.push(label.clone());
        }
        // odometer increment, last arc fastest so output is lexicographic
        let mut i = m;
        loop {
            if i == 0 {
                return found;
            }
            i -= 1;
            if label[i] < order {
                label[i] += 1;
                break;
            }
            label[i] = 1;
        }
    }
}

/// Bracket by walking loops explicitly for each of the `2^n` states.
///
/// Arc ends are numbered `2p` (tail, leaving position `p`) and `2p + 1`
/// (head, arriving at position `p + 1`). A state pairs ends at each crossing;
/// loops alternate between arcs and those pairings.
pub fn oracle_bracket(code: &SignedGaussCode) -> LaurentPolynomial {
    let entries = code.entries();
    let m = entries.len();
    let n = m / 2;
    if n == 0 {
        return LaurentPolynomial::one();
    }
    let crossings = passes(entries);
    let head = |arc: usize| 2 * arc + 1;
    let tail = |arc: usize| 2 * arc;
    let mut terms: BTreeMap<i32, i64> = BTreeMap::new();
    for state in 0u32..(1 << n) {
        let mut partner = vec![usize::MAX; 2 * m];
        let mut a_count = 0i32;
        for (i, &(op, up)) in crossings.iter().enumerate() {
            let over_in = head((op + m - 1) % m);
            let over_out = tail(op);
            let under_in = head((up + m - 1) % m);
            let under_out = tail(up);
            let choose_a = state >> i & 1 == 1;
            if choose_a {
                a_count += 1;
            }
            let positive = code.signs()[i] == Sign::Positive;
            // A-smoothing follows the orientation at positive crossings
            let oriented = choose_a == positive;
            let joins = if oriented {
                [(over_in, under_out), (under_in, over_out)]
            } else {
                [(over_in, under_in), (over_out, under_out)]
            };
            for (x, y) in joins {
                partner[x] = y;
                partner[y] = x;
            }
        }
        let mut seen = vec![false; 2 * m];
        let mut loops = 0;
        for start in 0..2 * m {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut end = start;
            loop {
                seen[end] = true;
                let other = end ^ 1; // the other end of the same arc
                seen[other] = true;
                end = partner[other];
                if seen[end] {
                    break;
                }
            }
        }
        // A^(a-b) * (-A^2 - A^-2)^(loops-1), expanded binomially
        let shift = 2 * a_count - n as i32;
        let k = loops - 1;
        let mut binom = 1i64;
        for j in 0..=k {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let exp = shift + 2 * (k - j) - 2 * j;
            *terms.entry(exp).or_default() += sign * binom;
            binom = binom * (k as i64 - j as i64) / (j as i64 + 1);
        }
    }
    let list: Vec<(i64, i32)> = terms.into_iter().map(|(e, c)| (c, e)).collect();
    LaurentPolynomial::from_terms(&list)
}

pub fn oracle_jones(code: &SignedGaussCode) -> LaurentPolynomial {
    let w: i32 = code.signs().iter().map(|s| s.value()).sum();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    oracle_bracket(code).scale(sign, -3 * w)
}

/// Minimum seed-set size, over all subsets of strands with at least
/// `k_start` members, whose closure under coloring moves is everything.
pub fn oracle_wirtinger(code: &GaussCode, k_start: usize) -> Option<usize> {
    let entries = code.entries();
    let m = entries.len();
    let negs: Vec<usize> = (0..m).filter(|&p| entries[p] < 0).collect();
    let n = negs.len();
    // strand index of each position: the last under-pass at or before it
    let strand_at = |p: usize| (0..n).rev().find(|&i| negs[i] <= p).unwrap_or(n - 1);
    let mut rules = Vec::new();
    for l in 1..=n as i32 {
        let op = entries.iter().position(|&e| e == l).unwrap();
        let up = entries.iter().position(|&e| e == -l).unwrap();
        let out = strand_at(up);
        let inc = (out + n - 1) % n;
        rules.push((strand_at(op), inc, out));
    }
    let mut best = None;
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < k_start || best.is_some_and(|b| size >= b) {
            continue;
        }
        let mut colored = mask;
        loop {
            let before = colored;
            for &(o, i, out) in &rules {
                if colored >> o & 1 == 1 && colored >> i & 1 == 1 {
                    colored |= 1 << out;
                }
            }
            if colored == before {
                break;
            }
        }
        if colored == (1 << n) - 1 {
            best = Some(size);
        }
    }
    best
}

/// Uniform random double-occurrence word with random over/under choices.
pub fn random_code<R: Rng>(rng: &mut R, n: usize) -> GaussCode {
    let mut labels: Vec<i32> = (1..=n as i32).flat_map(|l| [l, l]).collect();
    labels.shuffle(rng);
    let over_first: Vec<bool> = (0..=n).map(|_| rng.gen()).collect();
    let mut seen = vec![false; n + 1];
    let entries = labels
        .into_iter()
        .map(|l| {
            let first = !seen[l as usize];
            seen[l as usize] = true;
            if first == over_first[l as usize] {
                l
            } else {
                -l
            }
        })
        .collect();
    GaussCode::new(entries).unwrap()
}

pub fn random_sign<R: Rng>(rng: &mut R) -> Sign {
    if rng.gen() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

pub fn random_signed<R: Rng>(rng: &mut R, n: usize) -> SignedGaussCode {
    let signs = (0..n).map(|_| random_sign(rng)).collect();
    random_code(rng, n).with_signs(signs).unwrap()
}

/// Closure of a random braid word; classical by construction.
pub fn random_classical<R: Rng>(
    rng: &mut R,
    min_crossings: usize,
    max_crossings: usize,
) -> SignedGaussCode {
    loop {
        let strands = rng.gen_range(2..=4usize);
        let len = rng.gen_range(min_crossings..=max_crossings);
        let word: Vec<i32> = (0..len)
            .map(|_| {
                let g = rng.gen_range(1..strands) as i32;
                if rng.gen() {
                    g
                } else {
                    -g
                }
            })
            .collect();
        if let Ok(code) = SignedGaussCode::from_braid(strands, &word) {
            if code.crossing_count() >= min_crossings {
                return code;
            }
        }
    }
}

/// Inserts `a, b`, `-a, c`, `-b, -c` with a shared sign at random gaps, so
/// the result always has a move-3 site.
pub fn with_triangle<R: Rng>(rng: &mut R, code: &SignedGaussCode) -> SignedGaussCode {
    let n = code.crossing_count() as i32;
    let (a, b, c) = (n + 1, n + 2, n + 3);
    let mut pairs = [[a, b], [-a, c], [-b, -c]];
    if rng.gen() {
        // start from the other side of the move
        pairs = [[b, a], [c, -a], [-c, -b]];
    }
    let m = code.len();
    let mut gaps: Vec<usize> = (0..3).map(|_| rng.gen_range(0..=m)).collect();
    gaps.sort_unstable();
    let mut order = [0usize, 1, 2];
    order.shuffle(rng);
    let mut entries = Vec::new();
    let old = code.entries();
    let mut next = 0;
    for gap in 0..=m {
        while next < 3 && gaps[next] == gap {
            entries.extend_from_slice(&pairs[order[next]]);
            next += 1;
        }
        if gap < m {
            entries.push(old[gap]);
        }
    }
    let sign = random_sign(rng);
    let mut signs = code.signs().to_vec();
    signs.extend([sign; 3]);
    GaussCode::new(entries).unwrap().with_signs(signs).unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveKind {
    InsertKink(Sign),
    DeleteKink(Sign),
    InsertBigon,
    DeleteBigon,
    Triangle,
}

/// Applies one random move that is available on `code`.
pub fn random_move<R: Rng>(rng: &mut R, code: &SignedGaussCode) -> (SignedGaussCode, MoveKind) {
    loop {
        match rng.gen_range(0..5) {
            0 => {
                let gap = rng.gen_range(0..=code.len());
                let kink = if rng.gen() {
                    Kink::OverFirst
                } else {
                    Kink::UnderFirst
                };
                let sign = random_sign(rng);
                return (
                    code.move1_insert(gap, kink, sign).unwrap(),
                    MoveKind::InsertKink(sign),
                );
            }
            1 => {
                if let Some(&p) = code.move1_sites().choose(rng) {
                    let label = code.entries()[p].unsigned_abs();
                    let sign = code.sign(label).unwrap();
                    return (code.move1_delete(p).unwrap(), MoveKind::DeleteKink(sign));
                }
            }
            2 => {
                let i = rng.gen_range(0..=code.len());
                let j = rng.gen_range(0..=code.len());
                let out = code
                    .move2_insert(i, j, rng.gen(), random_sign(rng))
                    .unwrap();
                return (out, MoveKind::InsertBigon);
            }
            3 => {
                if let Some(&(i, j)) = code.move2_sites().choose(rng) {
                    return (code.move2_delete(i, j).unwrap(), MoveKind::DeleteBigon);
                }
            }
            _ => {
                if let Some(&s) = code.move3_sites().choose(rng) {
                    return (code.move3(s).unwrap(), MoveKind::Triangle);
                }
            }
        }
    }
}
