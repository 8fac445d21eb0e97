//! Kauffman bracket and Jones polynomial by state sum.
//!
//! The `2n` arcs of a code (arc `p` runs from position `p` to `p + 1`) are
//! the nodes of a union-find; smoothing a crossing joins its four arc ends in
//! one of two ways and the loops of a state are the resulting components.
//! Nothing here depends on planarity, so virtual codes are handled as is.

use alloc::string::String;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::gauss::{Sign, SignedGaussCode};
use crate::poly::LaurentPolynomial;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Smoothing {
    A,
    B,
}

/// The two joins made by each smoothing of one crossing, as arc indices.
#[derive(Debug, Clone, Copy)]
struct CrossingArcs {
    a: [(usize, usize); 2],
    b: [(usize, usize); 2],
}

fn crossing_arcs(code: &SignedGaussCode) -> Vec<CrossingArcs> {
    let m = code.len();
    code.code()
        .crossing_positions()
        .iter()
        .zip(code.signs())
        .map(|(c, sign)| {
            let over_in = (c.over + m - 1) % m;
            let over_out = c.over;
            let under_in = (c.under + m - 1) % m;
            let under_out = c.under;
            let oriented = [(over_in, under_out), (under_in, over_out)];
            let unoriented = [(over_in, under_in), (over_out, under_out)];
            match sign {
                Sign::Positive => CrossingArcs {
                    a: oriented,
                    b: unoriented,
                },
                Sign::Negative => CrossingArcs {
                    a: unoriented,
                    b: oriented,
                },
            }
        })
        .collect()
}

/// Union-find with union by size and an undo log, so the state tree can be
/// walked depth first without rebuilding.
struct RollbackUnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
    log: Vec<Option<(usize, usize)>>,
}

impl RollbackUnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
            components: n,
            log: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) {
        let (mut rx, mut ry) = (self.find(x), self.find(y));
        if rx == ry {
            self.log.push(None);
            return;
        }
        if self.size[rx] < self.size[ry] {
            core::mem::swap(&mut rx, &mut ry);
        }
        self.parent[ry] = rx;
        self.size[rx] += self.size[ry];
        self.components -= 1;
        self.log.push(Some((rx, ry)));
    }

    fn undo(&mut self) {
        if let Some(Some((rx, ry))) = self.log.pop() {
            self.parent[ry] = ry;
            self.size[rx] -= self.size[ry];
            self.components += 1;
        }
    }
}

/// `table[a][loops]` counts the states with `a` A-smoothings and that many
/// loops.
fn state_table(code: &SignedGaussCode) -> Vec<Vec<u64>> {
    let n = code.crossing_count();
    let m = code.len();
    let arcs = crossing_arcs(code);
    let mut table = vec![vec![0u64; m + 1]; n + 1];
    let mut uf = RollbackUnionFind::new(m);
    fn walk(
        depth: usize,
        a_count: usize,
        arcs: &[CrossingArcs],
        uf: &mut RollbackUnionFind,
        table: &mut [Vec<u64>],
    ) {
        if depth == arcs.len() {
            table[a_count][uf.components] += 1;
            return;
        }
        for (joins, extra) in [(arcs[depth].a, 1), (arcs[depth].b, 0)] {
            uf.union(joins[0].0, joins[0].1);
            uf.union(joins[1].0, joins[1].1);
            walk(depth + 1, a_count + extra, arcs, uf, table);
            uf.undo();
            uf.undo();
        }
    }
    walk(0, 0, &arcs, &mut uf, &mut table);
    table
}

/// Number of loops after smoothing crossing `i + 1` as `choices[i]`.
pub fn loop_count(code: &SignedGaussCode, choices: &[Smoothing]) -> usize {
    if code.is_empty() {
        return 1;
    }
    let mut uf = RollbackUnionFind::new(code.len());
    for (arcs, choice) in crossing_arcs(code).iter().zip(choices) {
        let joins = match choice {
            Smoothing::A => arcs.a,
            Smoothing::B => arcs.b,
        };
        for (x, y) in joins {
            uf.union(x, y);
        }
    }
    uf.components
}

/// `δ = -A^2 - A^-2`.
fn delta() -> LaurentPolynomial {
    LaurentPolynomial::from_terms(&[(-1, 2), (-1, -2)])
}

pub fn kauffman_bracket(code: &SignedGaussCode) -> LaurentPolynomial {
    let n = code.crossing_count();
    if n == 0 {
        return LaurentPolynomial::one();
    }
    let table = state_table(code);
    let d = delta();
    let mut powers = vec![LaurentPolynomial::one()];
    for i in 1..table[0].len() {
        let next = &powers[i - 1] * &d;
        powers.push(next);
    }
    let mut total = LaurentPolynomial::zero();
    for (a, row) in table.iter().enumerate() {
        for (loops, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            let exp = 2 * a as i32 - n as i32;
            total = &total + &powers[loops - 1].scale(count as i64, exp);
        }
    }
    total
}

pub fn writhe(code: &SignedGaussCode) -> i32 {
    code.writhe()
}

/// `(-A^3)^(-writhe) * <K>`.
pub fn jones(code: &SignedGaussCode) -> LaurentPolynomial {
    &LaurentPolynomial::neg_a_cubed_pow(-writhe(code)) * &kauffman_bracket(code)
}

pub fn jones_fingerprint(code: &SignedGaussCode) -> String {
    jones(code).to_string()
}

/// Both sides of the switch/virtualize identity at crossing `k`, for
/// exponent sign `s`: `(A^3 + A^-3) V(K_v)` and `A^{3s} V(K) + A^{-3s} V(K')`.
fn virtualization_sides(
    code: &SignedGaussCode,
    k: u32,
    s: i32,
) -> Result<(LaurentPolynomial, LaurentPolynomial)> {
    let switched = code.crossing_switch(k)?;
    let removed = code.virtualize_remove(k)?;
    let lhs = &LaurentPolynomial::from_terms(&[(1, 3), (1, -3)]) * &jones(&removed);
    let rhs = &jones(code).scale(1, 3 * s) + &jones(&switched).scale(1, -3 * s);
    Ok((lhs, rhs))
}

/// Checks the identity relating `K`, `K` with crossing `k` switched, and `K`
/// with crossing `k` made virtual, using the sign of `k` in `K` for the
/// exponents.
///
/// Holds for every crossing of a classical diagram. Virtual codes can
/// violate it, typically at crossings whose chord has odd parity.
pub fn verify_virtualization(code: &SignedGaussCode, k: u32) -> Result<bool> {
    let s = code.sign(k)?.value();
    let (lhs, rhs) = virtualization_sides(code, k, s)?;
    Ok(lhs == rhs)
}

/// Which exponent branches of the identity hold: `(s = +1, s = -1)`.
pub fn virtualization_branches(code: &SignedGaussCode, k: u32) -> Result<(bool, bool)> {
    let (l1, r1) = virtualization_sides(code, k, 1)?;
    let (l2, r2) = virtualization_sides(code, k, -1)?;
    Ok((l1 == r1, l2 == r2))
}
