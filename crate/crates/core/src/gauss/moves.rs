//! Diagram moves expressed directly on the sequence.
//!
//! Move 1 adds or removes a kink `a, -a` (or `-a, a`). Move 2 adds or removes
//! an over-pair `a, b` together with an under-pair `-a, -b` or `-b, -a`
//! elsewhere; on signed codes the two crossings must have opposite signs.
//! Move 3 swaps the entries inside three pairs `(a, b)`, `(-a, c)`, `(-b, -c)`
//! (or back); on signed codes the three signs must agree.
//!
//! Positions refer to the first entry of a pair and wrap around. Gaps for
//! insertion are `0..=len`, meaning "before entry `gap`".

use alloc::vec::Vec;

use super::{remove_labels, GaussCode, Sign, SignedGaussCode};
use crate::{Error, Result};

/// Which pass of an inserted kink comes first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kink {
    OverFirst,
    UnderFirst,
}

fn pair_at(entries: &[i32], p: usize) -> (i32, i32) {
    let m = entries.len();
    (entries[p % m], entries[(p + 1) % m])
}

fn check_position(entries: &[i32], p: usize) -> Result<()> {
    if p >= entries.len() {
        return Err(Error::PositionOutOfRange {
            position: p,
            len: entries.len(),
        });
    }
    Ok(())
}

fn check_gap(entries: &[i32], gap: usize) -> Result<()> {
    if gap > entries.len() {
        return Err(Error::PositionOutOfRange {
            position: gap,
            len: entries.len(),
        });
    }
    Ok(())
}

fn under_position(entries: &[i32], label: i32) -> usize {
    entries.iter().position(|&e| e == -label).unwrap_or(0)
}

fn is_kink(entries: &[i32], p: usize) -> bool {
    let (x, y) = pair_at(entries, p);
    x == -y
}

fn kink_sites(entries: &[i32]) -> Vec<usize> {
    if entries.is_empty() {
        return Vec::new();
    }
    (0..entries.len())
        .filter(|&p| is_kink(entries, p))
        .collect()
}

/// Under-pair start matching the over-pair at `i`, if the entries form a
/// move-2 pattern (ignoring signs).
fn bigon_partner(entries: &[i32], i: usize) -> Option<usize> {
    let m = entries.len();
    if m < 4 {
        return None;
    }
    let (a, b) = pair_at(entries, i);
    if a <= 0 || b <= 0 {
        return None;
    }
    let ua = under_position(entries, a);
    let ub = under_position(entries, b);
    if ub == (ua + 1) % m {
        Some(ua)
    } else if ua == (ub + 1) % m {
        Some(ub)
    } else {
        None
    }
}

fn sign_of(signs: &[Sign], label: i32) -> Sign {
    signs[label.unsigned_abs() as usize - 1]
}

fn bigon_sites(entries: &[i32], signs: Option<&[Sign]>) -> Vec<(usize, usize)> {
    (0..entries.len())
        .filter_map(|i| {
            let j = bigon_partner(entries, i)?;
            if let Some(s) = signs {
                let (a, b) = pair_at(entries, i);
                if sign_of(s, a) == sign_of(s, b) {
                    return None;
                }
            }
            Some((i, j))
        })
        .collect()
}

/// Checks for `(a, b), (-a, c), (-b, -c)` at `p`, in either swapped state.
fn triangle_at(entries: &[i32], signs: Option<&[Sign]>, p: [usize; 3]) -> bool {
    let [p1, p2, p3] = p.map(|q| pair_at(entries, q));
    let forward = {
        let (a, b) = p1;
        let c = p2.1;
        a > 0 && b > 0 && c > 0 && p2.0 == -a && p3 == (-b, -c)
    };
    let backward = {
        let (b, a) = p1;
        let c = p2.0;
        a > 0 && b > 0 && c > 0 && p2.1 == -a && p3 == (-c, -b)
    };
    if !(forward || backward) {
        return false;
    }
    match signs {
        None => true,
        Some(s) => {
            let (x, y) = p1;
            let z = if forward { p2.1 } else { p2.0 };
            sign_of(s, x) == sign_of(s, y) && sign_of(s, y) == sign_of(s, z)
        }
    }
}

fn triangle_sites(entries: &[i32], signs: Option<&[Sign]>) -> Vec<[usize; 3]> {
    let m = entries.len();
    if m < 6 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for i in 0..m {
        let (x, y) = pair_at(entries, i);
        if x <= 0 || y <= 0 {
            continue;
        }
        // forward reading: a = x, b = y
        let ua = under_position(entries, x);
        let ub = under_position(entries, y);
        let candidate = [i, ua, ub];
        if triangle_at(entries, signs, candidate) {
            out.push(candidate);
        }
        // backward reading: b = x, a = y; (c, -a) ends at -a, (-c, -b) starts at -c
        let p2 = (ub + m - 1) % m;
        let c = entries[p2];
        if c > 0 {
            let candidate = [i, p2, under_position(entries, c)];
            if triangle_at(entries, signs, candidate) {
                out.push(candidate);
            }
        }
    }
    out
}

fn drop_signs(signs: &[Sign], labels: &[u32]) -> Vec<Sign> {
    signs
        .iter()
        .enumerate()
        .filter(|(i, _)| !labels.contains(&(*i as u32 + 1)))
        .map(|(_, &s)| s)
        .collect()
}

fn insert_at_gaps(entries: &[i32], inserts: &[(usize, [i32; 2])]) -> Vec<i32> {
    let mut out = Vec::with_capacity(entries.len() + 2 * inserts.len());
    for gap in 0..=entries.len() {
        for (g, pair) in inserts {
            if *g == gap {
                out.extend_from_slice(pair);
            }
        }
        if gap < entries.len() {
            out.push(entries[gap]);
        }
    }
    out
}

fn kink_pair(label: i32, kink: Kink) -> [i32; 2] {
    match kink {
        Kink::OverFirst => [label, -label],
        Kink::UnderFirst => [-label, label],
    }
}

fn bigon_insert(
    entries: &[i32],
    over_gap: usize,
    under_gap: usize,
    reversed: bool,
) -> Result<Vec<i32>> {
    check_gap(entries, over_gap)?;
    check_gap(entries, under_gap)?;
    let a = (entries.len() / 2) as i32 + 1;
    let b = a + 1;
    let under = if reversed { [-b, -a] } else { [-a, -b] };
    Ok(insert_at_gaps(
        entries,
        &[(over_gap, [a, b]), (under_gap, under)],
    ))
}

impl GaussCode {
    /// Starts of every `a, -a` / `-a, a` pair.
    pub fn move1_sites(&self) -> Vec<usize> {
        kink_sites(&self.entries)
    }

    /// `(over, under)` starts of every move-2 pattern.
    pub fn move2_sites(&self) -> Vec<(usize, usize)> {
        bigon_sites(&self.entries, None)
    }

    pub fn move3_sites(&self) -> Vec<[usize; 3]> {
        triangle_sites(&self.entries, None)
    }

    /// Inserts a kink with the fresh label `n + 1` before entry `gap`.
    pub fn move1_insert(&self, gap: usize, kink: Kink) -> Result<GaussCode> {
        check_gap(&self.entries, gap)?;
        let label = self.crossing_count() as i32 + 1;
        Ok(GaussCode::from_valid(insert_at_gaps(
            &self.entries,
            &[(gap, kink_pair(label, kink))],
        )))
    }

    pub fn move1_delete(&self, position: usize) -> Result<GaussCode> {
        check_position(&self.entries, position)?;
        if !is_kink(&self.entries, position) {
            return Err(Error::PatternNotPresent);
        }
        let label = self.entries[position].unsigned_abs();
        Ok(GaussCode::from_valid(remove_labels(
            &self.entries,
            &[label],
        )))
    }

    /// Inserts `n+1, n+2` before entry `over_gap` and the matching under-pair
    /// before entry `under_gap` (`-(n+2), -(n+1)` when `reversed`). When the
    /// gaps coincide the over-pair comes first.
    pub fn move2_insert(
        &self,
        over_gap: usize,
        under_gap: usize,
        reversed: bool,
    ) -> Result<GaussCode> {
        Ok(GaussCode::from_valid(bigon_insert(
            &self.entries,
            over_gap,
            under_gap,
            reversed,
        )?))
    }

    /// Removes the move-2 pattern with over-pair at `over` and under-pair at
    /// `under`. No sign condition is available on unsigned codes, so the
    /// caller is responsible for the pattern being a genuine bigon.
    pub fn move2_delete(&self, over: usize, under: usize) -> Result<GaussCode> {
        check_position(&self.entries, over)?;
        check_position(&self.entries, under)?;
        if bigon_partner(&self.entries, over) != Some(under) {
            return Err(Error::PatternNotPresent);
        }
        let (a, b) = pair_at(&self.entries, over);
        Ok(GaussCode::from_valid(remove_labels(
            &self.entries,
            &[a as u32, b as u32],
        )))
    }

    /// Swaps the three pairs of a move-3 pattern starting at `sites`.
    pub fn move3(&self, sites: [usize; 3]) -> Result<GaussCode> {
        Ok(GaussCode::from_valid(swap_triangle(
            &self.entries,
            None,
            sites,
        )?))
    }

    /// Removes kinks until none remain.
    ///
    /// Move-2 deletions need crossing signs to be safe, so they are only
    /// applied by [`SignedGaussCode::simplify`].
    pub fn simplify(&self) -> GaussCode {
        let mut entries = self.entries.clone();
        while let Some(&p) = kink_sites(&entries).first() {
            let label = entries[p].unsigned_abs();
            entries = remove_labels(&entries, &[label]);
        }
        GaussCode::from_valid(entries)
    }
}

fn swap_triangle(entries: &[i32], signs: Option<&[Sign]>, sites: [usize; 3]) -> Result<Vec<i32>> {
    for &p in &sites {
        check_position(entries, p)?;
    }
    if !triangle_at(entries, signs, sites) {
        return Err(Error::PatternNotPresent);
    }
    let m = entries.len();
    let mut out = entries.to_vec();
    for p in sites {
        out.swap(p, (p + 1) % m);
    }
    Ok(out)
}

impl SignedGaussCode {
    pub fn move1_sites(&self) -> Vec<usize> {
        kink_sites(self.entries())
    }

    /// Move-2 patterns whose two crossings have opposite signs.
    pub fn move2_sites(&self) -> Vec<(usize, usize)> {
        bigon_sites(self.entries(), Some(&self.signs))
    }

    /// Move-3 patterns whose three crossings share a sign.
    pub fn move3_sites(&self) -> Vec<[usize; 3]> {
        triangle_sites(self.entries(), Some(&self.signs))
    }

    pub fn move1_insert(&self, gap: usize, kink: Kink, sign: Sign) -> Result<SignedGaussCode> {
        let code = self.code.move1_insert(gap, kink)?;
        let mut signs = self.signs.clone();
        signs.push(sign);
        Ok(SignedGaussCode { code, signs })
    }

    pub fn move1_delete(&self, position: usize) -> Result<SignedGaussCode> {
        let code = self.code.move1_delete(position)?;
        let label = self.entries()[position].unsigned_abs();
        Ok(SignedGaussCode {
            code,
            signs: drop_signs(&self.signs, &[label]),
        })
    }

    /// As [`GaussCode::move2_insert`]; crossing `n+1` gets `sign` and
    /// crossing `n+2` the opposite.
    pub fn move2_insert(
        &self,
        over_gap: usize,
        under_gap: usize,
        reversed: bool,
        sign: Sign,
    ) -> Result<SignedGaussCode> {
        let code = self.code.move2_insert(over_gap, under_gap, reversed)?;
        let mut signs = self.signs.clone();
        signs.push(sign);
        signs.push(sign.flipped());
        Ok(SignedGaussCode { code, signs })
    }

    pub fn move2_delete(&self, over: usize, under: usize) -> Result<SignedGaussCode> {
        let code = self.code.move2_delete(over, under)?;
        let (a, b) = pair_at(self.entries(), over);
        if self.signs[a as usize - 1] == self.signs[b as usize - 1] {
            return Err(Error::PatternNotPresent);
        }
        Ok(SignedGaussCode {
            code,
            signs: drop_signs(&self.signs, &[a as u32, b as u32]),
        })
    }

    pub fn move3(&self, sites: [usize; 3]) -> Result<SignedGaussCode> {
        let entries = swap_triangle(self.entries(), Some(&self.signs), sites)?;
        Ok(SignedGaussCode {
            code: GaussCode::from_valid(entries),
            signs: self.signs.clone(),
        })
    }

    /// Greedily removes kinks and opposite-sign bigons until none remain.
    pub fn simplify(&self) -> SignedGaussCode {
        let mut current = self.clone();
        loop {
            if let Some(&p) = current.move1_sites().first() {
                current = current.move1_delete(p).expect("site was just found");
            } else if let Some(&(i, j)) = current.move2_sites().first() {
                current = current.move2_delete(i, j).expect("site was just found");
            } else {
                return current;
            }
        }
    }
}
