//! Finite biquandles given by operation tables, and the colorings they define.
//!
//! Tables are 1-based: `over[x-1][y-1]` is `x ⊳̄ y` and `under[x-1][y-1]` is
//! `x ⊳̲ y`. At a negative crossing with incoming under-arc `x` and incoming
//! over-arc `y` the outgoing arcs are `x ⊳̲ y` (under) and `y ⊳̄ x` (over); a
//! positive crossing satisfies the same relation read from the outgoing
//! side.

mod coloring;
mod family;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

pub use coloring::{count_colorings, enumerate_colorings};
pub use family::{kish, kishino_family, trefoil};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Biquandle {
    order: usize,
    /// Row-major, 0-based entries.
    over: Vec<u16>,
    under: Vec<u16>,
}

/// What a coloring count bounds from below.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColoringKind {
    /// Trivial over-operation: the count bounds the first bridge number.
    Quandle,
    /// The count bounds the second bridge number.
    Biquandle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table {
    Over,
    Under,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomViolation {
    /// A column of a table is not a permutation.
    ColumnNotPermutation { table: Table, column: usize },
    /// `(x, y) ↦ (y ⊳̄ x, x ⊳̲ y)` is not a bijection.
    SwitchNotBijective,
    /// The set-theoretic Yang–Baxter equation fails at `(x, y, z)` in the
    /// given output component (1..=3).
    Exchange {
        law: u8,
        x: usize,
        y: usize,
        z: usize,
    },
    /// A one-crossing kink of the given type (1..=4) does not have exactly
    /// one coloring extending incoming color `x` with outgoing color `x`.
    Kink { condition: u8, x: usize },
}

/// Every violated axiom instance; empty means the tables form a biquandle.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return f.write_str("valid");
        }
        write!(f, "{} violations", self.violations.len())?;
        for v in self.violations.iter().take(5) {
            write!(f, "; {v:?}")?;
        }
        Ok(())
    }
}

fn flatten(table: &[Vec<usize>], order: usize) -> Result<Vec<u16>> {
    if table.len() != order || table.iter().any(|row| row.len() != order) {
        return Err(Error::ShapeMismatch);
    }
    table
        .iter()
        .flatten()
        .map(|&v| {
            if v == 0 || v > order {
                Err(Error::OutOfRangeEntry { value: v, order })
            } else {
                Ok((v - 1) as u16)
            }
        })
        .collect()
}

/// Checks the biquandle laws on 1-based tables.
pub fn verify_axioms(over: &[Vec<usize>], under: &[Vec<usize>]) -> Result<AxiomReport> {
    let order = over.len();
    if order == 0 || order > u16::MAX as usize {
        return Err(Error::ShapeMismatch);
    }
    let b = Biquandle {
        order,
        over: flatten(over, order)?,
        under: flatten(under, order)?,
    };
    Ok(b.axiom_report())
}

impl Biquandle {
    /// Builds from 1-based tables, rejecting anything that fails
    /// [`verify_axioms`].
    pub fn from_tables(over: Vec<Vec<usize>>, under: Vec<Vec<usize>>) -> Result<Self> {
        let report = verify_axioms(&over, &under)?;
        if !report.is_valid() {
            return Err(Error::InvalidBiquandle {
                violations: report.violations.len(),
            });
        }
        let order = over.len();
        Ok(Biquandle {
            order,
            over: flatten(&over, order)?,
            under: flatten(&under, order)?,
        })
    }

    /// A quandle: `under` is the quandle operation and `x ⊳̄ y = x`.
    pub fn quandle(under: Vec<Vec<usize>>) -> Result<Self> {
        let n = under.len();
        let over = (1..=n).map(|x| vec![x; n]).collect();
        Self::from_tables(over, under)
    }

    /// Both operations trivial.
    pub fn trivial(order: usize) -> Self {
        let over: Vec<u16> = (0..order)
            .flat_map(|x| core::iter::repeat(x as u16).take(order))
            .collect();
        Biquandle {
            order,
            under: over.clone(),
            over,
        }
    }

    /// The dihedral quandle of order 3.
    pub fn r3() -> Self {
        Self::quandle(vec![vec![1, 3, 2], vec![3, 2, 1], vec![2, 1, 3]]).expect("valid quandle")
    }

    /// An order-4 biquandle separating the Kishino family.
    pub fn y4() -> Self {
        Self::from_tables(
            vec![
                vec![1, 3, 4, 2],
                vec![3, 1, 2, 4],
                vec![2, 4, 3, 1],
                vec![4, 2, 1, 3],
            ],
            vec![
                vec![1, 4, 2, 3],
                vec![2, 3, 1, 4],
                vec![4, 1, 3, 2],
                vec![3, 2, 4, 1],
            ],
        )
        .expect("valid biquandle")
    }

    /// Order-3 example with equal over and under tables.
    pub fn example3() -> Self {
        let t = vec![vec![1, 1, 1], vec![3, 2, 2], vec![2, 3, 3]];
        Self::from_tables(t.clone(), t).expect("valid biquandle")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Over-operation is trivial, so colorings bound the first bridge number.
    pub fn is_quandle(&self) -> bool {
        (0..self.order).all(|x| (0..self.order).all(|y| self.o(x, y) == x))
    }

    pub fn kind(&self) -> ColoringKind {
        if self.is_quandle() {
            ColoringKind::Quandle
        } else {
            ColoringKind::Biquandle
        }
    }

    fn check(&self, x: usize, y: usize) -> Result<()> {
        if x == 0 || y == 0 || x > self.order || y > self.order {
            return Err(Error::OutOfRange {
                x,
                y,
                order: self.order,
            });
        }
        Ok(())
    }

    /// `x ⊳̄ y`, 1-based.
    pub fn lookup_over(&self, x: usize, y: usize) -> Result<usize> {
        self.check(x, y)?;
        Ok(self.o(x - 1, y - 1) + 1)
    }

    /// `x ⊳̲ y`, 1-based.
    pub fn lookup_under(&self, x: usize, y: usize) -> Result<usize> {
        self.check(x, y)?;
        Ok(self.u(x - 1, y - 1) + 1)
    }

    pub fn over_table(&self) -> Vec<Vec<usize>> {
        self.table(&self.over)
    }

    pub fn under_table(&self) -> Vec<Vec<usize>> {
        self.table(&self.under)
    }

    fn table(&self, flat: &[u16]) -> Vec<Vec<usize>> {
        flat.chunks(self.order)
            .map(|row| row.iter().map(|&v| v as usize + 1).collect())
            .collect()
    }

    #[inline]
    pub(crate) fn o(&self, x: usize, y: usize) -> usize {
        self.over[x * self.order + y] as usize
    }

    #[inline]
    pub(crate) fn u(&self, x: usize, y: usize) -> usize {
        self.under[x * self.order + y] as usize
    }

    fn switch(&self, x: usize, y: usize) -> (usize, usize) {
        (self.o(y, x), self.u(x, y))
    }

    fn axiom_report(&self) -> AxiomReport {
        let n = self.order;
        let mut violations = Vec::new();
        for (table, flat) in [(Table::Over, &self.over), (Table::Under, &self.under)] {
            for y in 0..n {
                let mut seen = vec![false; n];
                for x in 0..n {
                    seen[flat[x * n + y] as usize] = true;
                }
                if seen.iter().any(|s| !s) {
                    violations.push(AxiomViolation::ColumnNotPermutation {
                        table,
                        column: y + 1,
                    });
                }
            }
        }
        let mut hit = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                let (a, b) = self.switch(x, y);
                hit[a * n + b] = true;
            }
        }
        if hit.iter().any(|h| !h) {
            violations.push(AxiomViolation::SwitchNotBijective);
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (a1, b1) = self.switch(x, y);
                    let (a2, b2) = self.switch(b1, z);
                    let (l1, l2) = self.switch(a1, a2);
                    let left = [l1, l2, b2];
                    let (c1, d1) = self.switch(y, z);
                    let (c2, d2) = self.switch(x, c1);
                    let (r2, r3) = self.switch(d2, d1);
                    let right = [c2, r2, r3];
                    for law in 0..3 {
                        if left[law] != right[law] {
                            violations.push(AxiomViolation::Exchange {
                                law: law as u8 + 1,
                                x: x + 1,
                                y: y + 1,
                                z: z + 1,
                            });
                        }
                    }
                }
            }
        }
        for x in 0..n {
            for (condition, ok) in self.kink_conditions(x).into_iter().enumerate() {
                if !ok {
                    violations.push(AxiomViolation::Kink {
                        condition: condition as u8 + 1,
                        x: x + 1,
                    });
                }
            }
        }
        AxiomReport { violations }
    }

    /// For incoming color `x`, whether each of the four one-crossing kinks
    /// (over-pass first or under-pass first, either sign) has exactly one
    /// coloring, and that it returns `x`.
    fn kink_conditions(&self, x: usize) -> [bool; 4] {
        let n = self.order;
        let unique_and = |solutions: Vec<usize>, pred: &dyn Fn(usize) -> bool| {
            solutions.len() == 1 && pred(solutions[0])
        };
        // negative, over first: loop color z = x ⊳̄ z, out = z ⊳̲ x
        let k1 = unique_and((0..n).filter(|&z| self.o(x, z) == z).collect(), &|z| {
            self.u(z, x) == x
        });
        // negative, under first: z = x ⊳̲ z, out = z ⊳̄ x
        let k3 = unique_and((0..n).filter(|&z| self.u(x, z) == z).collect(), &|z| {
            self.o(z, x) == x
        });
        // positive kinks are read from the outgoing side; collect (z, out)
        let mut k2_sol = Vec::new();
        let mut k4_sol = Vec::new();
        for z in 0..n {
            for e in 0..n {
                if self.u(e, z) == z && self.o(z, e) == x {
                    k2_sol.push(e);
                }
                if self.u(z, e) == x && self.o(e, z) == z {
                    k4_sol.push(e);
                }
            }
        }
        let k2 = k2_sol.len() == 1 && k2_sol[0] == x;
        let k4 = k4_sol.len() == 1 && k4_sol[0] == x;
        [k1, k2, k3, k4]
    }
}

/// Smallest `b >= 1` with `order^b >= count`.
///
/// A knot with bridge number `b` has a diagram with `b` seeds from which the
/// whole coloring is determined, so `order^b` bounds the count.
pub fn coloring_lower_bound(count: u64, order: usize, _kind: ColoringKind) -> Result<usize> {
    if order < 2 {
        return Err(Error::DegenerateOrder(order));
    }
    if count == 0 {
        return Err(Error::ZeroCount);
    }
    let mut b = 1;
    let mut reach = order as u128;
    while reach < count as u128 {
        reach *= order as u128;
        b += 1;
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_tables_are_valid() {
        let y = Biquandle::y4();
        assert!(verify_axioms(&y.over_table(), &y.under_table())
            .unwrap()
            .is_valid());
        let e = Biquandle::example3();
        assert!(verify_axioms(&e.over_table(), &e.under_table())
            .unwrap()
            .is_valid());
        let t = Biquandle::trivial(5);
        assert!(verify_axioms(&t.over_table(), &t.under_table())
            .unwrap()
            .is_valid());
        assert!(Biquandle::r3().is_quandle());
        assert!(!y.is_quandle());
    }

    #[test]
    fn lookups() {
        assert_eq!(Biquandle::example3().lookup_under(2, 1).unwrap(), 3);
        assert_eq!(Biquandle::y4().lookup_under(1, 2).unwrap(), 4);
        assert_eq!(Biquandle::trivial(4).lookup_over(3, 2).unwrap(), 3);
        assert_eq!(
            Biquandle::y4().lookup_over(0, 2),
            Err(Error::OutOfRange {
                x: 0,
                y: 2,
                order: 4
            })
        );
    }

    #[test]
    fn shape_and_range_errors() {
        assert_eq!(
            verify_axioms(&[vec![1, 1]], &[vec![1]]),
            Err(Error::ShapeMismatch)
        );
        assert_eq!(
            verify_axioms(&[vec![2]], &[vec![1]]),
            Err(Error::OutOfRangeEntry { value: 2, order: 1 })
        );
    }

    #[test]
    fn broken_table_is_reported() {
        let mut under = Biquandle::y4().under_table();
        under[0][0] = 2;
        let report = verify_axioms(&Biquandle::y4().over_table(), &under).unwrap();
        assert!(!report.is_valid());
        assert!(report
            .violations
            .contains(&AxiomViolation::ColumnNotPermutation {
                table: Table::Under,
                column: 1
            }));
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(
            coloring_lower_bound(16, 4, ColoringKind::Biquandle).unwrap(),
            2
        );
        assert_eq!(
            coloring_lower_bound(9, 3, ColoringKind::Quandle).unwrap(),
            2
        );
        assert_eq!(
            coloring_lower_bound(4, 4, ColoringKind::Biquandle).unwrap(),
            1
        );
        assert_eq!(
            coloring_lower_bound(17, 4, ColoringKind::Biquandle).unwrap(),
            3
        );
        assert_eq!(
            coloring_lower_bound(4, 1, ColoringKind::Quandle),
            Err(Error::DegenerateOrder(1))
        );
        assert_eq!(
            coloring_lower_bound(0, 3, ColoringKind::Quandle),
            Err(Error::ZeroCount)
        );
    }
}
