use alloc::vec::Vec;

use super::{relabel_first_appearance, GaussCode, Sign, SignedGaussCode};
use crate::{Error, Result};

impl SignedGaussCode {
    /// Closure of a braid word on `strands` strands.
    ///
    /// Generator `i` crosses positions `i - 1` and `i` (0-based, left to
    /// right, strands running upward). A positive generator takes the left
    /// strand over and gives a positive crossing; a negative one the reverse.
    /// The closure must have a single component.
    pub fn from_braid(strands: usize, word: &[i32]) -> Result<SignedGaussCode> {
        for &g in word {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(Error::InvalidGenerator {
                    generator: g,
                    strands,
                });
            }
        }
        let mut entries = Vec::with_capacity(2 * word.len());
        let mut position = 0usize;
        let mut passes = 0usize;
        loop {
            for (t, &g) in word.iter().enumerate() {
                let label = t as i32 + 1;
                let left = g.unsigned_abs() as usize - 1;
                if position == left {
                    entries.push(if g > 0 { label } else { -label });
                    position += 1;
                } else if position == left + 1 {
                    entries.push(if g < 0 { label } else { -label });
                    position -= 1;
                }
            }
            passes += 1;
            if position == 0 {
                break;
            }
        }
        if passes != strands {
            return Err(Error::NotAKnot);
        }
        let signs: Vec<Sign> = word
            .iter()
            .map(|&g| {
                if g > 0 {
                    Sign::Positive
                } else {
                    Sign::Negative
                }
            })
            .collect();
        let (entries, signs) = relabel_first_appearance(&entries, Some(&signs));
        Ok(SignedGaussCode {
            code: GaussCode::from_valid(entries),
            signs,
        })
    }
}
