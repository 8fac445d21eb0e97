use alloc::vec::Vec;

use super::{relabel_first_appearance, GaussCode, Sign, SignedGaussCode};

/// Smallest `(entries, signs)` over all rotations of the sequence and its
/// reversal, each relabelled by first appearance.
fn minimal(entries: &[i32], signs: Option<&[Sign]>) -> (Vec<i32>, Vec<Sign>) {
    let m = entries.len();
    if m == 0 {
        return (Vec::new(), Vec::new());
    }
    let mut reversed = entries.to_vec();
    reversed.reverse();
    let mut best: Option<(Vec<i32>, Vec<Sign>)> = None;
    let mut buf = Vec::with_capacity(m);
    for base in [entries, &reversed[..]] {
        for r in 0..m {
            buf.clear();
            buf.extend_from_slice(&base[r..]);
            buf.extend_from_slice(&base[..r]);
            let candidate = relabel_first_appearance(&buf, signs);
            if best.as_ref().map_or(true, |b| candidate < *b) {
                best = Some(candidate);
            }
        }
    }
    best.unwrap_or_default()
}

impl GaussCode {
    /// Representative shared by every rotation, reversal and relabelling.
    pub fn canonical_form(&self) -> GaussCode {
        GaussCode::from_valid(minimal(&self.entries, None).0)
    }
}

impl SignedGaussCode {
    /// As [`GaussCode::canonical_form`], with signs following their crossings.
    pub fn canonical_form(&self) -> SignedGaussCode {
        let (entries, signs) = minimal(self.code.entries(), Some(&self.signs));
        SignedGaussCode {
            code: GaussCode::from_valid(entries),
            signs,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_examples() {
        let a: GaussCode = "-1 2 -3 1 -2 3".parse().unwrap();
        let b: GaussCode = "2 -3 1 -2 3 -1".parse().unwrap();
        assert_eq!(a.canonical_form(), b.canonical_form());
        assert_eq!(GaussCode::unknot().canonical_form(), GaussCode::unknot());
        let c = a.canonical_form();
        assert_eq!(c.canonical_form(), c);
    }

    #[test]
    fn signs_distinguish_mirrors() {
        let neg =
            SignedGaussCode::from_parts(alloc::vec![-1, 2, -3, 1, -2, 3], &[-1, -1, -1]).unwrap();
        let pos =
            SignedGaussCode::from_parts(alloc::vec![-1, 2, -3, 1, -2, 3], &[1, 1, 1]).unwrap();
        assert_ne!(neg.canonical_form(), pos.canonical_form());
        assert_eq!(neg.rotate(3).canonical_form(), neg.canonical_form());
    }
}
