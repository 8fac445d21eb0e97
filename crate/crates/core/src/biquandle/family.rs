use crate::gauss::SignedGaussCode;

/// The four-crossing Kishino knot: trivial Jones polynomial, yet 16
/// colorings by [`super::Biquandle::y4`] against 4 for the unknot.
pub fn kish() -> SignedGaussCode {
    SignedGaussCode::from_parts(alloc::vec![-1, 2, 1, -2, -3, 4, 3, -4], &[-1, 1, 1, -1])
        .expect("valid code")
}

/// Left-handed trefoil.
pub fn trefoil() -> SignedGaussCode {
    SignedGaussCode::from_parts(alloc::vec![-1, 2, -3, 1, -2, 3], &[-1, -1, -1])
        .expect("valid code")
}

/// `n` copies of [`kish`] summed with `m - 1` trefoils.
///
/// `m = 0` is treated like `m = 1`.
pub fn kishino_family(m: usize, n: usize) -> SignedGaussCode {
    let mut code = SignedGaussCode::unknot();
    let k = kish();
    for _ in 0..n {
        code = code.connected_sum(&k);
    }
    let t = trefoil();
    for _ in 1..m {
        code = code.connected_sum(&t);
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biquandle::{count_colorings, Biquandle};
    use crate::bracket::jones;
    use crate::poly::LaurentPolynomial;

    #[test]
    fn kish_counts() {
        let y = Biquandle::y4();
        assert_eq!(count_colorings(&kish(), &y), 16);
        assert_eq!(count_colorings(&kishino_family(1, 2), &y), 64);
        assert_eq!(jones(&kish()), LaurentPolynomial::one());
    }

    #[test]
    fn family_shapes() {
        assert_eq!(kishino_family(2, 0), trefoil());
        assert_eq!(kishino_family(1, 0), SignedGaussCode::unknot());
        assert_eq!(kishino_family(3, 2).crossing_count(), 14);
    }
}
