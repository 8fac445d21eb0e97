mod common;

use std::time::{Duration, Instant};

use bridgekit_core::bracket::{
    jones, jones_fingerprint, kauffman_bracket, verify_virtualization, virtualization_branches,
};
use bridgekit_core::{LaurentPolynomial, Sign, SignedGaussCode};
use common::{
    oracle_bracket, oracle_jones, random_classical, random_move, random_signed, with_triangle,
    MoveKind,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn state_sum_matches_oracle() {
    let mut rng = StdRng::seed_from_u64(31);
    for _ in 0..200 {
        let code = {
            let n = rng.gen_range(0..=7);
            random_signed(&mut rng, n)
        };
        assert_eq!(kauffman_bracket(&code), oracle_bracket(&code), "{code}");
        assert_eq!(jones(&code), oracle_jones(&code), "{code}");
    }
}

#[test]
fn known_values() {
    let left = SignedGaussCode::from_parts(vec![-1, 2, -3, 1, -2, 3], &[-1, -1, -1]).unwrap();
    let expected = LaurentPolynomial::from_terms(&[(-1, 16), (1, 12), (1, 4)]);
    assert_eq!(oracle_jones(&left), expected);
    assert_eq!(jones(&left), expected);
    assert_ne!(jones(&left), LaurentPolynomial::one());
    let unknot = SignedGaussCode::unknot();
    let kink = SignedGaussCode::from_parts(vec![1, -1], &[1]).unwrap();
    assert_eq!(jones_fingerprint(&unknot), jones_fingerprint(&kink));
    assert_eq!(jones_fingerprint(&left), jones_fingerprint(&left.clone()));
}

#[test]
fn jones_is_move_and_rotation_invariant() {
    let mut rng = StdRng::seed_from_u64(32);
    for i in 0..300 {
        let mut code = {
            let n = rng.gen_range(0..=6);
            random_signed(&mut rng, n)
        };
        if i % 3 == 0 {
            code = with_triangle(&mut rng, &code);
        }
        let (moved, kind) = random_move(&mut rng, &code);
        assert_eq!(
            jones(&code),
            jones(&moved),
            "{code} -> {moved} via {kind:?}"
        );
        let k = rng.gen_range(0..code.len().max(1));
        assert_eq!(jones(&code), jones(&code.rotate(k)));
        let before = kauffman_bracket(&code);
        let after = kauffman_bracket(&moved);
        let factor = |s: Sign| LaurentPolynomial::monomial(-1, 3 * s.value());
        match kind {
            MoveKind::InsertKink(s) => assert_eq!(after, &before * &factor(s)),
            MoveKind::DeleteKink(s) => assert_eq!(before, &after * &factor(s)),
            _ => assert_eq!(before, after),
        }
    }
}

#[test]
fn virtualization_identity_on_classical_codes() {
    let mut rng = StdRng::seed_from_u64(33);
    let figure_eight = SignedGaussCode::from_braid(3, &[1, -2, 1, -2]).unwrap();
    for k in 1..=4 {
        assert!(verify_virtualization(&figure_eight, k).unwrap());
    }
    for _ in 0..100 {
        let code = random_classical(&mut rng, 1, 6);
        for k in 1..=code.crossing_count() as u32 {
            assert!(verify_virtualization(&code, k).unwrap(), "{code} at {k}");
            let (plus, minus) = virtualization_branches(&code, k).unwrap();
            let by_sign = if code.sign(k).unwrap() == Sign::Positive {
                plus
            } else {
                minus
            };
            assert!(by_sign);
        }
    }
}

#[test]
fn virtualization_identity_can_fail_for_virtual_codes() {
    // crossing 1 has odd parity: one entry between its passes
    let code = SignedGaussCode::from_parts(vec![1, -2, -1, 2], &[1, 1]).unwrap();
    assert!(!code.code().parity_filter());
    assert!(!verify_virtualization(&code, 1).unwrap());
}

#[test]
fn sixteen_crossings_within_a_second() {
    let mut rng = StdRng::seed_from_u64(34);
    let code = random_classical(&mut rng, 16, 16);
    assert_eq!(code.crossing_count(), 16);
    let start = Instant::now();
    let v = jones(&code);
    assert!(start.elapsed() < Duration::from_secs(1));
    assert!(!v.is_zero());
}
