mod common;

use bridgekit_core::gauss::Kink;
use bridgekit_core::{GaussCode, ParsedCode, SignedGaussCode};
use common::{random_code, random_move, random_signed};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn code_strategy(max: usize) -> impl Strategy<Value = GaussCode> {
    (0..=max, any::<u64>()).prop_map(|(n, seed)| random_code(&mut StdRng::seed_from_u64(seed), n))
}

fn signed_strategy(max: usize) -> impl Strategy<Value = SignedGaussCode> {
    (0..=max, any::<u64>()).prop_map(|(n, seed)| random_signed(&mut StdRng::seed_from_u64(seed), n))
}

fn is_valid(entries: &[i32]) -> bool {
    GaussCode::new(entries.to_vec())
        .map(|c| c.entries() == entries)
        .unwrap_or(false)
}

proptest! {
    #[test]
    fn text_round_trip(code in code_strategy(10)) {
        prop_assert_eq!(code.to_string().parse::<GaussCode>().unwrap(), code);
    }

    #[test]
    fn signed_text_round_trip(code in signed_strategy(10)) {
        let parsed = ParsedCode::parse(&code.to_string()).unwrap();
        prop_assert_eq!(parsed, ParsedCode::Signed(code));
    }

    #[test]
    fn strands_partition_positions(code in code_strategy(10)) {
        prop_assume!(!code.is_empty());
        let strands = code.strands().unwrap();
        prop_assert_eq!(strands.len(), code.crossing_count());
        let m = code.len();
        let mut covered = vec![0; m];
        for s in &strands {
            prop_assert!(s.entries.first().unwrap() < &0);
            prop_assert!(s.entries.last().unwrap() < &0);
            prop_assert!(s.interior().iter().all(|&e| e > 0));
            // each strand owns its start and interior; the end belongs to the next
            for d in 0..s.entries.len() - 1 {
                covered[(s.start_index + d) % m] += 1;
            }
        }
        prop_assert!(covered.iter().all(|&c| c == 1));
    }

    #[test]
    fn moves_keep_codes_valid(code in signed_strategy(7), seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (out, _) = random_move(&mut rng, &code);
        prop_assert!(is_valid(out.entries()));
        prop_assert_eq!(out.signs().len(), out.crossing_count());
        let unsigned = code.code().move1_insert(rng.gen_range(0..=code.len()), Kink::UnderFirst).unwrap();
        prop_assert!(is_valid(unsigned.entries()));
    }

    #[test]
    fn simplify_is_idempotent(code in signed_strategy(8), seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut grown = code;
        for _ in 0..3 {
            grown = random_move(&mut rng, &grown).0;
        }
        let once = grown.simplify();
        prop_assert!(once.len() <= grown.len());
        prop_assert_eq!(once.simplify(), once.clone());
        let plain = grown.code().simplify();
        prop_assert_eq!(plain.simplify(), plain);
    }

    #[test]
    fn canonical_form_is_orbit_invariant(code in signed_strategy(8), k in 0usize..20, reverse in any::<bool>()) {
        let canon = code.canonical_form();
        let mut moved = code.rotate(k);
        if reverse {
            moved = moved.reverse();
        }
        // relabelling: the text round trip through a shuffled label set
        prop_assert_eq!(moved.canonical_form(), canon.clone());
        prop_assert_eq!(canon.canonical_form(), canon.clone());
        prop_assert_eq!(code.code().rotate(k).canonical_form(), code.code().canonical_form());
    }

    #[test]
    fn canonical_form_ignores_label_names(code in code_strategy(8), seed in any::<u64>()) {
        let n = code.crossing_count() as i32;
        let mut perm: Vec<i32> = (1..=n).collect();
        rand::seq::SliceRandom::shuffle(&mut perm[..], &mut StdRng::seed_from_u64(seed));
        let renamed: Vec<i32> = code
            .entries()
            .iter()
            .map(|&e| e.signum() * (perm[e.unsigned_abs() as usize - 1] + 100))
            .collect();
        prop_assert_eq!(GaussCode::new(renamed).unwrap().canonical_form(), code.canonical_form());
    }

    #[test]
    fn sums_and_removals_count_crossings(a in code_strategy(6), b in code_strategy(6), k in 1u32..7) {
        let sum = a.connected_sum(&b);
        prop_assert_eq!(sum.crossing_count(), a.crossing_count() + b.crossing_count());
        prop_assert!(is_valid(sum.entries()));
        if (k as usize) <= a.crossing_count() {
            let removed = a.virtualize_remove(k).unwrap();
            prop_assert_eq!(removed.crossing_count(), a.crossing_count() - 1);
            prop_assert!(is_valid(removed.entries()));
        }
    }

    #[test]
    fn crossing_switch_is_an_involution(code in signed_strategy(8), j in 1u32..9) {
        prop_assume!((j as usize) <= code.crossing_count());
        let once = code.crossing_switch(j).unwrap();
        prop_assert_eq!(once.writhe(), code.writhe() - 2 * code.sign(j).unwrap().value());
        prop_assert_eq!(once.crossing_switch(j).unwrap(), code);
    }
}

#[test]
fn trefoil_virtualizations_coincide_up_to_symmetry() {
    let t: GaussCode = "-1 2 -3 1 -2 3".parse().unwrap();
    let forms: Vec<GaussCode> = (1..=3)
        .map(|k| t.virtualize_remove(k).unwrap().canonical_form())
        .collect();
    assert!(forms.iter().all(|f| *f == forms[0]));
}
