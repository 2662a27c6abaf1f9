mod common;

use proptest::prelude::*;
use voting_power::counting::{
    banzhaf, brute_force_indices, class_shapley_shubik, class_swing_counts, eta_one_big,
    shapley_shubik, swing_counts, two_class_eta, two_class_ssi,
};
use voting_power::numeric::int;
use voting_power::{dual_game, integer_game};

#[test]
fn dp_matches_enumeration_on_seeded_suite() {
    for (k, g) in common::oracle_suite(500, 2024).iter().enumerate() {
        let brute = brute_force_indices(g).unwrap();
        assert_eq!(swing_counts(g), brute.swings, "game #{k}: {g:?}");
        assert_eq!(shapley_shubik(g), brute.shapley_shubik, "game #{k}: {g:?}");
    }
}

#[test]
fn one_big_closed_form_matches_dp() {
    for k in 1..=6u64 {
        for m in 1..=14u64 {
            for q in 1..=k + m {
                let g = integer_game(q, &[(k, 1), (1, m as usize)]).unwrap();
                let (big, small) = eta_one_big(k, m, q);
                assert_eq!(
                    class_swing_counts(&g),
                    vec![big, small],
                    "[{q}; {k}, 1x{m}]"
                );
            }
        }
    }
}

#[test]
fn two_class_sums_match_dp() {
    for (a, ca, b, cb) in [(2, 3, 1, 7), (5, 2, 3, 4), (4, 5, 1, 9), (7, 1, 2, 8)] {
        let total = a * ca + b * cb;
        for q in 1..=total {
            let g = integer_game(q, &[(a, ca as usize), (b, cb as usize)]).unwrap();
            let eta = two_class_eta(a, ca, b, cb, q);
            assert_eq!(class_swing_counts(&g), vec![eta.first, eta.second]);
            let (x, y) = two_class_ssi(a, ca, b, cb, q);
            assert_eq!(class_shapley_shubik(&g), vec![x, y]);
        }
    }
}

#[test]
fn duality_preserves_swings_on_suite() {
    for g in common::oracle_suite(500, 2024) {
        let d = dual_game(&g);
        assert_eq!(swing_counts(&g), swing_counts(&d));
        assert_eq!(dual_game(&d).int_quota(), g.int_quota());
    }
}

fn small_game() -> impl Strategy<Value = voting_power::WeightedGame> {
    prop::collection::vec((0u64..=12, 1usize..=3), 1..=5)
        .prop_filter("some weight", |cs| cs.iter().any(|&(w, _)| w > 0))
        .prop_flat_map(|classes| {
            let total: u64 = classes.iter().map(|&(w, c)| w * c as u64).sum();
            (Just(classes), 1..=total)
        })
        .prop_map(|(classes, q)| integer_game(q, &classes).unwrap())
}

proptest! {
    #[test]
    fn indices_are_normalized_symmetric_and_monotone(g in small_game()) {
        let bzi = banzhaf(&g);
        let ssi = shapley_shubik(&g);
        prop_assert!(bzi.is_normalized());
        prop_assert!(ssi.is_normalized());
        prop_assert!(bzi.is_class_symmetric(&g));
        prop_assert!(ssi.is_class_symmetric(&g));
        // heavier players never have less power
        let w = g.player_int_weights();
        for i in 0..g.n() {
            for j in 0..g.n() {
                if w[i] > w[j] {
                    prop_assert!(bzi.values[i] >= bzi.values[j]);
                    prop_assert!(ssi.values[i] >= ssi.values[j]);
                }
                if w[i] == 0 {
                    prop_assert_eq!(&bzi.values[i], &int(0));
                }
            }
        }
    }
}
