//! `[3n³+n²; 2n²×(2n+1), 1×2n³]`: a block of large players against many unit players.

use num_bigint::BigUint;

use super::prop1::CLAIMED_FROM;
use super::{BoundCheck, FamilyId, FamilyInstance, Relation};
use crate::binomial::choose;
use crate::counting::two_class_eta;
use crate::game::{integer_game, WeightedGame};
use crate::numeric::{biguint_ratio, int, pow, ratio, two_point_six, Rational};
use crate::power::{IndexKind, PowerVector};
use crate::weights::l1_distance;

pub fn prop2_game(n: u64) -> WeightedGame {
    assert!(n >= 1);
    let (n2, n3) = (n * n, n * n * n);
    integer_game(
        3 * n3 + n2,
        &[(2 * n2, (2 * n + 1) as usize), (1, (2 * n3) as usize)],
    )
    .expect("family parameters give a valid game")
}

/// `Σ_j C(2n+1, j)·C(2n³-1, 3n³+n²-2n²j-1)`, the small player's swing count as
/// written out in the proof.
pub fn prop2_small_eta_printed(n: u64) -> BigUint {
    let (n2, n3) = ((n * n) as i64, (n * n * n) as i64);
    let big = 2 * n as i64 + 1;
    (0..=big)
        .map(|j| choose(big, j) * choose(2 * n3 - 1, 3 * n3 + n2 - 2 * n2 * j - 1))
        .sum()
}

#[derive(Debug, Clone)]
pub struct Prop2Report {
    pub instance: FamilyInstance,
    pub eta_big: BigUint,
    pub eta_small: BigUint,
    pub banzhaf: PowerVector,
    pub l1: Rational,
    pub checks: Vec<BoundCheck>,
}

pub fn prop2_instance(n: u64) -> Prop2Report {
    assert!(n >= 2, "the family starts at n = 2");
    let game = prop2_game(n);
    let instance = FamilyInstance::new(FamilyId::Prop2(n), game, ratio(1, 2));
    let (n2, n3) = (n * n, n * n * n);
    let big_count = 2 * n + 1;
    let eta = two_class_eta(2 * n2, big_count, 1, 2 * n3, 3 * n3 + n2);
    let (eta_big, eta_small) = (eta.first, eta.second);
    let total = &eta_big * big_count + &eta_small * (2 * n3);
    let bzi_big = biguint_ratio(&eta_big, &total);
    let bzi_small = biguint_ratio(&eta_small, &total);
    let banzhaf = PowerVector::from_class_values(
        IndexKind::Banzhaf,
        &instance.game,
        &[bzi_big.clone(), bzi_small],
    );
    let w = instance.relative_weights.entries();
    let l1 = l1_distance(&banzhaf.values, w).expect("same dimension");

    let claimed = n >= CLAIMED_FROM;
    let ni = n as i64;
    let growth = pow(&two_point_six(), n as u32);
    let checks = vec![
        BoundCheck::new(
            "BZI_1/BZI_{2n+2} >= 2.6^n/(2n+1)",
            biguint_ratio(&eta_big, &eta_small),
            Relation::AtLeast,
            &growth / int(2 * ni + 1),
            claimed,
        ),
        BoundCheck::new(
            "||BZI - w||_1 >= 1/5",
            l1.clone(),
            Relation::AtLeast,
            ratio(1, 5),
            claimed,
        ),
        BoundCheck::new(
            "BZI_1 - w_1 >= 1/(5(2n+1))",
            &bzi_big - &w[0],
            Relation::AtLeast,
            ratio(1, 5 * (2 * ni + 1)),
            claimed,
        ),
        BoundCheck::new(
            "w_1 = 1/(3n+1)",
            w[0].clone(),
            Relation::Equal,
            ratio(1, 3 * ni + 1),
            true,
        ),
        BoundCheck::new(
            "eta_1 / (C(2n,n) C(2n^3,n^3)) >= 1",
            biguint_ratio(
                &eta_big,
                &(choose(2 * ni, ni) * choose(2 * n3 as i64, n3 as i64)),
            ),
            Relation::AtLeast,
            int(1),
            true,
        ),
        BoundCheck::new(
            "eta_small / written sum = 1",
            biguint_ratio(&eta_small, &prop2_small_eta_printed(n)),
            Relation::Equal,
            int(1),
            true,
        ),
    ];
    Prop2Report {
        instance,
        eta_big,
        eta_small,
        banzhaf,
        l1,
        checks,
    }
}
