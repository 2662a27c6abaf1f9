//! `[n³+n²; 2n², 1×2n³]`: one large player against many unit players.

use num_bigint::BigUint;

use super::{BoundCheck, FamilyId, FamilyInstance, Relation};
use crate::binomial::choose;
use crate::counting::eta_one_big;
use crate::game::{integer_game, WeightedGame};
use crate::numeric::{biguint_ratio, int, pow, ratio, two_point_six, Rational};
use crate::power::{IndexKind, PowerVector};
use crate::weights::{l1_distance, linf_distance};

/// Smallest `n` for which the family's bounds are claimed.
pub const CLAIMED_FROM: u64 = 11;

pub fn prop1_game(n: u64) -> WeightedGame {
    assert!(n >= 1);
    let quota = n * n * n + n * n;
    integer_game(quota, &[(2 * n * n, 1), (1, (2 * n * n * n) as usize)])
        .expect("family parameters give a valid game")
}

#[derive(Debug, Clone)]
pub struct Prop1Report {
    pub instance: FamilyInstance,
    pub eta_big: BigUint,
    pub eta_small: BigUint,
    pub banzhaf: PowerVector,
    pub l1: Rational,
    pub linf: Rational,
    pub checks: Vec<BoundCheck>,
}

pub fn prop1_instance(n: u64) -> Prop1Report {
    assert!(n >= 2, "the family starts at n = 2");
    let game = prop1_game(n);
    let instance = FamilyInstance::new(FamilyId::Prop1(n), game, ratio(1, 2));
    let k = 2 * n * n;
    let m = 2 * n * n * n;
    let quota = n * n * n + n * n;
    let (eta_big, eta_small) = eta_one_big(k, m, quota);
    let total = &eta_big + &eta_small * m;
    let bzi_big = biguint_ratio(&eta_big, &total);
    let bzi_small = biguint_ratio(&eta_small, &total);
    let banzhaf = PowerVector::from_class_values(
        IndexKind::Banzhaf,
        &instance.game,
        &[bzi_big.clone(), bzi_small],
    );
    let w = instance.relative_weights.entries();
    let l1 = l1_distance(&banzhaf.values, w).expect("same dimension");
    let linf = linf_distance(&banzhaf.values, w).expect("same dimension");

    let claimed = n >= CLAIMED_FROM;
    let nn = int(n as i64);
    let growth = pow(&two_point_six(), n as u32);
    let (ni, n2, n3) = (n as i64, (n * n) as i64, (n * n * n) as i64);
    let checks = vec![
        BoundCheck::new(
            "BZI_1 >= 1 - 2n^3/2.6^n",
            bzi_big,
            Relation::AtLeast,
            int(1) - int(2 * n3) / &growth,
            claimed,
        ),
        BoundCheck::new(
            "||BZI - w||_inf >= 1 - 2/n",
            linf.clone(),
            Relation::AtLeast,
            int(1) - int(2) / &nn,
            claimed,
        ),
        BoundCheck::new(
            "||BZI - w||_1 >= 2 - 4/n",
            l1.clone(),
            Relation::AtLeast,
            int(2) - int(4) / &nn,
            claimed,
        ),
        BoundCheck::new(
            "eta_1/eta_2 >= 2.6^n",
            biguint_ratio(&eta_big, &eta_small),
            Relation::AtLeast,
            growth,
            claimed,
        ),
        BoundCheck::new(
            "w_1 = 1/(n+1)",
            w[0].clone(),
            Relation::Equal,
            ratio(1, ni + 1),
            true,
        ),
        BoundCheck::new(
            "eta_1 / C(2n^3, n^3) >= 1",
            biguint_ratio(&eta_big, &choose(2 * n3, n3)),
            Relation::AtLeast,
            int(1),
            true,
        ),
        BoundCheck::new(
            "eta_2 / C(2n^3, n^3+n^2) = 1",
            biguint_ratio(&eta_small, &choose(2 * n3, n3 + n2)),
            Relation::Equal,
            int(1),
            true,
        ),
    ];
    Prop1Report {
        instance,
        eta_big,
        eta_small,
        banzhaf,
        l1,
        linf,
        checks,
    }
}
