//! Exact swing counting, the Penrose-Banzhaf index and the Shapley-Shubik
//! index.
//!
//! Every quantity is computed per weight class from a leave-one-out weight
//! profile: for a player of integer weight `k`, the `i`-swings are exactly the
//! coalitions of the other players whose weight lies in `[Q - k, Q - 1]`.

mod brute;
mod closed_form;
mod profile;

pub use brute::{brute_force_indices, BruteForceIndices, BRUTE_FORCE_CAP};
pub use closed_form::{eta_one_big, two_class_eta, two_class_ssi, TwoClassEta};
pub use profile::{sized_profile, weight_profile, SizedProfile, WeightProfile};

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rayon::prelude::*;

use crate::binomial;
use crate::game::WeightedGame;
use crate::numeric::{biguint_ratio, Rational};
use crate::power::{IndexKind, PowerVector};

/// Swing counts `η_i` per player and their total `η`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwingCounts {
    pub per_player: Vec<BigUint>,
    pub total: BigUint,
}

impl SwingCounts {
    fn from_classes(game: &WeightedGame, per_class: &[BigUint]) -> Self {
        let per_player: Vec<BigUint> = game
            .classes()
            .iter()
            .zip(per_class)
            .flat_map(|(c, eta)| std::iter::repeat(eta.clone()).take(c.count))
            .collect();
        let total = per_player.iter().sum();
        SwingCounts { per_player, total }
    }

    /// Banzhaf index `η_i / η`.
    pub fn banzhaf(&self) -> PowerVector {
        let values = self
            .per_player
            .iter()
            .map(|eta| biguint_ratio(eta, &self.total))
            .collect();
        PowerVector::new(IndexKind::Banzhaf, values)
    }
}

/// Exclusion vector removing a single member of `class`.
fn leave_one_out(game: &WeightedGame, class: usize) -> Vec<usize> {
    let mut ex = vec![0; game.num_classes()];
    ex[class] = 1;
    ex
}

/// Weight window `[Q - k, Q - 1]` of the swings of a weight-`k` player, or
/// `None` when the player has weight zero.
fn swing_window(game: &WeightedGame, class: usize) -> Option<(u64, u64)> {
    let k = game.int_weights()[class];
    if k == 0 {
        return None;
    }
    let q = game.int_quota();
    Some((q.saturating_sub(k), q - 1))
}

/// Runs `f` on one representative class per distinct integer weight and
/// spreads the results back to every class.
fn per_distinct_weight<T: Clone + Send>(
    game: &WeightedGame,
    f: impl Fn(usize) -> T + Sync,
) -> Vec<T> {
    let weights = game.int_weights();
    let mut first: BTreeMap<u64, usize> = BTreeMap::new();
    for (k, &w) in weights.iter().enumerate() {
        first.entry(w).or_insert(k);
    }
    let reps: Vec<usize> = first.values().copied().collect();
    let values: Vec<T> = reps.par_iter().map(|&k| f(k)).collect();
    let at: BTreeMap<u64, T> = reps.iter().map(|&k| weights[k]).zip(values).collect();
    weights.iter().map(|w| at[w].clone()).collect()
}

/// `η` for one member of each class.
pub fn class_swing_counts(game: &WeightedGame) -> Vec<BigUint> {
    per_distinct_weight(game, |class| match swing_window(game, class) {
        None => BigUint::zero(),
        Some((lo, hi)) => {
            let ex = leave_one_out(game, class);
            weight_profile(game, Some(&ex))
                .expect("leave-one-out exclusion is valid")
                .range_sum(lo, hi)
        }
    })
}

pub fn swing_counts(game: &WeightedGame) -> SwingCounts {
    SwingCounts::from_classes(game, &class_swing_counts(game))
}

pub fn banzhaf(game: &WeightedGame) -> PowerVector {
    swing_counts(game).banzhaf()
}

/// `Σ_s count[s] · s!(n-s-1)! / n!`.
pub(crate) fn shapley_weighting(
    n: usize,
    by_size: impl IntoIterator<Item = (usize, BigUint)>,
) -> Rational {
    let fact = binomial::factorials(n);
    let numer: BigUint = by_size
        .into_iter()
        .map(|(s, c)| c * &fact[s] * &fact[n - s - 1])
        .sum();
    Rational::new(BigInt::from(numer), BigInt::from(fact[n].clone()))
}

/// Shapley-Shubik value of one member of each class.
pub fn class_shapley_shubik(game: &WeightedGame) -> Vec<Rational> {
    let n = game.n();
    per_distinct_weight(game, |class| match swing_window(game, class) {
        None => Rational::zero(),
        Some((lo, hi)) => {
            let ex = leave_one_out(game, class);
            let sized = sized_profile(game, Some(&ex)).expect("leave-one-out exclusion is valid");
            shapley_weighting(n, sized.sizes_in_range(lo, hi))
        }
    })
}

pub fn shapley_shubik(game: &WeightedGame) -> PowerVector {
    PowerVector::from_class_values(IndexKind::ShapleyShubik, game, &class_shapley_shubik(game))
}
