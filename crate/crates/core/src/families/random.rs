//! Seeded random games. Sample `k` of a run draws from its own ChaCha stream,
//! so the samples do not depend on evaluation order.

use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::game::{game_from_weights, make_game, WeightClass, WeightedGame};
use crate::numeric::{int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightDist {
    /// Each player draws an integer weight uniformly from `min..=max`.
    UniformInt { min: u64, max: u64 },
    /// `n_large` players of weight `w_large` and `n_small` of weight 1.
    TwoClass {
        n_large: usize,
        w_large: u64,
        n_small: usize,
    },
}

/// The generator for sample `index` of a run seeded with `seed`.
pub fn random_game_stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// `[q·w(N); w]` with weights drawn from `dist`.
pub fn random_game(n: usize, q: &Rational, seed: u64, dist: WeightDist) -> Result<WeightedGame> {
    random_game_with(n, q, &mut random_game_stream(seed, 0), dist)
}

pub(crate) fn random_game_with(
    n: usize,
    q: &Rational,
    rng: &mut ChaCha8Rng,
    dist: WeightDist,
) -> Result<WeightedGame> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if !q.is_positive() || *q > Rational::one() {
        return Err(Error::InvalidParameter("q must lie in (0, 1]".into()));
    }
    match dist {
        WeightDist::UniformInt { min, max } => {
            if min == 0 || min > max {
                return Err(Error::InvalidParameter(format!(
                    "weight range {min}..={max} must be positive and nonempty"
                )));
            }
            let weights: Vec<Rational> = (0..n)
                .map(|_| int(rng.gen_range(min..=max) as i64))
                .collect();
            let total: Rational = weights.iter().sum();
            game_from_weights(total * q, &weights)
        }
        WeightDist::TwoClass {
            n_large,
            w_large,
            n_small,
        } => {
            if n_large + n_small != n || n_large == 0 || n_small == 0 || w_large == 0 {
                return Err(Error::InvalidParameter(
                    "two-class sizes must be positive and sum to n".into(),
                ));
            }
            let total = int((w_large * n_large as u64 + n_small as u64) as i64);
            make_game(
                total * q,
                vec![
                    WeightClass::new(int(w_large as i64), n_large),
                    WeightClass::new(int(1), n_small),
                ],
            )
        }
    }
}
