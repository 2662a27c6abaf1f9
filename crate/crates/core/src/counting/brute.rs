//! Literal subset enumeration, used as the test oracle for the class DP.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::SwingCounts;
use crate::error::{Error, Result};
use crate::game::WeightedGame;
use crate::numeric::Rational;
use crate::power::{IndexKind, PowerVector};

pub const BRUTE_FORCE_CAP: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForceIndices {
    pub swings: SwingCounts,
    pub banzhaf: PowerVector,
    pub shapley_shubik: PowerVector,
}

pub fn brute_force_indices(game: &WeightedGame) -> Result<BruteForceIndices> {
    let n = game.n();
    if n > BRUTE_FORCE_CAP {
        return Err(Error::TooLarge {
            what: "brute-force enumeration",
            n,
            cap: BRUTE_FORCE_CAP,
        });
    }
    let weights = game.player_int_weights();
    let quota = game.int_quota();
    let full = 1usize << n;
    let mut subset_weight = vec![0u64; full];
    for mask in 1..full {
        let low = mask.trailing_zeros() as usize;
        subset_weight[mask] = subset_weight[mask & (mask - 1)] + weights[low];
    }
    // swings[i][s]: i-swings of size s
    let mut swings = vec![vec![0u64; n]; n];
    for (mask, &w) in subset_weight.iter().enumerate() {
        if w >= quota {
            continue;
        }
        let size = mask.count_ones() as usize;
        for (i, &wi) in weights.iter().enumerate() {
            if mask >> i & 1 == 0 && w + wi >= quota {
                swings[i][size] += 1;
            }
        }
    }

    let per_player: Vec<BigUint> = swings
        .iter()
        .map(|by_size| BigUint::from(by_size.iter().sum::<u64>()))
        .collect();
    let total: BigUint = per_player.iter().sum();
    let counts = SwingCounts { per_player, total };
    let banzhaf = counts.banzhaf();

    let mut fact = vec![BigUint::one()];
    for k in 1..=n {
        let next = &fact[k - 1] * BigUint::from(k);
        fact.push(next);
    }
    let shapley = swings
        .iter()
        .map(|by_size| {
            by_size
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(s, &c)| {
                    let weight = Rational::new(
                        BigInt::from(&fact[s] * &fact[n - s - 1]),
                        BigInt::from(fact[n].clone()),
                    );
                    weight * Rational::from_integer(BigInt::from(c))
                })
                .fold(Rational::zero(), |acc, x| acc + x)
        })
        .collect();
    Ok(BruteForceIndices {
        swings: counts,
        banzhaf,
        shapley_shubik: PowerVector::new(IndexKind::ShapleyShubik, shapley),
    })
}
