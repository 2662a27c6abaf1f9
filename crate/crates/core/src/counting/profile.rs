//! Coalition counts by total integer weight, built class by class with
//! binomial convolution.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::binomial;
use crate::error::{Error, Result};
use crate::game::WeightedGame;

/// `counts[t]` is the number of coalitions of the scoped players with integer weight `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightProfile {
    counts: Vec<BigUint>,
    players: usize,
}

impl WeightProfile {
    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// Number of players the profile ranges over.
    pub fn players(&self) -> usize {
        self.players
    }

    pub fn get(&self, weight: u64) -> BigUint {
        self.counts
            .get(weight as usize)
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    /// Number of coalitions with weight in `lo..=hi`.
    pub fn range_sum(&self, lo: u64, hi: u64) -> BigUint {
        if lo > hi {
            return BigUint::zero();
        }
        let end = (hi as usize).min(self.counts.len().saturating_sub(1));
        if lo as usize > end {
            return BigUint::zero();
        }
        self.counts[lo as usize..=end].iter().sum()
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }
}

/// Class counts left after removing `exclude[k]` members of each class.
pub(crate) fn remaining_counts(
    game: &WeightedGame,
    exclude: Option<&[usize]>,
) -> Result<Vec<usize>> {
    let counts = game.counts();
    match exclude {
        None => Ok(counts),
        Some(ex) => {
            if ex.len() != counts.len() {
                return Err(Error::DimensionMismatch {
                    left: ex.len(),
                    right: counts.len(),
                });
            }
            counts
                .iter()
                .zip(ex)
                .map(|(&c, &e)| {
                    c.checked_sub(e).ok_or_else(|| {
                        Error::InvalidParameter(format!("cannot exclude {e} of {c} class members"))
                    })
                })
                .collect()
        }
    }
}

/// Remaining players grouped by integer weight; equal-weight classes convolve
/// as one binomial factor.
fn merged_classes(game: &WeightedGame, remaining: &[usize]) -> Vec<(u64, usize)> {
    let mut by_weight: BTreeMap<u64, usize> = BTreeMap::new();
    for (&w, &c) in game.int_weights().iter().zip(remaining) {
        *by_weight.entry(w).or_default() += c;
    }
    by_weight.into_iter().collect()
}

fn convolve(profile: &[BigUint], weight: u64, count: usize) -> Vec<BigUint> {
    if count == 0 {
        return profile.to_vec();
    }
    if weight == 0 {
        let factor = BigUint::one() << count;
        return profile.iter().map(|c| c * &factor).collect();
    }
    let binom = binomial::row(count as u64);
    let w = weight as usize;
    let mut out = vec![BigUint::zero(); profile.len() + count * w];
    for (t, base) in profile.iter().enumerate() {
        if base.is_zero() {
            continue;
        }
        for (j, c) in binom.iter().enumerate() {
            out[t + j * w] += base * c;
        }
    }
    out
}

/// Weight profile of the game's players minus the excluded class members.
pub fn weight_profile(game: &WeightedGame, exclude: Option<&[usize]>) -> Result<WeightProfile> {
    let remaining = remaining_counts(game, exclude)?;
    let mut counts = vec![BigUint::one()];
    for (w, c) in merged_classes(game, &remaining) {
        counts = convolve(&counts, w, c);
    }
    Ok(WeightProfile {
        counts,
        players: remaining.iter().sum(),
    })
}

/// Coalition counts resolved by weight and by size: `cells[t][s]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizedProfile {
    cells: Vec<BTreeMap<usize, BigUint>>,
    players: usize,
}

impl SizedProfile {
    pub fn players(&self) -> usize {
        self.players
    }

    /// Per-size counts of coalitions whose weight lies in `lo..=hi`.
    pub fn sizes_in_range(&self, lo: u64, hi: u64) -> BTreeMap<usize, BigUint> {
        let mut out: BTreeMap<usize, BigUint> = BTreeMap::new();
        if lo > hi || self.cells.is_empty() {
            return out;
        }
        let end = (hi as usize).min(self.cells.len() - 1);
        for cell in self.cells.iter().take(end + 1).skip(lo as usize) {
            for (&s, c) in cell {
                *out.entry(s).or_insert_with(BigUint::zero) += c;
            }
        }
        out
    }

    pub fn total(&self) -> BigUint {
        self.cells.iter().flat_map(|m| m.values()).sum()
    }
}

fn convolve_sized(
    cells: &[BTreeMap<usize, BigUint>],
    weight: u64,
    count: usize,
) -> Vec<BTreeMap<usize, BigUint>> {
    if count == 0 {
        return cells.to_vec();
    }
    let binom = binomial::row(count as u64);
    let w = weight as usize;
    let mut out = vec![BTreeMap::new(); cells.len() + count * w];
    for (t, cell) in cells.iter().enumerate() {
        for (&s, base) in cell {
            for (j, c) in binom.iter().enumerate() {
                *out[t + j * w].entry(s + j).or_insert_with(BigUint::zero) += base * c;
            }
        }
    }
    out
}

pub fn sized_profile(game: &WeightedGame, exclude: Option<&[usize]>) -> Result<SizedProfile> {
    let remaining = remaining_counts(game, exclude)?;
    let mut cells = vec![BTreeMap::from([(0usize, BigUint::one())])];
    for (w, c) in merged_classes(game, &remaining) {
        cells = convolve_sized(&cells, w, c);
    }
    Ok(SizedProfile {
        cells,
        players: remaining.iter().sum(),
    })
}
