#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use voting_power::families::random_game_stream;
use voting_power::numeric::{int, ratio};
use voting_power::{integer_game, make_game, Rational, WeightClass, WeightedGame};

/// Integer game with up to `n_max` players in classes of size 1 to 3, weights
/// in `0..=w_max` (not all zero) and a uniformly drawn quota.
pub fn class_game(rng: &mut ChaCha8Rng, n_max: usize, w_max: u64) -> WeightedGame {
    let n = rng.gen_range(1..=n_max);
    let mut classes = Vec::new();
    let mut left = n;
    while left > 0 {
        let count = rng.gen_range(1..=left.min(3));
        classes.push((rng.gen_range(0..=w_max), count));
        left -= count;
    }
    if classes.iter().all(|&(w, _)| w == 0) {
        classes[0].0 = 1;
    }
    let total: u64 = classes.iter().map(|&(w, c)| w * c as u64).sum();
    let quota = rng.gen_range(1..=total);
    integer_game(quota, &classes).unwrap()
}

/// The seeded oracle suite: `count` games with at most 12 players.
pub fn oracle_suite(count: u64, seed: u64) -> Vec<WeightedGame> {
    (0..count)
        .map(|k| class_game(&mut random_game_stream(seed, k), 12, 20))
        .collect()
}

/// Random relative quota `q ∈ (0, 1)` with denominator 100 and positive
/// weights, one class per player.
pub fn positive_game(rng: &mut ChaCha8Rng, n_max: usize, w_max: u64) -> (Rational, WeightedGame) {
    let n = rng.gen_range(1..=n_max);
    let weights: Vec<Rational> = (0..n)
        .map(|_| int(rng.gen_range(1..=w_max) as i64))
        .collect();
    let total: Rational = weights.iter().sum();
    let q = ratio(rng.gen_range(1..100), 100);
    let classes = weights
        .into_iter()
        .map(|w| WeightClass::new(w, 1))
        .collect();
    (q.clone(), make_game(total * q, classes).unwrap())
}

/// Random normalized vector of length `n` with entries in multiples of `1/den`
/// scaled; zeros allowed but not all zero.
pub fn random_simplex_point(rng: &mut ChaCha8Rng, n: usize, zeros: bool) -> Vec<Rational> {
    let lo = if zeros { 0 } else { 1 };
    let mut raw: Vec<i64> = (0..n).map(|_| rng.gen_range(lo..=30)).collect();
    if raw.iter().all(|&v| v == 0) {
        raw[0] = 1;
    }
    let total: i64 = raw.iter().sum();
    raw.into_iter().map(|v| ratio(v, total)).collect()
}
