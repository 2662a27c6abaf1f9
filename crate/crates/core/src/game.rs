//! Weighted games `[q; w]` stored as weight classes with multiplicities.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::numeric::{int, Rational};
use crate::weights::WeightVector;

/// Largest integerized total weight accepted; the counting tables are dense in it.
pub const MAX_INTEGER_WEIGHT: u64 = 50_000_000;

/// A group of players sharing one weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightClass {
    pub weight: Rational,
    pub count: usize,
}

impl WeightClass {
    pub fn new(weight: Rational, count: usize) -> Self {
        WeightClass { weight, count }
    }
}

/// A weighted game. Players are numbered class-major: all members of the
/// first class, then the second class, and so on.
///
/// At construction the weights are scaled by the least common denominator of
/// the weights, so counting runs on integer weights with the integer quota
/// `Q = ⌈q·D⌉`; a coalition wins iff its integer weight reaches `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGame {
    quota: Rational,
    classes: Vec<WeightClass>,
    int_weights: Vec<u64>,
    int_quota: u64,
    int_total: u64,
    n: usize,
}

fn lcm_of_denominators<'a>(values: impl Iterator<Item = &'a Rational>) -> BigInt {
    values.fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Builds `[quota; classes]`, validating that the empty coalition loses and
/// the grand coalition wins.
pub fn make_game(quota: Rational, classes: Vec<WeightClass>) -> Result<WeightedGame> {
    if classes.is_empty() {
        return Err(Error::InvalidParameter(
            "a game needs at least one player".into(),
        ));
    }
    if classes.iter().any(|c| c.count == 0) {
        return Err(Error::EmptyClass);
    }
    if let Some(c) = classes.iter().find(|c| c.weight.is_negative()) {
        return Err(Error::NegativeWeight(c.weight.to_string()));
    }
    if !quota.is_positive() {
        return Err(Error::NonPositiveQuota);
    }
    let total: Rational = classes
        .iter()
        .map(|c| &c.weight * int(c.count as i64))
        .sum();
    if quota > total {
        return Err(Error::QuotaExceedsTotal);
    }
    let scale = Rational::from_integer(lcm_of_denominators(classes.iter().map(|c| &c.weight)));
    let too_fine = || {
        Error::InvalidParameter(format!(
            "integerized total weight exceeds {MAX_INTEGER_WEIGHT}"
        ))
    };
    let int_weights = classes
        .iter()
        .map(|c| {
            (&c.weight * &scale)
                .to_integer()
                .to_u64()
                .ok_or_else(too_fine)
        })
        .collect::<Result<Vec<u64>>>()?;
    let int_quota = (&quota * &scale)
        .ceil()
        .to_integer()
        .to_u64()
        .ok_or_else(too_fine)?;
    let mut int_total: u64 = 0;
    for (w, c) in int_weights.iter().zip(&classes) {
        int_total = w
            .checked_mul(c.count as u64)
            .and_then(|x| x.checked_add(int_total))
            .filter(|&t| t <= MAX_INTEGER_WEIGHT)
            .ok_or_else(too_fine)?;
    }
    let n = classes.iter().map(|c| c.count).sum();
    Ok(WeightedGame {
        quota,
        classes,
        int_weights,
        int_quota,
        int_total,
        n,
    })
}

/// Integer game `[quota; w_1×c_1, ...]`.
pub fn integer_game(quota: u64, classes: &[(u64, usize)]) -> Result<WeightedGame> {
    make_game(
        int(quota as i64),
        classes
            .iter()
            .map(|&(w, c)| WeightClass::new(int(w as i64), c))
            .collect(),
    )
}

/// One class per listed weight, in the listed order.
pub fn game_from_weights(quota: Rational, weights: &[Rational]) -> Result<WeightedGame> {
    make_game(
        quota,
        weights
            .iter()
            .map(|w| WeightClass::new(w.clone(), 1))
            .collect(),
    )
}

impl WeightedGame {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn quota(&self) -> &Rational {
        &self.quota
    }

    pub fn classes(&self) -> &[WeightClass] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn counts(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.count).collect()
    }

    /// Integer weight of each class.
    pub fn int_weights(&self) -> &[u64] {
        &self.int_weights
    }

    /// The effective integer quota `Q`.
    pub fn int_quota(&self) -> u64 {
        self.int_quota
    }

    pub fn int_total(&self) -> u64 {
        self.int_total
    }

    pub fn total_weight(&self) -> Rational {
        self.classes
            .iter()
            .map(|c| &c.weight * int(c.count as i64))
            .sum()
    }

    /// `q / w(N)`.
    pub fn relative_quota(&self) -> Rational {
        &self.quota / self.total_weight()
    }

    /// Class index of every player, in player order.
    pub fn player_classes(&self) -> Vec<usize> {
        self.classes
            .iter()
            .enumerate()
            .flat_map(|(k, c)| std::iter::repeat(k).take(c.count))
            .collect()
    }

    pub fn class_of(&self, player: usize) -> Result<usize> {
        let mut start = 0;
        for (k, c) in self.classes.iter().enumerate() {
            if player < start + c.count {
                return Ok(k);
            }
            start += c.count;
        }
        Err(Error::PlayerOutOfRange { player, n: self.n })
    }

    /// Integer weight of every player.
    pub fn player_int_weights(&self) -> Vec<u64> {
        self.player_classes()
            .into_iter()
            .map(|k| self.int_weights[k])
            .collect()
    }

    /// Normalized weights `w / w(N)`, one entry per player.
    pub fn relative_weights(&self) -> WeightVector {
        let total = self.total_weight();
        let entries = self
            .classes
            .iter()
            .flat_map(|c| std::iter::repeat(&c.weight / &total).take(c.count))
            .collect();
        WeightVector::new(entries).expect("weights validated at construction")
    }

    /// `v(S)`: does the coalition reach the quota?
    pub fn is_winning(&self, coalition: &[usize]) -> Result<bool> {
        let mut weight: u64 = 0;
        let mut seen = vec![false; self.n];
        for &player in coalition {
            let class = self.class_of(player)?;
            if !std::mem::replace(&mut seen[player], true) {
                weight += self.int_weights[class];
            }
        }
        Ok(weight >= self.int_quota)
    }

    /// Winning test for a class-count vector: `members[k]` players of class `k`.
    pub fn is_winning_counts(&self, members: &[usize]) -> bool {
        self.weight_of_counts(members) >= self.int_quota
    }

    pub fn weight_of_counts(&self, members: &[usize]) -> u64 {
        members
            .iter()
            .zip(&self.int_weights)
            .map(|(&m, &w)| m as u64 * w)
            .sum()
    }

    /// The same game with integer weights and integer quota.
    pub fn integerized(&self) -> WeightedGame {
        let classes: Vec<(u64, usize)> = self
            .int_weights
            .iter()
            .zip(&self.classes)
            .map(|(&w, c)| (w, c.count))
            .collect();
        integer_game(self.int_quota, &classes).expect("integer form of a valid game is valid")
    }

    pub fn is_integer(&self) -> bool {
        self.quota.is_integer() && self.classes.iter().all(|c| c.weight.is_integer())
    }
}

/// `[w(N) - Q + 1; w]` on the integer representation. Banzhaf swing counts are
/// invariant under this map.
pub fn dual_game(g: &WeightedGame) -> WeightedGame {
    let int_form = g.integerized();
    let quota = int_form.int_total - int_form.int_quota + 1;
    let classes: Vec<(u64, usize)> = int_form
        .int_weights
        .iter()
        .zip(&int_form.classes)
        .map(|(&w, c)| (w, c.count))
        .collect();
    integer_game(quota, &classes).expect("dual quota lies in [1, w(N)]")
}
