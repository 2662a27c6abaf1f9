use num_traits::{One, Signed};

use crate::game::WeightedGame;
use crate::numeric::Rational;

/// Which solution concept produced a [`PowerVector`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndexKind {
    Banzhaf,
    ShapleyShubik,
    Nucleolus,
    RawWeights,
}

impl IndexKind {
    pub fn name(self) -> &'static str {
        match self {
            IndexKind::Banzhaf => "banzhaf",
            IndexKind::ShapleyShubik => "shapley-shubik",
            IndexKind::Nucleolus => "nucleolus",
            IndexKind::RawWeights => "raw-weights",
        }
    }
}

/// Exact per-player values of a power index, in class-major player order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerVector {
    pub kind: IndexKind,
    pub values: Vec<Rational>,
}

impl PowerVector {
    pub fn new(kind: IndexKind, values: Vec<Rational>) -> Self {
        PowerVector { kind, values }
    }

    /// Expands one value per class into one value per player.
    pub fn from_class_values(kind: IndexKind, game: &WeightedGame, per_class: &[Rational]) -> Self {
        let values = game
            .classes()
            .iter()
            .zip(per_class)
            .flat_map(|(c, v)| std::iter::repeat(v.clone()).take(c.count))
            .collect();
        PowerVector { kind, values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> Rational {
        self.values.iter().sum()
    }

    /// Nonnegative and summing to exactly one.
    pub fn is_normalized(&self) -> bool {
        self.values.iter().all(|v| !v.is_negative()) && self.sum().is_one()
    }

    /// Equal values for all members of each weight class of `game`.
    pub fn is_class_symmetric(&self, game: &WeightedGame) -> bool {
        let mut start = 0;
        for c in game.classes() {
            let block = &self.values[start..start + c.count];
            if block.iter().any(|v| v != &block[0]) {
                return false;
            }
            start += c.count;
        }
        true
    }

    /// First value of each class.
    pub fn class_values(&self, game: &WeightedGame) -> Vec<Rational> {
        let mut start = 0;
        let mut out = Vec::with_capacity(game.num_classes());
        for c in game.classes() {
            out.push(self.values[start].clone());
            start += c.count;
        }
        out
    }
}
