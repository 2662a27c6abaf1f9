//! Exact voting-power analysis for weighted games.
//!
//! All weights, quotas and index values are exact rationals over big
//! integers. The crate computes the Penrose-Banzhaf and Shapley-Shubik indices
//! by class-wise generating functions, the nucleolus by sequential exact
//! linear programming, and the distance between a power vector and the
//! relative weights together with the bounds relating them.

pub mod binomial;
pub mod counting;
pub mod decimal;
pub mod deviation;
pub mod error;
pub mod families;
pub mod game;
pub mod nucleolus;
pub mod numeric;
pub mod power;
pub mod weights;

pub use error::{Error, Result};
pub use game::{dual_game, game_from_weights, integer_game, make_game, WeightClass, WeightedGame};
pub use numeric::Rational;
pub use power::{IndexKind, PowerVector};
pub use weights::WeightVector;
