//! The parametric game families, the `v_{n,q}` curve experiment and the
//! empirical scanners for the two open bounds.

mod analytic;
mod prop1;
mod prop2;
mod random;
mod scan;
mod vnq;

pub use analytic::{analytic_curves, g_bracket, radicand, AnalyticValues, GBracketReport};
pub use prop1::{prop1_game, prop1_instance, Prop1Report};
pub use prop2::{prop2_game, prop2_instance, prop2_small_eta_printed, Prop2Report};
pub use random::{random_game, random_game_stream, WeightDist};
pub use scan::{
    conjecture_bzi_scan, conjecture_ssi_scan, shapley_shubik_exact, BziSample, BziScanConfig,
    BziScanReport, SsiSample, SsiScanConfig, SsiScanReport,
};
pub use vnq::{
    argmax_summand, f_curve, f_value, vnq_eta_printed, vnq_game, vnq_instance, vnq_quota,
    ArgmaxReport, CurvePoint, FCurveReport, PrintedEtaReport,
};

use std::fmt;

use crate::game::WeightedGame;
use crate::numeric::Rational;
use crate::weights::WeightVector;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyId {
    /// `[n³+n²; 2n², 1×2n³]`
    Prop1(u64),
    /// `[3n³+n²; 2n²×(2n+1), 1×2n³]`
    Prop2(u64),
    /// `[⌈3nq⌉; 2×n, 1×n]`
    Vnq(u64, Rational),
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::Prop1(n) => write!(f, "prop1(n={n})"),
            FamilyId::Prop2(n) => write!(f, "prop2(n={n})"),
            FamilyId::Vnq(n, q) => {
                write!(f, "vnq(n={n}, q={})", crate::numeric::render_fraction(q))
            }
        }
    }
}

/// A family member with its relative weights and relative quota.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInstance {
    pub id: FamilyId,
    pub game: WeightedGame,
    pub relative_weights: WeightVector,
    pub relative_quota: Rational,
}

impl FamilyInstance {
    fn new(id: FamilyId, game: WeightedGame, relative_quota: Rational) -> Self {
        FamilyInstance {
            id,
            relative_weights: game.relative_weights(),
            game,
            relative_quota,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    AtLeast,
    AtMost,
    Equal,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::AtLeast => ">=",
            Relation::AtMost => "<=",
            Relation::Equal => "==",
        }
    }
}

/// One predicted inequality with its computed value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: String,
    pub value: Rational,
    pub relation: Relation,
    pub bound: Rational,
    pub holds: bool,
    /// Whether the family's parameters are in the range where the bound is claimed.
    pub asserted: bool,
}

impl BoundCheck {
    pub fn new(
        name: impl Into<String>,
        value: Rational,
        relation: Relation,
        bound: Rational,
        asserted: bool,
    ) -> Self {
        let holds = match relation {
            Relation::AtLeast => value >= bound,
            Relation::AtMost => value <= bound,
            Relation::Equal => value == bound,
        };
        BoundCheck {
            name: name.into(),
            value,
            relation,
            bound,
            holds,
            asserted,
        }
    }

    /// Fails only when the bound is claimed and does not hold.
    pub fn passes(&self) -> bool {
        self.holds || !self.asserted
    }
}

pub fn all_pass(checks: &[BoundCheck]) -> bool {
    checks.iter().all(BoundCheck::passes)
}
