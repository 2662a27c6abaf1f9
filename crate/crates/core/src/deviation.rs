//! Relations between the L1 distance of a power vector to the weights and
//! the relative deviations `x_i / w_i`.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::{int, pow, Rational};
use crate::weights::{l1_distance, linf_distance, WeightVector};

/// Deviation data for one group of players sharing the same weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupDeviation {
    pub weight: Rational,
    pub members: Vec<usize>,
    /// `α_i = w(S_i)`, the total weight of the group.
    pub alpha: Rational,
    /// `x_i / w_i`, absent when the weight is zero.
    pub ratio: Option<Rational>,
    pub lower: Option<Rational>,
    pub upper: Option<Rational>,
    pub holds: bool,
}

/// Distances between a power vector and weights plus the per-group ratio check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeviationReport {
    pub l1: Rational,
    pub linf: Rational,
    pub groups: Vec<GroupDeviation>,
}

impl DeviationReport {
    pub fn all_hold(&self) -> bool {
        self.groups.iter().all(|g| g.holds)
    }

    /// `||x - w||_∞ <= ||x - w||_1 / 2`, valid when both vectors are normalized.
    pub fn half_l1_holds(&self) -> bool {
        &self.linf * int(2) <= self.l1
    }
}

/// Groups player indices by equal weight, in order of first appearance.
fn weight_groups(w: &[Rational]) -> Vec<(Rational, Vec<usize>)> {
    let mut groups: Vec<(Rational, Vec<usize>)> = Vec::new();
    for (i, wi) in w.iter().enumerate() {
        match groups.iter_mut().find(|(weight, _)| weight == wi) {
            Some((_, members)) => members.push(i),
            None => groups.push((wi.clone(), vec![i])),
        }
    }
    groups
}

/// Checks `1 - ε/α_i <= x_i/w_i <= 1 + ε/α_i` with `ε = ||x - w||_1` for every
/// weight group. Requires `x` to be constant on each group of equal weights.
pub fn ratio_bounds(x: &[Rational], w: &WeightVector) -> Result<DeviationReport> {
    let l1 = l1_distance(x, w.entries())?;
    let linf = linf_distance(x, w.entries())?;
    if let Some(neg) = x.iter().position(|v| v.is_negative()) {
        return Err(Error::HypothesisViolated(format!("x[{neg}] is negative")));
    }
    let mut groups = Vec::new();
    for (weight, members) in weight_groups(w.entries()) {
        let value = &x[members[0]];
        if let Some(&j) = members.iter().find(|&&j| &x[j] != value) {
            return Err(Error::HypothesisViolated(format!(
                "players {} and {} have equal weight but different values",
                members[0], j
            )));
        }
        let alpha = &weight * int(members.len() as i64);
        let (ratio, lower, upper, holds) = if weight.is_zero() {
            (None, None, None, true)
        } else {
            let ratio = value / &weight;
            let spread = &l1 / &alpha;
            let lower = Rational::one() - &spread;
            let upper = Rational::one() + &spread;
            let holds = lower <= ratio && ratio <= upper;
            (Some(ratio), Some(lower), Some(upper), holds)
        };
        groups.push(GroupDeviation {
            weight,
            members,
            alpha,
            ratio,
            lower,
            upper,
            holds,
        });
    }
    Ok(DeviationReport { l1, linf, groups })
}

/// Bounds on the cross ratio `(x_i/w_i)/(x_j/w_j)` and on `|x_i/w_i - x_j/w_j|`
/// from two relative deviations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinedBounds {
    pub lower: Rational,
    pub upper: Rational,
    pub additive: Rational,
}

pub fn combine_ratio_bounds(eps_i: &Rational, eps_j: &Rational) -> Result<CombinedBounds> {
    let one = Rational::one();
    for eps in [eps_i, eps_j] {
        if eps.is_negative() || eps >= &one {
            return Err(Error::InvalidParameter(format!(
                "relative deviation {eps} outside [0, 1)"
            )));
        }
    }
    Ok(CombinedBounds {
        lower: (&one - eps_i) / (&one + eps_j),
        upper: (&one + eps_i) / (&one - eps_j),
        additive: eps_i + eps_j,
    })
}

/// Checks a concrete `(x, w)` pair against [`combine_ratio_bounds`]: both
/// the interval for the cross ratio and the additive bound.
///
/// The interval `[(1-ε_i)/(1+ε_j), (1+ε_i)/(1-ε_j)]` bounds `(w_j/w_i)·(x_i/x_j)`;
/// its reciprocal `(w_i/w_j)·(x_j/x_i)` can fall outside it.
pub fn combined_bounds_hold(
    x_i: &Rational,
    w_i: &Rational,
    x_j: &Rational,
    w_j: &Rational,
    bounds: &CombinedBounds,
) -> bool {
    let cross = (w_j / w_i) * (x_i / x_j);
    let gap = (x_i / w_i - x_j / w_j).abs();
    bounds.lower <= cross && cross <= bounds.upper && gap <= bounds.additive
}

/// Outcome of the L1 bound from relative deviations on a large subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetL1Report {
    pub l1: Rational,
    pub bound: Rational,
    pub holds: bool,
}

/// Verifies `||x - w||_1 <= ε̂ + ε̃ + ε` given `w(N) <= 1`, `w(N∖S) <= ε̂`,
/// `x(N∖S) <= ε̃` and `1 - ε <= x_i/w_i <= 1 + ε` on `S`.
pub fn l1_from_relative(
    x: &[Rational],
    w: &WeightVector,
    subset: &[usize],
    eps_hat: &Rational,
    eps_tilde: &Rational,
    eps: &Rational,
) -> Result<SubsetL1Report> {
    let n = w.len();
    let l1 = l1_distance(x, w.entries())?;
    if let Some(&bad) = subset.iter().find(|&&i| i >= n) {
        return Err(Error::PlayerOutOfRange { player: bad, n });
    }
    let mut in_subset = vec![false; n];
    for &i in subset {
        in_subset[i] = true;
    }
    if w.total() > Rational::one() {
        return Err(Error::HypothesisViolated("w(N) exceeds 1".into()));
    }
    let outside = || (0..n).filter(|&i| !in_subset[i]);
    let w_out: Rational = outside().map(|i| &w.entries()[i]).sum();
    if &w_out > eps_hat {
        return Err(Error::HypothesisViolated(format!(
            "w(N\\S) = {w_out} exceeds ε̂ = {eps_hat}"
        )));
    }
    let x_out: Rational = outside().map(|i| &x[i]).sum();
    if &x_out > eps_tilde {
        return Err(Error::HypothesisViolated(format!(
            "x(N\\S) = {x_out} exceeds ε̃ = {eps_tilde}"
        )));
    }
    let one = Rational::one();
    for &i in subset {
        let wi = &w.entries()[i];
        // multiplied form, which also covers w_i = 0
        let low = (&one - eps) * wi;
        let high = (&one + eps) * wi;
        if x[i] < low || x[i] > high {
            return Err(Error::HypothesisViolated(format!(
                "x[{i}]/w[{i}] outside [1-ε, 1+ε] with ε = {eps}"
            )));
        }
    }
    let bound = eps_hat + eps_tilde + eps;
    Ok(SubsetL1Report {
        holds: l1 <= bound,
        l1,
        bound,
    })
}

/// `2n³/2.6ⁿ` and `1/n`, compared exactly with 2.6 = 13/5.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecayCheck {
    pub n: u32,
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
}

pub fn cubic_over_exponential(n: u32) -> DecayCheck {
    let nn = int(n as i64);
    let lhs = int(2) * pow(&nn, 3) / pow(&crate::numeric::two_point_six(), n);
    let rhs = nn.recip();
    DecayCheck {
        n,
        holds: lhs <= rhs,
        lhs,
        rhs,
    }
}
