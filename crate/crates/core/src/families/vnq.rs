//! `v_{n,q} = [⌈3nq⌉; 2×n, 1×n]` and its deviation curve `f_n(q)`.

use num_bigint::BigUint;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::analytic::{analytic_curves, AnalyticValues};
use super::{FamilyId, FamilyInstance};
use crate::binomial::choose;
use crate::counting::two_class_eta;
use crate::decimal::{Decimal, Precision};
use crate::error::{Error, Result};
use crate::game::{integer_game, WeightedGame};
use crate::numeric::{abs_diff, biguint_ratio, ceil_to_i64, int, ratio, Rational};
use crate::power::{IndexKind, PowerVector};

fn check_q(q: &Rational) -> Result<()> {
    if q.is_negative() || *q > Rational::one() {
        return Err(Error::InvalidParameter(format!(
            "q must lie in [0, 1], got {}",
            crate::numeric::render_fraction(q)
        )));
    }
    Ok(())
}

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    Ok(())
}

/// `max(1, ⌈3nq⌉)`.
pub fn vnq_quota(n: u64, q: &Rational) -> Result<u64> {
    check_n(n)?;
    check_q(q)?;
    let raw = ceil_to_i64(&(int(3 * n as i64) * q)).expect("quota fits in i64");
    Ok(raw.max(1) as u64)
}

fn game_at_quota(n: u64, quota: u64) -> WeightedGame {
    integer_game(quota, &[(2, n as usize), (1, n as usize)]).expect("valid two-class game")
}

pub fn vnq_game(n: u64, q: &Rational) -> Result<WeightedGame> {
    Ok(game_at_quota(n, vnq_quota(n, q)?))
}

/// `(η_weight2, η_weight1)` at integer quota `Q`.
fn etas(n: u64, quota: u64) -> (BigUint, BigUint) {
    let eta = two_class_eta(2, n, 1, n, quota);
    (eta.first, eta.second)
}

fn banzhaf_pair(n: u64, quota: u64) -> (Rational, Rational) {
    let (big, small) = etas(n, quota);
    let total = (&big + &small) * n;
    (biguint_ratio(&big, &total), biguint_ratio(&small, &total))
}

/// `f_n` at integer quota `Q`: `n|b₂ - 2/(3n)| + n|b₁ - 1/(3n)|`.
pub(crate) fn f_at_quota(n: u64, quota: u64) -> Rational {
    let (b2, b1) = banzhaf_pair(n, quota);
    let ni = n as i64;
    let nn = int(ni);
    &nn * abs_diff(&b2, &ratio(2, 3 * ni)) + &nn * abs_diff(&b1, &ratio(1, 3 * ni))
}

pub fn f_value(n: u64, q: &Rational) -> Result<Rational> {
    Ok(f_at_quota(n, vnq_quota(n, q)?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvePoint {
    pub q: Rational,
    pub n: u64,
    pub quota: u64,
    pub f: Rational,
    /// `f` at the dual quota `3n + 1 - Q`.
    pub f_dual: Rational,
    pub analytic: AnalyticValues,
}

impl CurvePoint {
    pub fn f_decimal(&self, precision: Precision) -> String {
        crate::numeric::render_decimal(&self.f, precision.digits as usize)
    }
}

pub fn vnq_instance(
    n: u64,
    q: &Rational,
    precision: Precision,
) -> Result<(FamilyInstance, PowerVector, CurvePoint)> {
    let quota = vnq_quota(n, q)?;
    let game = game_at_quota(n, quota);
    let instance = FamilyInstance::new(FamilyId::Vnq(n, q.clone()), game, q.clone());
    let (b2, b1) = banzhaf_pair(n, quota);
    let banzhaf = PowerVector::from_class_values(IndexKind::Banzhaf, &instance.game, &[b2, b1]);
    let point = curve_point(n, q, quota, precision)?;
    Ok((instance, banzhaf, point))
}

fn curve_point(n: u64, q: &Rational, quota: u64, precision: Precision) -> Result<CurvePoint> {
    Ok(CurvePoint {
        q: q.clone(),
        n,
        quota,
        f: f_at_quota(n, quota),
        f_dual: f_at_quota(n, 3 * n + 1 - quota),
        analytic: analytic_curves(q, precision)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FCurveReport {
    pub n: u64,
    /// Sorted by `q`.
    pub points: Vec<CurvePoint>,
    /// `f` is nondecreasing on `q >= 1/2` among points with distinct quotas.
    pub nondecreasing_upper_half: bool,
    /// `f(Q) == f(3n + 1 - Q)` at every point.
    pub duality_holds: bool,
    pub max_err_cubic: Decimal,
    pub max_err_entropy: Decimal,
}

pub fn f_curve(n: u64, grid: &[Rational], precision: Precision) -> Result<FCurveReport> {
    check_n(n)?;
    let mut grid = grid.to_vec();
    grid.sort();
    grid.dedup();
    let points = grid
        .par_iter()
        .map(|q| curve_point(n, q, vnq_quota(n, q)?, precision))
        .collect::<Result<Vec<_>>>()?;

    let half = ratio(1, 2);
    let mut last: Option<&CurvePoint> = None;
    let mut nondecreasing = true;
    for p in points.iter().filter(|p| p.q >= half) {
        if let Some(prev) = last {
            if prev.quota != p.quota && p.f < prev.f {
                nondecreasing = false;
            }
        }
        last = Some(p);
    }
    let duality_holds = points.iter().all(|p| p.f == p.f_dual);

    let scale = precision.working_scale();
    let mut max_err_cubic = Decimal::zero(scale);
    let mut max_err_entropy = Decimal::zero(scale);
    for p in &points {
        let f = Decimal::from_rational(&p.f, scale);
        let cubic = Decimal::from_rational(&(&p.f - &p.analytic.cand_cubic).abs(), scale);
        let entropy = f.sub(&p.analytic.cand_entropy).abs();
        max_err_cubic = max_err_cubic.max(cubic);
        max_err_entropy = max_err_entropy.max(entropy);
    }
    Ok(FCurveReport {
        n,
        points,
        nondecreasing_upper_half: nondecreasing,
        duality_holds,
        max_err_cubic,
        max_err_entropy,
    })
}

/// The written-out swing sums next to the counted ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedEtaReport {
    pub n: u64,
    pub q: Rational,
    pub quota: u64,
    /// `Σ_{i=0..n} C(n,i)·C(n-1, Q-2i-1)`
    pub printed_first: BigUint,
    /// `Σ_{i=0..n-1} C(n-1,i)·C(n+1, Q-2i-1)`
    pub printed_last: BigUint,
    /// Swing count of a weight-2 player.
    pub dp_first: BigUint,
    /// Swing count of a weight-1 player.
    pub dp_last: BigUint,
}

impl PrintedEtaReport {
    pub fn agrees(&self) -> bool {
        self.printed_first == self.dp_first && self.printed_last == self.dp_last
    }
}

fn summand(n: i64, quota: i64, i: i64) -> BigUint {
    choose(n, i) * choose(n - 1, quota - 2 * i - 1)
}

pub fn vnq_eta_printed(n: u64, q: &Rational) -> Result<PrintedEtaReport> {
    let quota = vnq_quota(n, q)?;
    let (ni, qi) = (n as i64, quota as i64);
    let printed_first = (0..=ni).map(|i| summand(ni, qi, i)).sum();
    let printed_last = (0..ni)
        .map(|i| choose(ni - 1, i) * choose(ni + 1, qi - 2 * i - 1))
        .sum();
    let (dp_first, dp_last) = etas(n, quota);
    Ok(PrintedEtaReport {
        n,
        q: q.clone(),
        quota,
        printed_first,
        printed_last,
        dp_first,
        dp_last,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArgmaxReport {
    pub n: u64,
    pub q: Rational,
    pub quota: u64,
    /// Smallest maximizing index of `C(n,i)·C(n-1, Q-2i-1)`.
    pub i_star: u64,
    pub n_times_g: Decimal,
    /// `|i* - n·g(q)| / n`
    pub gap: Decimal,
    /// `round(q·n)`
    pub naive: u64,
    pub naive_is_argmax: bool,
}

pub fn argmax_summand(n: u64, q: &Rational, precision: Precision) -> Result<ArgmaxReport> {
    if n < 2 {
        return Err(Error::InvalidParameter("n must be at least 2".into()));
    }
    let quota = vnq_quota(n, q)?;
    let (ni, qi) = (n as i64, quota as i64);
    let mut best = (0i64, BigUint::zero());
    let mut values = Vec::with_capacity(n as usize + 1);
    for i in 0..=ni {
        let s = summand(ni, qi, i);
        if s > best.1 {
            best = (i, s.clone());
        }
        values.push(s);
    }
    let i_star = best.0 as u64;
    let analytic = analytic_curves(q, precision)?;
    let scale = precision.working_scale();
    let n_times_g = analytic.g.mul_int(ni);
    let gap = Decimal::from_integer(best.0, scale)
        .sub(&n_times_g)
        .abs()
        .div_int(ni);
    let naive = (q * int(ni)).round().to_u64().expect("nonnegative");
    let naive_is_argmax = values[naive as usize] == best.1;
    Ok(ArgmaxReport {
        n,
        q: q.clone(),
        quota,
        i_star,
        n_times_g,
        gap,
        naive,
        naive_is_argmax,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::brute_force_indices;

    #[test]
    fn quota_rounding() {
        assert_eq!(vnq_quota(2, &ratio(1, 2)).unwrap(), 3);
        assert_eq!(vnq_quota(5, &int(0)).unwrap(), 1);
        assert_eq!(vnq_quota(5, &int(1)).unwrap(), 15);
        assert_eq!(vnq_quota(4, &ratio(1, 2)).unwrap(), 6);
        assert!(vnq_quota(0, &int(1)).is_err());
        assert!(vnq_quota(3, &ratio(11, 10)).is_err());
    }

    #[test]
    fn unanimity_gives_one_third() {
        for n in [1, 2, 7, 30] {
            assert_eq!(f_value(n, &int(1)).unwrap(), ratio(1, 3));
        }
    }

    #[test]
    fn small_game_matches_brute_force() {
        let (instance, bzi, point) = vnq_instance(2, &ratio(1, 2), Precision::new(12)).unwrap();
        assert_eq!(instance.game.int_weights(), &[2, 1]);
        let brute = brute_force_indices(&instance.game).unwrap();
        assert_eq!(bzi.values, brute.banzhaf.values);
        assert_eq!(point.f, point.f_dual);
    }

    #[test]
    fn printed_sums_at_n2() {
        let r = vnq_eta_printed(2, &ratio(1, 2)).unwrap();
        assert_eq!(r.printed_first, BigUint::from(2u32));
        assert_eq!(r.dp_first, BigUint::from(4u32));
        assert_eq!(r.printed_last, BigUint::from(4u32));
        assert_eq!(r.dp_last, BigUint::from(2u32));
        assert!(!r.agrees());
    }

    #[test]
    fn argmax_follows_g() {
        let p = Precision::new(20);
        let r = argmax_summand(500, &ratio(4, 5), p).unwrap();
        assert_eq!(r.i_star, 424);
        assert_eq!(r.naive, 400);
        assert!(!r.naive_is_argmax);
        let r = argmax_summand(500, &ratio(1, 2), p).unwrap();
        assert_eq!(r.i_star, 250);
        // regression baseline
        let r = argmax_summand(500, &ratio(7, 10), p).unwrap();
        assert_eq!(r.i_star, 368);
        assert!(r.gap < Decimal::from_rational(&ratio(1, 500), r.gap.scale()));
    }

    #[test]
    fn curve_summary() {
        let grid: Vec<Rational> = (0..=10).map(|k| ratio(k, 10)).collect();
        let r = f_curve(12, &grid, Precision::new(12)).unwrap();
        assert_eq!(r.points.len(), 11);
        assert!(r.duality_holds);
        // at small n the minimum sits to the right of q = 1/2
        assert!(!r.nondecreasing_upper_half);
        assert!(r.points[6].f < r.points[5].f);
        assert_eq!(r.points.last().unwrap().f, ratio(1, 3));
    }
}
