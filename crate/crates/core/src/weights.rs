//! Weight vectors, distances between them and the weight statistics
//! (maximum weight, span, Laakso-Taagepera index).

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::decimal::{Decimal, Precision};
use crate::error::{Error, Result};
use crate::numeric::{int, Rational};

/// A vector of nonnegative exact weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    entries: Vec<Rational>,
}

impl WeightVector {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if let Some(bad) = entries.iter().find(|w| w.is_negative()) {
            return Err(Error::NegativeWeight(bad.to_string()));
        }
        Ok(WeightVector { entries })
    }

    pub fn from_integers(entries: &[i64]) -> Result<Self> {
        WeightVector::new(entries.iter().map(|&w| int(w)).collect())
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> Rational {
        self.entries.iter().sum()
    }

    /// Weight of the players selected by `members`.
    pub fn mass<'a>(&self, members: impl IntoIterator<Item = &'a usize>) -> Rational {
        members.into_iter().map(|&i| &self.entries[i]).sum()
    }

    pub fn is_normalized(&self) -> bool {
        self.total().is_one()
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.entries
    }
}

/// Scales `w` so its entries sum to one.
pub fn normalize(w: &WeightVector) -> Result<WeightVector> {
    let total = w.total();
    if total.is_zero() {
        return Err(Error::DegenerateWeights);
    }
    Ok(WeightVector {
        entries: w.entries.iter().map(|x| x / &total).collect(),
    })
}

/// The norms used to measure the distance between a power vector and weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Norm {
    L1,
    Linf,
    /// `p`-norm for a rational `p >= 1`.
    Lp(Rational),
}

/// A norm value: exact for `L1`/`Linf` and for `Lp` with `p = 1`, decimal otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormValue {
    Exact(Rational),
    Approx(Decimal),
}

impl NormValue {
    pub fn to_decimal(&self, scale: u32) -> Decimal {
        match self {
            NormValue::Exact(r) => Decimal::from_rational(r, scale),
            NormValue::Approx(d) => d.clone(),
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            NormValue::Exact(r) => Some(r),
            NormValue::Approx(_) => None,
        }
    }
}

fn check_dims(x: &[Rational], y: &[Rational]) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(())
}

pub fn l1_distance(x: &[Rational], y: &[Rational]) -> Result<Rational> {
    check_dims(x, y)?;
    Ok(x.iter().zip(y).map(|(a, b)| (a - b).abs()).sum())
}

pub fn linf_distance(x: &[Rational], y: &[Rational]) -> Result<Rational> {
    check_dims(x, y)?;
    Ok(x.iter()
        .zip(y)
        .map(|(a, b)| (a - b).abs())
        .max()
        .unwrap_or_else(Rational::zero))
}

/// Norm of a single vector.
pub fn norm(x: &[Rational], norm: &Norm, precision: Precision) -> Result<NormValue> {
    let zeros = vec![Rational::zero(); x.len()];
    distance(x, &zeros, norm, precision)
}

/// `d(x, y) = ||x - y||` under the chosen norm.
pub fn distance(
    x: &[Rational],
    y: &[Rational],
    norm: &Norm,
    precision: Precision,
) -> Result<NormValue> {
    match norm {
        Norm::L1 => l1_distance(x, y).map(NormValue::Exact),
        Norm::Linf => linf_distance(x, y).map(NormValue::Exact),
        Norm::Lp(p) => {
            check_dims(x, y)?;
            if p < &int(1) {
                return Err(Error::InvalidParameter(format!(
                    "p-norm needs p >= 1, got {p}"
                )));
            }
            if p.is_one() {
                return l1_distance(x, y).map(NormValue::Exact);
            }
            let num = p
                .numer()
                .to_u32()
                .ok_or_else(|| Error::InvalidParameter(format!("p = {p} is too large")))?;
            let den = p
                .denom()
                .to_u32()
                .ok_or_else(|| Error::InvalidParameter(format!("p = {p} is too large")))?;
            let scale = precision.working_scale();
            // |d|^(num/den) = (|d|^num)^(1/den)
            let mut sum = Decimal::zero(scale);
            for (a, b) in x.iter().zip(y) {
                let d = (a - b).abs();
                let powered = crate::numeric::pow(&d, num);
                let term = Decimal::from_rational(&powered, scale)
                    .nth_root(den)
                    .expect("nonnegative radicand");
                sum = sum.add(&term);
            }
            let value = sum.powi(den).nth_root(num).expect("nonnegative radicand");
            Ok(NormValue::Approx(value))
        }
    }
}

/// Maximum weight, span, Laakso-Taagepera index and the fractional part of `1/Δ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightStats {
    pub delta: Rational,
    pub lambda: Rational,
    pub laakso: Rational,
    pub alpha: Rational,
}

fn require_normalized(w: &WeightVector) -> Result<()> {
    if w.is_empty() || !w.is_normalized() {
        return Err(Error::InvalidParameter(
            "weights must be normalized to sum 1".into(),
        ));
    }
    Ok(())
}

pub fn weight_stats(w: &WeightVector) -> Result<WeightStats> {
    require_normalized(w)?;
    let delta = w.entries.iter().max().cloned().expect("nonempty");
    let min_positive = w
        .entries
        .iter()
        .filter(|x| x.is_positive())
        .min()
        .cloned()
        .expect("normalized vector has a positive entry");
    let lambda = &delta / &min_positive;
    let squares: Rational = w.entries.iter().map(|x| x * x).sum();
    let laakso = squares.recip();
    let inverse = delta.recip();
    let alpha = &inverse - inverse.floor();
    Ok(WeightStats {
        delta,
        lambda,
        laakso,
        alpha,
    })
}

/// The chain `1/Δ <= 1/(Δ(1-α(1-α)Δ)) <= L(w) <= 1/(Δ² + (1-Δ)²/(n-1)) <= 1/Δ²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaaksoBoundReport {
    /// The five terms of the chain, left to right.
    pub terms: [Rational; 5],
    /// Truth of each of the four inequalities between consecutive terms.
    pub holds: [bool; 4],
    /// Right term minus left term for each inequality.
    pub slack: [Rational; 4],
}

impl LaaksoBoundReport {
    pub fn all_hold(&self) -> bool {
        self.holds.iter().all(|&h| h)
    }
}

pub fn check_lt_bounds(w: &WeightVector) -> Result<LaaksoBoundReport> {
    let stats = weight_stats(w)?;
    let n = w.len();
    let one = Rational::one();
    let delta = &stats.delta;
    let alpha = &stats.alpha;
    let simple_lower = delta.recip();
    let refined_lower = (delta * (&one - alpha * (&one - alpha) * delta)).recip();
    let simple_upper = (delta * delta).recip();
    let refined_upper = if n == 1 {
        simple_upper.clone()
    } else {
        let rest = &one - delta;
        (delta * delta + &rest * &rest / int(n as i64 - 1)).recip()
    };
    let terms = [
        simple_lower,
        refined_lower,
        stats.laakso.clone(),
        refined_upper,
        simple_upper,
    ];
    let mut holds = [false; 4];
    let mut slack: [Rational; 4] = Default::default();
    for k in 0..4 {
        holds[k] = terms[k] <= terms[k + 1];
        slack[k] = &terms[k + 1] - &terms[k];
    }
    Ok(LaaksoBoundReport {
        terms,
        holds,
        slack,
    })
}
