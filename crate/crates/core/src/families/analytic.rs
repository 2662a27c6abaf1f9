//! The closed-form companions of the f-curve: `g`, `g̃`, binary entropy and
//! the two candidate fits.

use num_traits::{One, Signed, Zero};

use crate::decimal::{Decimal, Precision};
use crate::error::{Error, Result};
use crate::numeric::{int, ratio, Rational};

/// `972q⁴ - 1944q³ + 864q² + 108q + 6`, exactly.
pub fn radicand(q: &Rational) -> Rational {
    let q2 = q * q;
    let q3 = &q2 * q;
    let q4 = &q3 * q;
    int(972) * q4 - int(1944) * q3 + int(864) * q2 + int(108) * q + int(6)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalyticValues {
    pub q: Rational,
    pub radicand: Rational,
    pub g_tilde: Decimal,
    pub g: Decimal,
    /// Binary entropy `H(q)` in bits.
    pub entropy: Decimal,
    /// `(8/3)|q - 1/2|³`
    pub cand_cubic: Rational,
    /// `1/3 - H(q)/3`
    pub cand_entropy: Decimal,
}

/// `-p log₂ p`, zero at `p = 0`.
fn entropy_term(p: &Rational, scale: u32) -> Decimal {
    if p.is_zero() {
        return Decimal::zero(scale);
    }
    let d = Decimal::from_rational(p, scale);
    let log = d.log2().expect("positive argument");
    d.mul(&log).mul_int(-1)
}

pub fn binary_entropy(q: &Rational, precision: Precision) -> Decimal {
    let scale = precision.working_scale();
    entropy_term(q, scale).add(&entropy_term(&(Rational::one() - q), scale))
}

pub fn analytic_curves(q: &Rational, precision: Precision) -> Result<AnalyticValues> {
    if q.is_negative() || *q > Rational::one() {
        return Err(Error::InvalidParameter(format!(
            "q must lie in [0, 1], got {}",
            crate::numeric::render_fraction(q)
        )));
    }
    let scale = precision.working_scale();
    let rad = radicand(q);
    if rad.is_negative() {
        return Err(Error::InvalidParameter("negative radicand".into()));
    }
    let q2 = q * q;
    let poly = int(-216) * &q2 * q + int(324) * &q2 - int(108) * q;
    let root = Decimal::from_rational(&rad, scale)
        .sqrt()
        .expect("nonnegative radicand");
    let g_tilde = Decimal::from_rational(&poly, scale).add(&root.mul_int(6));
    let cube_root = g_tilde.cbrt();
    if cube_root.is_zero() {
        return Err(Error::InvalidParameter("g~(q) vanishes".into()));
    }
    let coeff = int(-3) * &q2 + int(3) * q + ratio(1, 2);
    let g = cube_root
        .div_int(12)
        .sub(&Decimal::from_rational(&coeff, scale).div(&cube_root))
        .add(&Decimal::from_rational(q, scale));
    let entropy = binary_entropy(q, precision);
    let dev = (q - ratio(1, 2)).abs();
    let cand_cubic = ratio(8, 3) * &dev * &dev * &dev;
    let cand_entropy = Decimal::from_rational(&ratio(1, 3), scale).sub(&entropy.div_int(3));
    Ok(AnalyticValues {
        q: q.clone(),
        radicand: rad,
        g_tilde,
        g,
        entropy,
        cand_cubic,
        cand_entropy,
    })
}

/// `q ≤ g(q) ≤ 1.07·q` over the grid points in `[1/2, 1]`, and the symmetry
/// defect `|g(q) + g(1-q) - 1|` over all grid points (reported only).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GBracketReport {
    pub checked: usize,
    /// First point with `g(q) < q`.
    pub lower_violation: Option<Rational>,
    /// First point with `g(q) > 1.07·q`.
    pub upper_violation: Option<Rational>,
    /// Largest `g(q)/q` and where it occurs.
    pub max_ratio: Option<(Rational, Decimal)>,
    pub max_symmetry_defect: Decimal,
}

impl GBracketReport {
    pub fn holds(&self) -> bool {
        self.lower_violation.is_none() && self.upper_violation.is_none()
    }
}

pub fn g_bracket(grid: &[Rational], precision: Precision) -> Result<GBracketReport> {
    let scale = precision.working_scale();
    let half = ratio(1, 2);
    let upper = ratio(107, 100);
    let mut report = GBracketReport {
        checked: 0,
        lower_violation: None,
        upper_violation: None,
        max_ratio: None,
        max_symmetry_defect: Decimal::zero(scale),
    };
    for q in grid {
        let g = analytic_curves(q, precision)?.g;
        let mirror = analytic_curves(&(Rational::one() - q), precision)?.g;
        let defect = g.add(&mirror).sub(&Decimal::from_integer(1, scale)).abs();
        if defect > report.max_symmetry_defect {
            report.max_symmetry_defect = defect;
        }
        if *q < half {
            continue;
        }
        report.checked += 1;
        if report.lower_violation.is_none() && g < Decimal::from_rational(q, scale) {
            report.lower_violation = Some(q.clone());
        }
        if report.upper_violation.is_none() && g > Decimal::from_rational(&(&upper * q), scale) {
            report.upper_violation = Some(q.clone());
        }
        let r = g.div(&Decimal::from_rational(q, scale));
        if report.max_ratio.as_ref().map_or(true, |(_, m)| r > *m) {
            report.max_ratio = Some((q.clone(), r));
        }
    }
    Ok(report)
}
