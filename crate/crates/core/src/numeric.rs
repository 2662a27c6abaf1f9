//! Exact rational helpers shared by every module.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number used for all weights, quotas and index values.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_biguint(n: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n.clone()))
}

pub fn biguint_ratio(num: &BigUint, den: &BigUint) -> Rational {
    Rational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

/// `base^exp` for a nonnegative integer exponent.
pub fn pow(base: &Rational, exp: u32) -> Rational {
    num_traits::pow(base.clone(), exp as usize)
}

/// 2.6 written as the exact fraction 13/5.
pub fn two_point_six() -> Rational {
    ratio(13, 5)
}

pub fn abs_diff(a: &Rational, b: &Rational) -> Rational {
    (a - b).abs()
}

pub fn ceil_to_i64(r: &Rational) -> Option<i64> {
    r.ceil().to_integer().to_i64()
}

/// Renders `r` with exactly `places` digits after the point, rounding half away from zero.
pub fn render_decimal(r: &Rational, places: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), places);
    let scaled = r * Rational::from_integer(scale);
    let magnitude = scaled.abs();
    let (q, rem) = magnitude.numer().div_rem(magnitude.denom());
    let twice = rem * 2;
    let rounded = if &twice >= magnitude.denom() {
        q + 1
    } else {
        q
    };
    let digits = rounded.to_string();
    let negative = r.is_negative() && !rounded.is_zero();
    let body = if places == 0 {
        digits
    } else {
        let padded = format!("{:0>width$}", digits, width = places + 1);
        let (whole, frac) = padded.split_at(padded.len() - places);
        format!("{whole}.{frac}")
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Lowest-terms `p/q` rendering; integers print without a denominator.
pub fn render_fraction(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_rendering_rounds_half_away() {
        assert_eq!(render_decimal(&ratio(1, 6), 4), "0.1667");
        assert_eq!(render_decimal(&ratio(-1, 8), 2), "-0.13");
        assert_eq!(render_decimal(&ratio(1, 3), 0), "0");
        assert_eq!(render_decimal(&ratio(7, 2), 0), "4");
        assert_eq!(render_decimal(&ratio(1, 1000), 2), "0.00");
        assert_eq!(render_decimal(&int(2), 3), "2.000");
    }

    #[test]
    fn fraction_rendering_is_lowest_terms() {
        assert_eq!(render_fraction(&ratio(2, 4)), "1/2");
        assert_eq!(render_fraction(&ratio(6, -3)), "-2");
        assert_eq!(render_fraction(&ratio(-3, 9)), "-1/3");
    }
}
