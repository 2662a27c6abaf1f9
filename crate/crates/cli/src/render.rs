//! Exact values rendered as a fraction plus a fixed-precision decimal.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;
use voting_power::decimal::Decimal;
use voting_power::numeric::{render_decimal, render_fraction};
use voting_power::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Value {
    pub fraction: String,
    pub decimal: String,
}

pub fn value(r: &Rational, places: u32) -> Value {
    Value {
        fraction: render_fraction(r),
        decimal: render_decimal(r, places as usize),
    }
}

pub fn decimal(d: &Decimal, places: u32) -> String {
    d.render(places as usize)
}

/// Shortest exact decimal when the denominator is `2^a·5^b`, else `p/q`.
pub fn exact(r: &Rational) -> String {
    let mut den = r.denom().clone();
    let (two, five) = (BigInt::from(2), BigInt::from(5));
    let (mut twos, mut fives) = (0usize, 0usize);
    while den.is_multiple_of(&two) {
        den /= &two;
        twos += 1;
    }
    while den.is_multiple_of(&five) {
        den /= &five;
        fives += 1;
    }
    if !den.is_one() {
        return render_fraction(r);
    }
    render_decimal(r, twos.max(fives))
}
