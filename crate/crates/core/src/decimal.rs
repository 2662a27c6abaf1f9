//! Fixed-point decimal arithmetic on big integers.
//!
//! A [`Decimal`] is `mantissa / 10^scale`. Every operation keeps the scale of
//! its operands and truncates toward zero, so results carry an error of a few
//! units in the last place. Callers work with [`Precision::working_scale`],
//! which adds guard digits on top of the requested precision.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::numeric::Rational;

const GUARD_DIGITS: u32 = 12;

/// Requested number of significant decimal places.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Precision {
    pub digits: u32,
}

impl Default for Precision {
    fn default() -> Self {
        Precision { digits: 50 }
    }
}

impl Precision {
    pub fn new(digits: u32) -> Self {
        Precision { digits }
    }

    pub fn working_scale(self) -> u32 {
        self.digits + GUARD_DIGITS
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decimal {
    mantissa: BigInt,
    scale: u32,
}

fn ten_pow(exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), exp as usize)
}

impl Decimal {
    pub fn zero(scale: u32) -> Self {
        Decimal {
            mantissa: BigInt::zero(),
            scale,
        }
    }

    pub fn from_integer(n: i64, scale: u32) -> Self {
        Decimal {
            mantissa: BigInt::from(n) * ten_pow(scale),
            scale,
        }
    }

    /// Nearest representable value (ties away from zero).
    pub fn from_rational(r: &Rational, scale: u32) -> Self {
        let scaled = r * Rational::from_integer(ten_pow(scale));
        let (q, rem) = scaled.numer().div_rem(scaled.denom());
        let twice = rem.abs() * 2;
        let mantissa = if twice >= *scaled.denom() {
            if scaled.is_negative() {
                q - 1
            } else {
                q + 1
            }
        } else {
            q
        };
        Decimal { mantissa, scale }
    }

    /// Exact rational value of this decimal.
    pub fn to_rational(&self) -> Rational {
        Rational::new(self.mantissa.clone(), ten_pow(self.scale))
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.mantissa.is_positive()
    }

    pub fn abs(&self) -> Self {
        Decimal {
            mantissa: self.mantissa.abs(),
            scale: self.scale,
        }
    }

    fn check(&self, other: &Decimal) {
        assert_eq!(self.scale, other.scale, "decimal scale mismatch");
    }

    pub fn add(&self, other: &Decimal) -> Decimal {
        self.check(other);
        Decimal {
            mantissa: &self.mantissa + &other.mantissa,
            scale: self.scale,
        }
    }

    pub fn sub(&self, other: &Decimal) -> Decimal {
        self.check(other);
        Decimal {
            mantissa: &self.mantissa - &other.mantissa,
            scale: self.scale,
        }
    }

    pub fn mul(&self, other: &Decimal) -> Decimal {
        self.check(other);
        Decimal {
            mantissa: (&self.mantissa * &other.mantissa) / ten_pow(self.scale),
            scale: self.scale,
        }
    }

    pub fn div(&self, other: &Decimal) -> Decimal {
        self.check(other);
        assert!(!other.mantissa.is_zero(), "decimal division by zero");
        Decimal {
            mantissa: (&self.mantissa * ten_pow(self.scale)) / &other.mantissa,
            scale: self.scale,
        }
    }

    pub fn mul_int(&self, k: i64) -> Decimal {
        Decimal {
            mantissa: &self.mantissa * BigInt::from(k),
            scale: self.scale,
        }
    }

    pub fn div_int(&self, k: i64) -> Decimal {
        Decimal {
            mantissa: &self.mantissa / BigInt::from(k),
            scale: self.scale,
        }
    }

    pub fn powi(&self, exp: u32) -> Decimal {
        let mut acc = Decimal::from_integer(1, self.scale);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Real `k`-th root. Negative inputs are allowed for odd `k`.
    pub fn nth_root(&self, k: u32) -> Option<Decimal> {
        assert!(k >= 1);
        if self.is_negative() && k % 2 == 0 {
            return None;
        }
        let widened = self.mantissa.abs() * ten_pow(self.scale * (k - 1));
        let root = widened.nth_root(k);
        let mantissa = if self.is_negative() { -root } else { root };
        Some(Decimal {
            mantissa,
            scale: self.scale,
        })
    }

    pub fn sqrt(&self) -> Option<Decimal> {
        self.nth_root(2)
    }

    pub fn cbrt(&self) -> Decimal {
        self.nth_root(3).expect("odd roots always exist")
    }

    /// `atanh(z)` for |z| < 1 by its power series; fast for |z| <= 1/3.
    fn atanh_series(z: &Decimal) -> Decimal {
        let z2 = z.mul(z);
        let mut power = z.clone();
        let mut sum = Decimal::zero(z.scale);
        let mut k: i64 = 1;
        while !power.mantissa.is_zero() {
            sum = sum.add(&power.div_int(k));
            power = power.mul(&z2);
            k += 2;
        }
        sum
    }

    pub fn ln2(scale: u32) -> Decimal {
        let third = Decimal::from_integer(1, scale).div_int(3);
        Decimal::atanh_series(&third).mul_int(2)
    }

    /// Natural logarithm; `None` for nonpositive input.
    pub fn ln(&self) -> Option<Decimal> {
        if !self.is_positive() {
            return None;
        }
        let one = Decimal::from_integer(1, self.scale);
        let two = Decimal::from_integer(2, self.scale);
        let mut y = self.clone();
        let mut shifts: i64 = 0;
        while y >= two {
            y = y.div_int(2);
            shifts += 1;
        }
        while y < one {
            y = y.mul_int(2);
            shifts -= 1;
        }
        let z = y.sub(&one).div(&y.add(&one));
        let ln_y = Decimal::atanh_series(&z).mul_int(2);
        Some(ln_y.add(&Decimal::ln2(self.scale).mul_int(shifts)))
    }

    pub fn log2(&self) -> Option<Decimal> {
        let ln = self.ln()?;
        Some(ln.div(&Decimal::ln2(self.scale)))
    }

    /// Renders with `places` digits after the point, rounding half away from zero.
    pub fn render(&self, places: usize) -> String {
        crate::numeric::render_decimal(&self.to_rational(), places)
    }

    pub fn to_f64(&self) -> f64 {
        self.render(20).parse().unwrap_or(f64::NAN)
    }

    /// `|self - other|` is within `10^-digits`.
    pub fn approx_eq(&self, other: &Decimal, digits: u32) -> bool {
        self.check(other);
        let diff = self.sub(other).abs().to_rational();
        diff <= Rational::new(BigInt::one(), ten_pow(digits))
    }

    pub fn sign(&self) -> Sign {
        self.mantissa.sign()
    }
}

impl PartialOrd for Decimal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Decimal {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.scale == other.scale {
            self.mantissa.cmp(&other.mantissa)
        } else {
            self.to_rational().cmp(&other.to_rational())
        }
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(self.scale as usize))
    }
}
