//! The JSON game document and exact number parsing.

use std::path::Path;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use voting_power::numeric::render_fraction;
use voting_power::{make_game, Rational, WeightClass, WeightedGame};

use crate::error::{CliError, CliResult};

/// `{"quota": "1/2", "weights": ["0.42", ...]}` or
/// `{"quota": "1/2", "classes": [["2/5", 3], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameDocument {
    pub quota: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<(String, usize)>>,
}

/// Parses `p/q`, an integer, or a decimal such as `0.42` into an exact rational.
pub fn parse_number(text: &str) -> CliResult<Rational> {
    let s = text.trim();
    let bad = || CliError::Input(format!("not a number: {text:?}"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = parse_integer(p.trim()).ok_or_else(bad)?;
        let q: BigInt = parse_integer(q.trim()).ok_or_else(bad)?;
        if !q.is_positive() {
            return Err(CliError::Input(format!(
                "denominator must be positive in {text:?}"
            )));
        }
        return Ok(Rational::new(p, q));
    }
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    let all_digits = |t: &str| t.chars().all(|c| c.is_ascii_digit());
    if whole.len() + frac.len() == 0 || !all_digits(whole) || !all_digits(frac) {
        return Err(bad());
    }
    let digits: BigInt = format!("0{whole}{frac}").parse().map_err(|_| bad())?;
    let denom = num_traits::pow(BigInt::from(10), frac.len());
    let value = Rational::new(digits, denom);
    Ok(if negative { -value } else { value })
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let digits = s
        .strip_prefix('-')
        .or_else(|| s.strip_prefix('+'))
        .unwrap_or(s);
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl GameDocument {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::io(format!("cannot read {}", path.display()), e))?;
        Ok(serde_json::from_str(&text)?)
    }

    pub fn to_game(&self) -> CliResult<WeightedGame> {
        let quota = parse_number(&self.quota)?;
        let classes = match (&self.weights, &self.classes) {
            (Some(weights), None) => weights
                .iter()
                .map(|w| Ok(WeightClass::new(parse_number(w)?, 1)))
                .collect::<CliResult<Vec<_>>>()?,
            (None, Some(classes)) => classes
                .iter()
                .map(|(w, c)| Ok(WeightClass::new(parse_number(w)?, *c)))
                .collect::<CliResult<Vec<_>>>()?,
            _ => {
                return Err(CliError::Input(
                    "a game document needs exactly one of \"weights\" or \"classes\"".into(),
                ))
            }
        };
        Ok(make_game(quota, classes)?)
    }

    /// Canonical classes form of `game`.
    pub fn from_game(game: &WeightedGame) -> Self {
        GameDocument {
            quota: render_fraction(game.quota()),
            weights: None,
            classes: Some(
                game.classes()
                    .iter()
                    .map(|c| (render_fraction(&c.weight), c.count))
                    .collect(),
            ),
        }
    }
}

/// `start:stop:step` with exact endpoints; every point must lie in `[0, 1]`.
pub fn parse_grid(text: &str) -> CliResult<Vec<Rational>> {
    let parts: Vec<&str> = text.split(':').collect();
    let [start, stop, step] = parts.as_slice() else {
        return Err(CliError::Input(format!(
            "grid must be start:stop:step, got {text:?}"
        )));
    };
    let (start, stop, step) = (
        parse_number(start)?,
        parse_number(stop)?,
        parse_number(step)?,
    );
    if !step.is_positive() {
        return Err(CliError::Input("grid step must be positive".into()));
    }
    if start.is_negative() || stop > Rational::one() || start > stop {
        return Err(CliError::Input(
            "grid must satisfy 0 <= start <= stop <= 1".into(),
        ));
    }
    let count = ((&stop - &start) / &step).floor();
    if count > Rational::from_integer(100_000.into()) {
        return Err(CliError::Input("grid has more than 100000 points".into()));
    }
    let mut points = Vec::new();
    let mut q = start;
    while q <= stop {
        points.push(q.clone());
        q += &step;
    }
    Ok(points)
}
