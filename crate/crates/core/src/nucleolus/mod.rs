//! Exact nucleolus by sequential linear programming.
//!
//! The nucleolus is symmetric in players of equal weight, so the programs run
//! over one variable per weight class and one row per coalition *type* (how
//! many members of each class it contains). Each round minimizes the largest
//! excess over the free types, solved through its dual; types with a positive
//! dual multiplier are tight in every optimal solution and get fixed at that
//! excess. Rounds repeat until the fixed types pin down a single allocation.

mod simplex;

pub use simplex::{Constraint, LinearProgram, LpOutcome, Sense};

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::game::WeightedGame;
use crate::numeric::{int, Rational};
use crate::power::{IndexKind, PowerVector};

pub const NUCLEOLUS_CAP: usize = 12;

/// Excesses `v(S) - x(S)` of every proper nonempty coalition, sorted nonincreasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcessVector(pub Vec<Rational>);

impl ExcessVector {
    pub fn max_excess(&self) -> Option<&Rational> {
        self.0.first()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn check_size(game: &WeightedGame) -> Result<()> {
    if game.n() > NUCLEOLUS_CAP {
        return Err(Error::TooLarge {
            what: "nucleolus",
            n: game.n(),
            cap: NUCLEOLUS_CAP,
        });
    }
    Ok(())
}

pub fn excess_vector(game: &WeightedGame, x: &[Rational]) -> Result<ExcessVector> {
    check_size(game)?;
    let n = game.n();
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            left: x.len(),
            right: n,
        });
    }
    let total: Rational = x.iter().sum();
    if !total.is_one() {
        return Err(Error::InvalidParameter(format!(
            "allocation sums to {total}, not 1"
        )));
    }
    let weights = game.player_int_weights();
    let quota = game.int_quota();
    let full = (1usize << n) - 1;
    let mut excesses = Vec::with_capacity(full.saturating_sub(1));
    for mask in 1..full {
        let mut weight = 0u64;
        let mut payoff = Rational::zero();
        for i in 0..n {
            if mask >> i & 1 == 1 {
                weight += weights[i];
                payoff += &x[i];
            }
        }
        let value = if weight >= quota {
            Rational::one()
        } else {
            Rational::zero()
        };
        excesses.push(value - payoff);
    }
    excesses.sort_unstable_by(|a, b| b.cmp(a));
    Ok(ExcessVector(excesses))
}

/// Lexicographic comparison of two sorted excess vectors.
pub fn lex_cmp(a: &ExcessVector, b: &ExcessVector) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.0.cmp(&b.0))
}

/// A coalition type: `members[c]` players of class `c`.
#[derive(Debug, Clone)]
struct CoalitionType {
    members: Vec<Rational>,
    value: Rational,
}

fn coalition_types(game: &WeightedGame) -> Vec<CoalitionType> {
    let counts = game.counts();
    let mut current = vec![0usize; counts.len()];
    let mut out = Vec::new();
    loop {
        // odometer increment
        let mut pos = 0;
        while pos < counts.len() && current[pos] == counts[pos] {
            current[pos] = 0;
            pos += 1;
        }
        if pos == counts.len() {
            break;
        }
        current[pos] += 1;
        if current == counts {
            continue;
        }
        out.push(CoalitionType {
            members: current.iter().map(|&k| int(k as i64)).collect(),
            value: if game.is_winning_counts(&current) {
                Rational::one()
            } else {
                Rational::zero()
            },
        });
    }
    out
}

/// Incrementally maintained row-echelon basis of linear equations `a·x = b`.
#[derive(Debug, Clone, Default)]
struct EquationBasis {
    /// `(pivot column, coefficients, rhs)`, each row normalized at its pivot.
    rows: Vec<(usize, Vec<Rational>, Rational)>,
}

impl EquationBasis {
    fn reduce(&self, coeffs: &[Rational], rhs: &Rational) -> (Vec<Rational>, Rational) {
        let mut a = coeffs.to_vec();
        let mut b = rhs.clone();
        for (p, row, row_rhs) in &self.rows {
            if a[*p].is_zero() {
                continue;
            }
            let f = a[*p].clone();
            for (x, y) in a.iter_mut().zip(row) {
                *x -= &f * y;
            }
            b -= &f * row_rhs;
        }
        (a, b)
    }

    fn spans(&self, coeffs: &[Rational]) -> bool {
        self.reduce(coeffs, &Rational::zero())
            .0
            .iter()
            .all(Zero::is_zero)
    }

    /// Adds the equation if independent; returns whether the rank grew.
    fn insert(&mut self, coeffs: &[Rational], rhs: &Rational) -> bool {
        let (mut a, mut b) = self.reduce(coeffs, rhs);
        let Some(p) = a.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = a[p].recip();
        for x in a.iter_mut() {
            *x *= &inv;
        }
        b *= &inv;
        // keep earlier rows reduced in the new pivot column
        for (_, row, row_rhs) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&a) {
                *x -= &f * y;
            }
            *row_rhs -= &f * &b;
        }
        self.rows.push((p, a, b));
        true
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// The unique solution once the basis has full rank.
    fn solve(&self, dim: usize) -> Vec<Rational> {
        assert_eq!(self.rank(), dim);
        let mut x = vec![Rational::zero(); dim];
        for (p, _, b) in &self.rows {
            x[*p] = b.clone();
        }
        x
    }
}

/// One round of the sequential program: minimize `t` subject to
/// `e(S, x) <= t` on free types, fixed excesses on fixed types, efficiency and
/// the class lower bounds. Returns the optimal `t` and the dual multiplier of
/// every free type.
fn minimize_max_excess(
    counts: &[Rational],
    lower: Option<&[Rational]>,
    free: &[&CoalitionType],
    fixed: &[(&CoalitionType, Rational)],
) -> Result<(Rational, Vec<Rational>)> {
    let classes = counts.len();
    let floor = |coeffs: &[Rational]| -> Rational {
        match lower {
            Some(l) => coeffs.iter().zip(l).map(|(a, b)| a * b).sum(),
            None => Rational::zero(),
        }
    };
    // Dual columns: u_S >= 0 for free types, then (μ⁺, μ⁻) for every fixed
    // type and for the efficiency row.
    let mut columns: Vec<(Vec<Rational>, Rational, bool)> = Vec::new();
    for s in free {
        columns.push((s.members.clone(), &s.value - floor(&s.members), true));
    }
    let mut equalities: Vec<(Vec<Rational>, Rational)> = fixed
        .iter()
        .map(|(s, t)| (s.members.clone(), &s.value - t - floor(&s.members)))
        .collect();
    equalities.push((counts.to_vec(), Rational::one() - floor(counts)));
    for (coeffs, rhs) in &equalities {
        columns.push((coeffs.clone(), rhs.clone(), false));
        columns.push((coeffs.iter().map(|a| -a).collect(), -rhs, false));
    }

    let objective = columns.iter().map(|(_, b, _)| b.clone()).collect();
    let class_sense = if lower.is_some() {
        Sense::Le
    } else {
        Sense::Eq
    };
    let mut constraints: Vec<Constraint> = (0..classes)
        .map(|c| Constraint {
            coeffs: columns.iter().map(|(a, _, _)| a[c].clone()).collect(),
            sense: class_sense,
            rhs: Rational::zero(),
        })
        .collect();
    constraints.push(Constraint {
        coeffs: columns
            .iter()
            .map(|(_, _, is_free)| {
                if *is_free {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect(),
        sense: Sense::Eq,
        rhs: Rational::one(),
    });
    let lp = LinearProgram {
        objective,
        constraints,
    };
    match lp.solve() {
        LpOutcome::Optimal { value, solution } => {
            let duals = solution[..free.len()].to_vec();
            Ok((value, duals))
        }
        other => Err(Error::Lp(format!("round program ended {other:?}"))),
    }
}

/// The nucleolus over the imputation set. When the imputation set is empty
/// (several players win alone) the lower bounds are dropped and the
/// prenucleolus is returned.
pub fn nucleolus(game: &WeightedGame) -> Result<PowerVector> {
    check_size(game)?;
    let classes = game.num_classes();
    let counts: Vec<Rational> = game.counts().iter().map(|&c| int(c as i64)).collect();
    let singles: Vec<Rational> = game
        .int_weights()
        .iter()
        .map(|&w| {
            if w >= game.int_quota() {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect();
    let floor_total: Rational = counts.iter().zip(&singles).map(|(a, b)| a * b).sum();
    let lower = if floor_total <= Rational::one() {
        Some(singles.as_slice())
    } else {
        None
    };
    if floor_total.is_one() {
        // the imputation set is a single point
        return Ok(PowerVector::from_class_values(
            IndexKind::Nucleolus,
            game,
            &singles,
        ));
    }

    let types = coalition_types(game);
    let mut basis = EquationBasis::default();
    basis.insert(&counts, &Rational::one());
    let mut fixed: Vec<(&CoalitionType, Rational)> = Vec::new();
    let mut free: Vec<&CoalitionType> = types.iter().filter(|t| !basis.spans(&t.members)).collect();

    while basis.rank() < classes {
        if free.is_empty() {
            return Err(Error::Lp(
                "free coalitions exhausted before a unique point".into(),
            ));
        }
        let (level, duals) = minimize_max_excess(&counts, lower, &free, &fixed)?;
        let mut still_free = Vec::with_capacity(free.len());
        for (s, u) in free.into_iter().zip(duals) {
            if u.is_positive() {
                // x(S) = v(S) - level
                basis.insert(&s.members, &(&s.value - &level));
                fixed.push((s, level.clone()));
            } else {
                still_free.push(s);
            }
        }
        free = still_free
            .into_iter()
            .filter(|t| !basis.spans(&t.members))
            .collect();
    }
    let per_class = basis.solve(classes);
    if per_class.iter().any(|v| v.is_negative()) {
        return Err(Error::Lp("negative nucleolus component".into()));
    }
    Ok(PowerVector::from_class_values(
        IndexKind::Nucleolus,
        game,
        &per_class,
    ))
}

/// Whether `x` lies in the imputation set: efficient and individually rational.
pub fn is_imputation(game: &WeightedGame, x: &[Rational]) -> bool {
    let weights = game.player_int_weights();
    let total: Rational = x.iter().sum();
    total.is_one()
        && x.iter().zip(&weights).all(|(xi, &w)| {
            let floor = if w >= game.int_quota() { 1 } else { 0 };
            xi >= &Rational::from_integer(BigInt::from(floor))
        })
}
