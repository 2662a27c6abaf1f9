//! Dense two-phase simplex over exact rationals with Bland's anti-cycling rule.

use num_traits::{One, Signed, Zero};

use crate::numeric::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub sense: Sense,
    pub rhs: Rational,
}

/// `maximize objective·z` subject to the constraints and `z >= 0`.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal {
        value: Rational,
        solution: Vec<Rational>,
    },
    Infeasible,
    Unbounded,
}

struct Tableau {
    /// `rows[r]` holds the constraint coefficients followed by the right-hand side.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, r: usize) -> &Rational {
        &self.rows[r][self.width]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.rows[row][col].recip();
        for v in self.rows[row].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = self.rows[row].clone();
        for (r, other) in self.rows.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (v, p) in other.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        self.basis[row] = col;
    }

    /// Reduced profits `c_j - c_B B⁻¹ A_j` for the objective `cost`.
    fn reduced(&self, cost: &[Rational], allowed: usize) -> Vec<Rational> {
        (0..allowed)
            .map(|j| {
                let mut value = cost[j].clone();
                for (r, &b) in self.basis.iter().enumerate() {
                    let a = &self.rows[r][j];
                    if !a.is_zero() && !cost[b].is_zero() {
                        value -= &cost[b] * a;
                    }
                }
                value
            })
            .collect()
    }

    /// Runs primal simplex on `cost` over the first `allowed` columns.
    /// Returns `false` if the objective is unbounded.
    ///
    /// Entering columns follow the largest reduced profit; after a run of
    /// degenerate pivots the choice switches to Bland's lowest-index rule until
    /// the objective moves again, which rules out cycling.
    fn optimize(&mut self, cost: &[Rational], allowed: usize) -> bool {
        const DEGENERATE_RUN: usize = 20;
        let mut reduced = self.reduced(cost, allowed);
        let mut degenerate = 0;
        loop {
            let col = if degenerate >= DEGENERATE_RUN {
                (0..allowed).find(|&j| reduced[j].is_positive())
            } else {
                (0..allowed)
                    .filter(|&j| reduced[j].is_positive())
                    .max_by(|&a, &b| reduced[a].cmp(&reduced[b]).then(b.cmp(&a)))
            };
            let Some(col) = col else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(r) / a;
                let better = match &best {
                    None => true,
                    Some((br, bv)) => {
                        ratio < *bv || (ratio == *bv && self.basis[r] < self.basis[*br])
                    }
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            let Some((row, step)) = best else {
                return false;
            };
            if step.is_zero() {
                degenerate += 1;
            } else {
                degenerate = 0;
            }
            self.pivot(row, col);
            let factor = reduced[col].clone();
            for (j, v) in reduced.iter_mut().enumerate() {
                let a = &self.rows[row][j];
                if !a.is_zero() {
                    *v -= &factor * a;
                }
            }
        }
    }

    fn objective_value(&self, cost: &[Rational]) -> Rational {
        self.basis
            .iter()
            .enumerate()
            .map(|(r, &b)| &cost[b] * self.rhs(r))
            .sum()
    }
}

impl LinearProgram {
    pub fn solve(&self) -> LpOutcome {
        let vars = self.objective.len();
        let m = self.constraints.len();
        // column layout: structural | slack/surplus | artificial | rhs
        let mut slack_cols = 0;
        let mut art_cols = 0;
        for c in &self.constraints {
            let sense = effective_sense(c);
            if sense != Sense::Eq {
                slack_cols += 1;
            }
            if sense != Sense::Le {
                art_cols += 1;
            }
        }
        let width = vars + slack_cols + art_cols;
        let art_start = vars + slack_cols;
        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let (mut next_slack, mut next_art) = (vars, art_start);
        for c in &self.constraints {
            assert_eq!(c.coeffs.len(), vars, "constraint width");
            let flip = c.rhs.is_negative();
            let sense = effective_sense(c);
            let mut row = vec![Rational::zero(); width + 1];
            for (j, a) in c.coeffs.iter().enumerate() {
                row[j] = if flip { -a } else { a.clone() };
            }
            row[width] = c.rhs.abs();
            match sense {
                Sense::Le => {
                    row[next_slack] = Rational::one();
                    basis.push(next_slack);
                    next_slack += 1;
                }
                Sense::Ge => {
                    row[next_slack] = -Rational::one();
                    next_slack += 1;
                    row[next_art] = Rational::one();
                    basis.push(next_art);
                    next_art += 1;
                }
                Sense::Eq => {
                    row[next_art] = Rational::one();
                    basis.push(next_art);
                    next_art += 1;
                }
            }
            rows.push(row);
        }
        let mut tableau = Tableau { rows, basis, width };

        if art_cols > 0 {
            let mut phase_one = vec![Rational::zero(); width];
            for v in phase_one.iter_mut().skip(art_start) {
                *v = -Rational::one();
            }
            tableau.optimize(&phase_one, width);
            if tableau.objective_value(&phase_one).is_negative() {
                return LpOutcome::Infeasible;
            }
            // drive artificial variables (now at zero) out of the basis
            let mut r = 0;
            while r < tableau.rows.len() {
                if tableau.basis[r] >= art_start {
                    match (0..art_start).find(|&j| !tableau.rows[r][j].is_zero()) {
                        Some(col) => tableau.pivot(r, col),
                        None => {
                            // redundant equality
                            tableau.rows.remove(r);
                            tableau.basis.remove(r);
                            continue;
                        }
                    }
                }
                r += 1;
            }
        }

        let mut cost = vec![Rational::zero(); width];
        cost[..vars].clone_from_slice(&self.objective);
        if !tableau.optimize(&cost, art_start) {
            return LpOutcome::Unbounded;
        }
        let mut solution = vec![Rational::zero(); vars];
        for (r, &b) in tableau.basis.iter().enumerate() {
            if b < vars {
                solution[b] = tableau.rhs(r).clone();
            }
        }
        LpOutcome::Optimal {
            value: tableau.objective_value(&cost),
            solution,
        }
    }
}

/// Sense after flipping rows with a negative right-hand side.
fn effective_sense(c: &Constraint) -> Sense {
    match (c.sense, c.rhs.is_negative()) {
        (Sense::Le, true) => Sense::Ge,
        (Sense::Ge, true) => Sense::Le,
        (s, _) => s,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, ratio};

    fn row(coeffs: &[i64], sense: Sense, rhs: Rational) -> Constraint {
        Constraint {
            coeffs: coeffs.iter().map(|&c| int(c)).collect(),
            sense,
            rhs,
        }
    }

    #[test]
    fn textbook_maximization() {
        // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> (2, 6), 36
        let lp = LinearProgram {
            objective: vec![int(3), int(5)],
            constraints: vec![
                row(&[1, 0], Sense::Le, int(4)),
                row(&[0, 2], Sense::Le, int(12)),
                row(&[3, 2], Sense::Le, int(18)),
            ],
        };
        assert_eq!(
            lp.solve(),
            LpOutcome::Optimal {
                value: int(36),
                solution: vec![int(2), int(6)]
            }
        );
    }

    #[test]
    fn equality_and_ge_rows() {
        // min x + y (max -x - y), x + 2y >= 3, x - y = 0 -> x = y = 1
        let lp = LinearProgram {
            objective: vec![int(-1), int(-1)],
            constraints: vec![
                row(&[1, 2], Sense::Ge, int(3)),
                row(&[1, -1], Sense::Eq, int(0)),
            ],
        };
        assert_eq!(
            lp.solve(),
            LpOutcome::Optimal {
                value: int(-2),
                solution: vec![int(1), int(1)]
            }
        );
    }

    #[test]
    fn fractional_optimum_and_negative_rhs() {
        // max x, 3x <= 1 written as -3x >= -1
        let lp = LinearProgram {
            objective: vec![int(1)],
            constraints: vec![row(&[-3], Sense::Ge, int(-1))],
        };
        assert_eq!(
            lp.solve(),
            LpOutcome::Optimal {
                value: ratio(1, 3),
                solution: vec![ratio(1, 3)]
            }
        );
    }

    #[test]
    fn infeasible_and_unbounded() {
        let lp = LinearProgram {
            objective: vec![int(1)],
            constraints: vec![row(&[1], Sense::Le, int(1)), row(&[1], Sense::Ge, int(2))],
        };
        assert_eq!(lp.solve(), LpOutcome::Infeasible);
        let lp = LinearProgram {
            objective: vec![int(1), int(0)],
            constraints: vec![row(&[1, -1], Sense::Le, int(1))],
        };
        assert_eq!(lp.solve(), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_equalities() {
        let lp = LinearProgram {
            objective: vec![int(1), int(1)],
            constraints: vec![
                row(&[1, 1], Sense::Eq, int(2)),
                row(&[2, 2], Sense::Eq, int(4)),
                row(&[1, 0], Sense::Le, int(1)),
            ],
        };
        match lp.solve() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, int(2)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn degenerate_cycling_example_terminates() {
        // Beale's example, which cycles under the largest-coefficient rule.
        let q = |a: i64, b: i64| ratio(a, b);
        let lp = LinearProgram {
            objective: vec![q(3, 4), q(-150, 1), q(1, 50), q(-6, 1)],
            constraints: vec![
                Constraint {
                    coeffs: vec![q(1, 4), q(-60, 1), q(-1, 25), q(9, 1)],
                    sense: Sense::Le,
                    rhs: int(0),
                },
                Constraint {
                    coeffs: vec![q(1, 2), q(-90, 1), q(-1, 50), q(3, 1)],
                    sense: Sense::Le,
                    rhs: int(0),
                },
                Constraint {
                    coeffs: vec![int(0), int(0), int(1), int(0)],
                    sense: Sense::Le,
                    rhs: int(1),
                },
            ],
        };
        match lp.solve() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, q(1, 20)),
            other => panic!("{other:?}"),
        }
    }
}
