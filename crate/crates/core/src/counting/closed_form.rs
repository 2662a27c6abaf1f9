//! Closed-form swing counts for games with one or two weight classes.

use num_bigint::BigUint;
use std::collections::BTreeMap;

use num_traits::Zero;

use super::shapley_weighting;
use crate::binomial::choose;
use crate::numeric::Rational;

/// `(η_big, η_small)` for `[Q; k, 1×m]`:
/// `η_big = Σ_{i=1..k} C(m, Q-i)` and `η_small = C(m-1, Q-1) + C(m-1, Q-k-1)`.
pub fn eta_one_big(k: u64, m: u64, quota: u64) -> (BigUint, BigUint) {
    let (k, m, q) = (k as i64, m as i64, quota as i64);
    let big = (1..=k).map(|i| choose(m, q - i)).sum();
    let small = choose(m - 1, q - 1) + choose(m - 1, q - k - 1);
    (big, small)
}

/// Swing counts of one member of each class in `[Q; a×count_a, b×count_b]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoClassEta {
    pub first: BigUint,
    pub second: BigUint,
}

/// Calls `visit(j, s, C(own_others, j)·C(count_other, s))` for every member
/// count `(j, s)` of a player of weight `own` with `own_others` teammates of
/// the same weight and `count_other` players of weight `other` such that
/// `j·own + s·other` lies in the swing window `[Q - own, Q - 1]`.
fn visit_window(
    own: u64,
    own_others: u64,
    other: u64,
    count_other: u64,
    quota: u64,
    mut visit: impl FnMut(u64, u64, BigUint),
) {
    if own == 0 {
        return;
    }
    let lo = quota.saturating_sub(own);
    let hi = quota - 1;
    for j in 0..=own_others {
        let base = j * own;
        if base > hi {
            break;
        }
        let (s_lo, s_hi) = if other == 0 {
            // weight-zero players never move the total
            if base >= lo {
                (0, count_other)
            } else {
                continue;
            }
        } else {
            (
                lo.saturating_sub(base).div_ceil(other),
                count_other.min((hi - base) / other),
            )
        };
        if s_lo > s_hi {
            continue;
        }
        let outer = choose(own_others as i64, j as i64);
        for s in s_lo..=s_hi {
            visit(j, s, &outer * choose(count_other as i64, s as i64));
        }
    }
}

fn one_side(own: u64, own_others: u64, other: u64, count_other: u64, quota: u64) -> BigUint {
    let mut eta = BigUint::zero();
    visit_window(own, own_others, other, count_other, quota, |_, _, c| {
        eta += c
    });
    eta
}

fn one_side_ssi(own: u64, own_others: u64, other: u64, count_other: u64, quota: u64) -> Rational {
    let mut by_size: BTreeMap<usize, BigUint> = BTreeMap::new();
    visit_window(own, own_others, other, count_other, quota, |j, s, c| {
        *by_size.entry((j + s) as usize).or_default() += c;
    });
    shapley_weighting((own_others + 1 + count_other) as usize, by_size)
}

/// Shapley-Shubik value of one member of each class in `[Q; a×count_a, b×count_b]`.
pub fn two_class_ssi(
    weight_a: u64,
    count_a: u64,
    weight_b: u64,
    count_b: u64,
    quota: u64,
) -> (Rational, Rational) {
    (
        one_side_ssi(weight_a, count_a - 1, weight_b, count_b, quota),
        one_side_ssi(weight_b, count_b - 1, weight_a, count_a, quota),
    )
}

pub fn two_class_eta(
    weight_a: u64,
    count_a: u64,
    weight_b: u64,
    count_b: u64,
    quota: u64,
) -> TwoClassEta {
    TwoClassEta {
        first: one_side(weight_a, count_a - 1, weight_b, count_b, quota),
        second: one_side(weight_b, count_b - 1, weight_a, count_a, quota),
    }
}
