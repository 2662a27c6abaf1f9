//! One line per acceptance criterion. Run with `--nocapture` to see the table.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{Signed, Zero};
use rand::Rng;
use rayon::prelude::*;
use voting_power::counting::{
    banzhaf as banzhaf_of, brute_force_indices, class_swing_counts, eta_one_big, shapley_shubik,
    swing_counts,
};
use voting_power::decimal::{Decimal, Precision};
use voting_power::deviation::{
    combine_ratio_bounds, combined_bounds_hold, cubic_over_exponential, l1_from_relative,
    ratio_bounds,
};
use voting_power::families::{
    all_pass, analytic_curves, conjecture_ssi_scan, f_curve, f_value, prop1_instance,
    prop2_instance, random_game_stream, vnq_eta_printed, SsiScanConfig,
};
use voting_power::nucleolus::nucleolus;
use voting_power::numeric::{int, pow, ratio, two_point_six};
use voting_power::weights::{check_lt_bounds, l1_distance, linf_distance, weight_stats};
use voting_power::{dual_game, game_from_weights, integer_game, Rational, WeightVector};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn shareholders() -> Outcome {
    let g = game_from_weights(
        ratio(1, 2),
        &[ratio(42, 100), ratio(40, 100), ratio(9, 100), ratio(9, 100)],
    )
    .map_err(|e| e.to_string())?;
    let expected = vec![ratio(1, 2), ratio(1, 6), ratio(1, 6), ratio(1, 6)];
    let bzi = banzhaf_of(&g);
    let ssi = shapley_shubik(&g);
    let nuc = nucleolus(&g).map_err(|e| e.to_string())?;
    ensure(bzi.values == expected, || format!("BZI {:?}", bzi.values))?;
    ensure(ssi.values == expected, || format!("SSI {:?}", ssi.values))?;
    let nuc_expected = vec![ratio(2, 5), ratio(1, 5), ratio(1, 5), ratio(1, 5)];
    ensure(nuc.values == nuc_expected, || {
        format!("Nuc {:?}", nuc.values)
    })?;
    Ok("BZI = SSI = (1/2,1/6,1/6,1/6), Nuc = (2/5,1/5,1/5,1/5)".into())
}

fn failing(checks: &[voting_power::families::BoundCheck]) -> String {
    checks
        .iter()
        .filter(|c| !c.passes())
        .map(|c| c.name.clone())
        .collect::<Vec<_>>()
        .join(", ")
}

fn prop1() -> Outcome {
    let r = prop1_instance(11);
    ensure(r.instance.game.n() == 2663, || "wrong size".into())?;
    ensure(r.checks.iter().take(4).all(|c| c.asserted), || {
        "bounds not asserted".into()
    })?;
    ensure(all_pass(&r.checks), || failing(&r.checks))?;
    ensure(r.linf >= ratio(9, 11) && r.l1 >= ratio(18, 11), || {
        "norm bounds".into()
    })?;
    Ok(format!("{} checks hold at n=11", r.checks.len()))
}

fn prop2() -> Outcome {
    let r = prop2_instance(11);
    ensure(r.instance.game.n() == 2685, || "wrong size".into())?;
    let bzi = &r.banzhaf.values;
    let growth = pow(&two_point_six(), 11) / int(23);
    ensure(&bzi[0] / &bzi[23] >= growth, || "ratio bound".into())?;
    ensure(r.l1 >= ratio(1, 5), || "L1 bound".into())?;
    ensure(all_pass(&r.checks), || failing(&r.checks))?;
    Ok(format!("{} checks hold at n=11", r.checks.len()))
}

fn decay() -> Outcome {
    for n in 11..=100 {
        let c = cubic_over_exponential(n);
        ensure(c.holds, || format!("fails at n={n}"))?;
    }
    Ok("2n^3/2.6^n <= 1/n for n = 11..=100".into())
}

fn oracle() -> Outcome {
    let suite = common::oracle_suite(500, 2024);
    suite.par_iter().enumerate().try_for_each(|(k, g)| {
        let brute = brute_force_indices(g).map_err(|e| e.to_string())?;
        let dp = swing_counts(g);
        ensure(dp == brute.swings, || format!("eta differs on game #{k}"))?;
        ensure(dp.banzhaf() == brute.banzhaf, || {
            format!("BZI differs on game #{k}")
        })?;
        ensure(shapley_shubik(g) == brute.shapley_shubik, || {
            format!("SSI differs on game #{k}")
        })
    })?;
    let mut cases = 0;
    for k in 1..=6u64 {
        for m in 1..=14u64 {
            for q in 1..=k + m {
                let g = integer_game(q, &[(k, 1), (1, m as usize)]).map_err(|e| e.to_string())?;
                let (big, small) = eta_one_big(k, m, q);
                ensure(class_swing_counts(&g) == vec![big, small], || {
                    format!("[{q};{k},1x{m}]")
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!(
        "500 games match brute force; {cases} one-big games match"
    ))
}

fn duality() -> Outcome {
    let suite = common::oracle_suite(500, 2024);
    suite.par_iter().enumerate().try_for_each(|(k, g)| {
        ensure(swing_counts(g) == swing_counts(&dual_game(g)), || {
            format!("game #{k}")
        })
    })?;
    Ok("eta(g) = eta(dual g) on 500 games".into())
}

fn lemmas() -> Outcome {
    const CASES: u64 = 1000;
    for k in 0..CASES {
        let mut rng = random_game_stream(31, k);
        let n = rng.gen_range(1..=10);
        let x = common::random_simplex_point(&mut rng, n, true);
        let w = common::random_simplex_point(&mut rng, n, true);
        let l1 = l1_distance(&x, &w).unwrap();
        ensure(linf_distance(&x, &w).unwrap() * int(2) <= l1, || {
            format!("half-L1 case {k}")
        })?;
        let wv = WeightVector::new(w.clone()).unwrap();
        ensure(check_lt_bounds(&wv).unwrap().all_hold(), || {
            format!("LT chain case {k}")
        })?;
    }
    for k in 0..CASES {
        let mut rng = random_game_stream(32, k);
        let g = common::class_game(&mut rng, 12, 20);
        let w = g.relative_weights();
        for x in [banzhaf_of(&g), shapley_shubik(&g)] {
            let report = ratio_bounds(&x.values, &w).map_err(|e| e.to_string())?;
            ensure(report.all_hold(), || format!("ratio bounds game {k}"))?;
        }
    }
    let mut rng = random_game_stream(33, 0);
    for k in 0..CASES {
        let eps_i = ratio(rng.gen_range(0..100), 100);
        let eps_j = ratio(rng.gen_range(0..100), 100);
        let b = combine_ratio_bounds(&eps_i, &eps_j).unwrap();
        let w_i = ratio(rng.gen_range(1..50), 50);
        let w_j = ratio(rng.gen_range(1..50), 50);
        let di = &eps_i * ratio(rng.gen_range(-100..=100), 100);
        let dj = &eps_j * ratio(rng.gen_range(-100..=100), 100);
        let x_i = &w_i * (int(1) + di);
        let x_j = &w_j * (int(1) + dj);
        ensure(combined_bounds_hold(&x_i, &w_i, &x_j, &w_j, &b), || {
            format!("combined ratio bounds case {k}")
        })?;
    }
    for k in 0..CASES {
        let mut rng = random_game_stream(34, k);
        let n = rng.gen_range(1..=10);
        let x = common::random_simplex_point(&mut rng, n, true);
        let w = common::random_simplex_point(&mut rng, n, false);
        let subset: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.6)).collect();
        let outside = |v: &[Rational]| -> Rational {
            (0..n)
                .filter(|i| !subset.contains(i))
                .map(|i| v[i].clone())
                .sum()
        };
        let eps = subset
            .iter()
            .map(|&i| (&x[i] / &w[i] - int(1)).abs())
            .max()
            .unwrap_or_else(Rational::zero);
        let wv = WeightVector::new(w.clone()).unwrap();
        let r = l1_from_relative(&x, &wv, &subset, &outside(&w), &outside(&x), &eps)
            .map_err(|e| format!("L1 from relative deviation case {k}: {e}"))?;
        ensure(r.holds, || format!("L1 from relative deviation case {k}"))?;
    }
    Ok(format!(
        "{CASES} cases each: half-L1, LT chain, ratio bounds, combined ratio bounds, L1 from relative deviation"
    ))
}

fn nucleolus_bound() -> Outcome {
    let games: Vec<_> = (0..200u64)
        .map(|k| common::positive_game(&mut random_game_stream(41, k), 10, 20))
        .collect();
    games.par_iter().enumerate().try_for_each(|(k, (q, g))| {
        let nuc = nucleolus(g).map_err(|e| e.to_string())?;
        let w = g.relative_weights();
        let delta = weight_stats(&w).unwrap().delta;
        let one_minus = int(1) - q;
        let slack = if *q < one_minus { q.clone() } else { one_minus };
        let l1 = l1_distance(&nuc.values, w.entries()).unwrap();
        ensure(l1 <= int(2) * delta / slack, || {
            format!("violated on game #{k}")
        })
    })?;
    Ok("200 games within 2Δ/min{q,1-q}".into())
}

fn fcurve() -> Outcome {
    for n in [10, 50, 200] {
        ensure(f_value(n, &int(1)).unwrap() == ratio(1, 3), || {
            format!("f_{n}(1)")
        })?;
    }
    let at_half: Vec<Rational> = [10, 20, 40, 80, 160]
        .iter()
        .map(|&n| f_value(n, &ratio(1, 2)).unwrap())
        .collect();
    ensure(at_half.windows(2).all(|p| p[1] < p[0]), || {
        "f_n(1/2) not decreasing".into()
    })?;
    let grid: Vec<Rational> = (10..=20).map(|k| ratio(k, 20)).collect();
    let r = f_curve(200, &grid, Precision::new(12)).unwrap();
    let mut quotas: Vec<u64> = r.points.iter().map(|p| p.quota).collect();
    quotas.dedup();
    ensure(quotas.len() == grid.len(), || "grid quotas collide".into())?;
    ensure(r.nondecreasing_upper_half, || {
        "f_200 not nondecreasing".into()
    })?;
    ensure(r.duality_holds, || "duality".into())?;
    Ok("f_n(1) = 1/3, f_n(1/2) decreasing, f_200 nondecreasing, duality exact".into())
}

fn analytic() -> Outcome {
    let p = Precision::default();
    let half = analytic_curves(&ratio(1, 2), p).unwrap();
    let tol = Decimal::from_rational(&ratio(1, 1_000_000_000), half.g.scale());
    let target = Decimal::from_rational(&ratio(1, 2), half.g.scale());
    ensure(half.g.sub(&target).abs() <= tol, || {
        format!("g(1/2) = {}", half.g)
    })?;
    for k in 100..=200 {
        let q = ratio(k, 200);
        let v = analytic_curves(&q, p).unwrap();
        ensure(Decimal::from_rational(&q, v.g.scale()) <= v.g, || {
            format!("g({q}) < q")
        })?;
    }
    let one = analytic_curves(&int(1), p).unwrap();
    let third = ratio(1, 3);
    ensure(one.cand_cubic == third, || "cand_cubic(1)".into())?;
    let third_dec = Decimal::from_rational(&third, one.g.scale());
    ensure(one.cand_entropy == third_dec, || "cand_entropy(1)".into())?;
    ensure(f_value(200, &int(1)).unwrap() == third, || "f(1)".into())?;
    Ok("g(1/2) = 1/2, q <= g(q) on [1/2,1], candidates = 1/3 at q = 1".into())
}

fn ssi_scan() -> Outcome {
    let r = conjecture_ssi_scan(&SsiScanConfig::default()).map_err(|e| e.to_string())?;
    ensure(r.violations.is_empty(), || {
        let s = &r.samples[r.violations[0]];
        format!(
            "{} violations, first: {} at q={}",
            r.violations.len(),
            s.label,
            s.q
        )
    })?;
    let families = r.samples.iter().filter(|s| s.index.is_none()).count();
    Ok(format!(
        "{} samples ({families} family rows), max ratio {}",
        r.samples.len(),
        voting_power::numeric::render_decimal(&r.max_ratio, 6)
    ))
}

fn printed_formula() -> Outcome {
    let r = vnq_eta_printed(2, &ratio(1, 2)).unwrap();
    ensure(r.printed_first == BigUint::from(2u32), || {
        format!("printed {}", r.printed_first)
    })?;
    ensure(r.dp_first == BigUint::from(4u32), || {
        format!("dp {}", r.dp_first)
    })?;
    Ok("printed eta_1 = 2, DP eta_1 = 4".into())
}

fn main() {
    let criteria: Vec<(&str, fn() -> Outcome, Duration)> = vec![
        ("shareholder example", shareholders, Duration::from_secs(1)),
        ("prop1 n=11", prop1, Duration::from_secs(60)),
        ("prop2 n=11", prop2, Duration::from_secs(300)),
        ("2n^3/2.6^n <= 1/n", decay, Duration::from_secs(1)),
        ("DP vs brute force", oracle, Duration::MAX),
        ("Banzhaf duality", duality, Duration::MAX),
        ("lemma property suites", lemmas, Duration::MAX),
        ("nucleolus bound", nucleolus_bound, Duration::MAX),
        ("f-curve behavior", fcurve, Duration::MAX),
        ("analytic companions", analytic, Duration::MAX),
        ("SSI conjecture scan", ssi_scan, Duration::from_secs(600)),
        ("printed vs DP swing sums", printed_formula, Duration::MAX),
    ];
    let mut failures = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(detail) if elapsed <= limit => format!("PASS  {:>2} {name}: {detail}", i + 1),
            Ok(detail) => format!("FAIL  {:>2} {name}: too slow, {detail}", i + 1),
            Err(why) => format!("FAIL  {:>2} {name}: {why}", i + 1),
        };
        if verdict.starts_with("FAIL") {
            failures += 1;
        }
        println!("{verdict} ({:.2?})", elapsed);
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria pass");
}
