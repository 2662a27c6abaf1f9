//! Evidence scanners for the two open deviation bounds. Neither scan asserts
//! anything about the BZI bound; the SSI scan flags violations.

use num_traits::Zero;
use rand::Rng;
use rayon::prelude::*;

use super::random::{random_game_stream, random_game_with, WeightDist};
use super::{prop1_game, prop2_game, vnq_game};
use crate::counting::{banzhaf, class_shapley_shubik, two_class_ssi};
use crate::error::{Error, Result};
use crate::game::{game_from_weights, integer_game, WeightedGame};
use crate::numeric::{int, ratio, Rational};
use crate::power::{IndexKind, PowerVector};
use crate::weights::{l1_distance, weight_stats};

/// Exact Shapley-Shubik vector, using the two-class sums where they apply.
pub fn shapley_shubik_exact(game: &WeightedGame) -> PowerVector {
    let per_class = match (game.int_weights(), game.counts().as_slice()) {
        (&[a, b], &[ca, cb]) => {
            let (x, y) = two_class_ssi(a, ca as u64, b, cb as u64, game.int_quota());
            vec![x, y]
        }
        _ => class_shapley_shubik(game),
    };
    PowerVector::from_class_values(IndexKind::ShapleyShubik, game, &per_class)
}

fn shareholder_game() -> WeightedGame {
    game_from_weights(
        ratio(1, 2),
        &[ratio(21, 50), ratio(2, 5), ratio(9, 100), ratio(9, 100)],
    )
    .expect("valid game")
}

fn check_range(n_min: usize, n_max: usize, weight_max: u64) -> Result<()> {
    if n_min == 0 || n_min > n_max {
        return Err(Error::InvalidParameter(format!(
            "player range {n_min}..={n_max} must be positive and nonempty"
        )));
    }
    if n_max > crate::counting::BRUTE_FORCE_CAP {
        return Err(Error::TooLarge {
            what: "scan players",
            n: n_max,
            cap: crate::counting::BRUTE_FORCE_CAP,
        });
    }
    if weight_max == 0 {
        return Err(Error::InvalidParameter(
            "weight_max must be positive".into(),
        ));
    }
    Ok(())
}

/// Draws the player count and weights of random sample `index`.
fn sample_game(
    seed: u64,
    index: u64,
    n_min: usize,
    n_max: usize,
    weight_max: u64,
    q: &Rational,
) -> WeightedGame {
    let mut rng = random_game_stream(seed, index);
    let n = rng.gen_range(n_min..=n_max);
    random_game_with(
        n,
        q,
        &mut rng,
        WeightDist::UniformInt {
            min: 1,
            max: weight_max,
        },
    )
    .expect("validated parameters")
}

/// Same weights at a different relative quota.
fn requota(game: &WeightedGame, q: &Rational) -> WeightedGame {
    let weights: Vec<Rational> = game.int_weights().iter().map(|&w| int(w as i64)).collect();
    let players: Vec<Rational> = game
        .player_classes()
        .iter()
        .map(|&c| weights[c].clone())
        .collect();
    let total: Rational = players.iter().sum();
    game_from_weights(total * q, &players).expect("valid quota")
}

#[derive(Debug, Clone)]
pub struct BziScanConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub samples: usize,
    pub seed: u64,
    pub weight_max: u64,
    /// Adds the shareholder game, uniform games and the three families at this `n`.
    pub family_n: Option<u64>,
}

impl Default for BziScanConfig {
    fn default() -> Self {
        BziScanConfig {
            n_min: 2,
            n_max: 10,
            samples: 200,
            seed: 1,
            weight_max: 20,
            family_n: Some(11),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BziSample {
    pub label: String,
    /// Sample index within the seeded stream, for random games.
    pub index: Option<u64>,
    pub game: WeightedGame,
    pub l1: Rational,
    pub delta: Rational,
    pub lambda: Rational,
    /// `‖BZI - w‖₁ / (Δ·Λ)`
    pub r: Rational,
}

#[derive(Debug, Clone)]
pub struct BziScanReport {
    pub seed: u64,
    pub samples: Vec<BziSample>,
    pub max_r: Rational,
    pub argmax: usize,
}

fn bzi_sample(
    label: String,
    index: Option<u64>,
    game: WeightedGame,
    bzi: Option<PowerVector>,
) -> BziSample {
    let w = game.relative_weights();
    let bzi = bzi.unwrap_or_else(|| banzhaf(&game));
    let l1 = l1_distance(&bzi.values, w.entries()).expect("same dimension");
    let stats = weight_stats(&w).expect("normalized");
    let r = &l1 / (&stats.delta * &stats.lambda);
    BziSample {
        label,
        index,
        game,
        l1,
        delta: stats.delta,
        lambda: stats.lambda,
        r,
    }
}

pub fn conjecture_bzi_scan(config: &BziScanConfig) -> Result<BziScanReport> {
    check_range(config.n_min, config.n_max, config.weight_max)?;
    let half = ratio(1, 2);
    let mut samples: Vec<BziSample> = (0..config.samples as u64)
        .into_par_iter()
        .map(|k| {
            let game = sample_game(
                config.seed,
                k,
                config.n_min,
                config.n_max,
                config.weight_max,
                &half,
            );
            bzi_sample(format!("random #{k}"), Some(k), game, None)
        })
        .collect();
    if let Some(n) = config.family_n {
        for m in config.n_min..=config.n_max {
            let game = integer_game(m as u64, &[(2, m)]).expect("valid uniform game");
            samples.push(bzi_sample(format!("uniform n={m}"), None, game, None));
        }
        samples.push(bzi_sample(
            "shareholders".into(),
            None,
            shareholder_game(),
            None,
        ));
        let p1 = super::prop1_instance(n);
        samples.push(bzi_sample(
            p1.instance.id.to_string(),
            None,
            p1.instance.game,
            Some(p1.banzhaf),
        ));
        let p2 = super::prop2_instance(n);
        samples.push(bzi_sample(
            p2.instance.id.to_string(),
            None,
            p2.instance.game,
            Some(p2.banzhaf),
        ));
        let (vnq, bzi, _) = super::vnq_instance(n, &half, crate::decimal::Precision::new(12))?;
        samples.push(bzi_sample(vnq.id.to_string(), None, vnq.game, Some(bzi)));
    }
    let (argmax, max_r) = argmax_by(&samples, |s| &s.r);
    Ok(BziScanReport {
        seed: config.seed,
        samples,
        max_r,
        argmax,
    })
}

/// First index of the largest value.
fn argmax_by<T>(items: &[T], key: impl Fn(&T) -> &Rational) -> (usize, Rational) {
    let mut best = (0, Rational::zero());
    for (i, item) in items.iter().enumerate() {
        if *key(item) > best.1 || i == 0 {
            best = (i, key(item).clone());
        }
    }
    best
}

#[derive(Debug, Clone)]
pub struct SsiScanConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub samples: usize,
    pub seed: u64,
    pub weight_max: u64,
    pub q_grid: Vec<Rational>,
    /// Adds prop1/prop2 at `q = 1/2` and `v_{n,q}` on the grid at this `n`.
    pub family_n: Option<u64>,
}

impl Default for SsiScanConfig {
    fn default() -> Self {
        SsiScanConfig {
            n_min: 2,
            n_max: 10,
            samples: 500,
            seed: 7,
            weight_max: 20,
            q_grid: (1..=9).map(|k| ratio(k, 10)).collect(),
            family_n: Some(11),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SsiSample {
    pub label: String,
    pub index: Option<u64>,
    pub q: Rational,
    pub game: WeightedGame,
    /// `‖SSI - w‖₁`
    pub lhs: Rational,
    /// `5Δ / min{q, 1-q}`
    pub bound: Rational,
    pub ratio: Rational,
    pub holds: bool,
}

#[derive(Debug, Clone)]
pub struct SsiScanReport {
    pub seed: u64,
    pub samples: Vec<SsiSample>,
    /// Indices into `samples`.
    pub violations: Vec<usize>,
    pub max_ratio: Rational,
    pub argmax: usize,
}

fn ssi_sample(label: String, index: Option<u64>, q: Rational, game: WeightedGame) -> SsiSample {
    let w = game.relative_weights();
    let ssi = shapley_shubik_exact(&game);
    let lhs = l1_distance(&ssi.values, w.entries()).expect("same dimension");
    let delta = weight_stats(&w).expect("normalized").delta;
    let one_minus = int(1) - &q;
    let slack = if q < one_minus { q.clone() } else { one_minus };
    let bound = int(5) * delta / slack;
    let ratio = &lhs / &bound;
    SsiSample {
        label,
        index,
        holds: lhs <= bound,
        q,
        game,
        lhs,
        bound,
        ratio,
    }
}

pub fn conjecture_ssi_scan(config: &SsiScanConfig) -> Result<SsiScanReport> {
    check_range(config.n_min, config.n_max, config.weight_max)?;
    if config.q_grid.is_empty() {
        return Err(Error::InvalidParameter("empty q grid".into()));
    }
    if let Some(q) = config
        .q_grid
        .iter()
        .find(|q| **q <= int(0) || **q >= int(1))
    {
        return Err(Error::InvalidParameter(format!(
            "q must lie in (0, 1), got {}",
            crate::numeric::render_fraction(q)
        )));
    }
    let mut jobs: Vec<(String, Option<u64>, Rational, WeightedGame)> = Vec::new();
    for k in 0..config.samples as u64 {
        let base = sample_game(
            config.seed,
            k,
            config.n_min,
            config.n_max,
            config.weight_max,
            &config.q_grid[0],
        );
        for q in &config.q_grid {
            jobs.push((
                format!("random #{k}"),
                Some(k),
                q.clone(),
                requota(&base, q),
            ));
        }
    }
    if let Some(n) = config.family_n {
        let half = ratio(1, 2);
        jobs.push((format!("prop1(n={n})"), None, half.clone(), prop1_game(n)));
        jobs.push((format!("prop2(n={n})"), None, half, prop2_game(n)));
        for q in &config.q_grid {
            jobs.push((
                format!("vnq(n={n}, q={})", crate::numeric::render_fraction(q)),
                None,
                q.clone(),
                vnq_game(n, q)?,
            ));
        }
    }
    let samples: Vec<SsiSample> = jobs
        .into_par_iter()
        .map(|(label, index, q, game)| ssi_sample(label, index, q, game))
        .collect();
    let violations = samples
        .iter()
        .enumerate()
        .filter(|(_, s)| !s.holds)
        .map(|(i, _)| i)
        .collect();
    let (argmax, max_ratio) = argmax_by(&samples, |s| &s.ratio);
    Ok(SsiScanReport {
        seed: config.seed,
        samples,
        violations,
        max_ratio,
        argmax,
    })
}
