use std::io::Write;
use std::path::Path;

use serde::Serialize;
use voting_power::families::{
    conjecture_bzi_scan, conjecture_ssi_scan, BziScanConfig, SsiSample, SsiScanConfig,
};
use voting_power::numeric::ratio;
use voting_power::Rational;

use crate::document::{parse_grid, GameDocument};
use crate::error::{CliError, CliResult, EXIT_OK, EXIT_VIOLATED};
use crate::render::{exact, value, Value};
use crate::{emit, ScanKind};

#[derive(Debug, Clone)]
pub struct ScanOptions {
    pub samples: usize,
    pub seed: u64,
    pub n_min: usize,
    pub n_max: usize,
    pub weight_max: u64,
    pub q_grid: Option<String>,
    pub family_n: Option<u64>,
}

#[derive(Debug, Serialize)]
struct Config {
    samples: usize,
    n_min: usize,
    n_max: usize,
    weight_max: u64,
    q_grid: Vec<String>,
    family_n: Option<u64>,
}

#[derive(Debug, Serialize)]
struct BziRow {
    label: String,
    index: Option<u64>,
    players: usize,
    l1: Value,
    delta: Value,
    lambda: Value,
    r: Value,
}

#[derive(Debug, Serialize)]
struct Worst {
    label: String,
    q: Option<String>,
    ratio: Value,
    game: GameDocument,
}

#[derive(Debug, Serialize)]
struct BziReport {
    scan: &'static str,
    seed: u64,
    config: Config,
    samples: Vec<BziRow>,
    max: Worst,
}

/// Worst ratio of one game over the quota grid.
#[derive(Debug, Serialize)]
struct SsiRow {
    label: String,
    index: Option<u64>,
    players: usize,
    worst_q: String,
    lhs: Value,
    bound: Value,
    ratio: Value,
    holds_everywhere: bool,
}

#[derive(Debug, Serialize)]
struct Violation {
    label: String,
    q: String,
    lhs: Value,
    bound: Value,
    game: GameDocument,
}

#[derive(Debug, Serialize)]
struct SsiReport {
    scan: &'static str,
    seed: u64,
    config: Config,
    samples: Vec<SsiRow>,
    violations: Vec<Violation>,
    max: Worst,
}

fn check(options: &ScanOptions) -> CliResult<()> {
    if options.samples == 0 {
        return Err(CliError::Input("samples must be positive".into()));
    }
    if options.family_n.is_some_and(|n| n < 2) {
        return Err(CliError::Input("family n must be at least 2".into()));
    }
    Ok(())
}

pub fn run(
    kind: ScanKind,
    options: &ScanOptions,
    path: Option<&Path>,
    places: u32,
    out: &mut dyn Write,
) -> CliResult<i32> {
    check(options)?;
    let (text, code) = match kind {
        ScanKind::Bzi => (bzi(options, places)?, EXIT_OK),
        ScanKind::Ssi => ssi(options, places)?,
    };
    emit(path, out, &text)?;
    Ok(code)
}

fn bzi(options: &ScanOptions, places: u32) -> CliResult<String> {
    if options.q_grid.is_some() {
        return Err(CliError::Input("the BZI scan runs at q = 1/2 only".into()));
    }
    let config = BziScanConfig {
        n_min: options.n_min,
        n_max: options.n_max,
        samples: options.samples,
        seed: options.seed,
        weight_max: options.weight_max,
        family_n: options.family_n,
    };
    let r = conjecture_bzi_scan(&config)?;
    let best = &r.samples[r.argmax];
    let report = BziReport {
        scan: "bzi",
        seed: r.seed,
        config: Config {
            samples: options.samples,
            n_min: options.n_min,
            n_max: options.n_max,
            weight_max: options.weight_max,
            q_grid: vec!["0.5".into()],
            family_n: options.family_n,
        },
        samples: r
            .samples
            .iter()
            .map(|s| BziRow {
                label: s.label.clone(),
                index: s.index,
                players: s.game.n(),
                l1: value(&s.l1, places),
                delta: value(&s.delta, places),
                lambda: value(&s.lambda, places),
                r: value(&s.r, places),
            })
            .collect(),
        max: Worst {
            label: best.label.clone(),
            q: Some("0.5".into()),
            ratio: value(&r.max_r, places),
            game: GameDocument::from_game(&best.game),
        },
    };
    Ok(serde_json::to_string_pretty(&report)? + "\n")
}

fn ssi(options: &ScanOptions, places: u32) -> CliResult<(String, i32)> {
    let q_grid: Vec<Rational> = match &options.q_grid {
        Some(text) => parse_grid(text)?,
        None => (1..=9).map(|k| ratio(k, 10)).collect(),
    };
    let config = SsiScanConfig {
        n_min: options.n_min,
        n_max: options.n_max,
        samples: options.samples,
        seed: options.seed,
        weight_max: options.weight_max,
        q_grid: q_grid.clone(),
        family_n: options.family_n,
    };
    let r = conjecture_ssi_scan(&config)?;
    // group consecutive rows of the same game
    let mut rows: Vec<SsiRow> = Vec::new();
    let mut groups: Vec<Vec<&SsiSample>> = Vec::new();
    for s in &r.samples {
        match groups.last_mut() {
            Some(g) if g[0].label == s.label => g.push(s),
            _ => groups.push(vec![s]),
        }
    }
    for g in &groups {
        let worst = g
            .iter()
            .fold(g[0], |a, b| if b.ratio > a.ratio { b } else { a });
        rows.push(SsiRow {
            label: worst.label.clone(),
            index: worst.index,
            players: worst.game.n(),
            worst_q: exact(&worst.q),
            lhs: value(&worst.lhs, places),
            bound: value(&worst.bound, places),
            ratio: value(&worst.ratio, places),
            holds_everywhere: g.iter().all(|s| s.holds),
        });
    }
    let best = &r.samples[r.argmax];
    let report = SsiReport {
        scan: "ssi",
        seed: r.seed,
        config: Config {
            samples: options.samples,
            n_min: options.n_min,
            n_max: options.n_max,
            weight_max: options.weight_max,
            q_grid: q_grid.iter().map(exact).collect(),
            family_n: options.family_n,
        },
        samples: rows,
        violations: r
            .violations
            .iter()
            .map(|&i| {
                let s = &r.samples[i];
                Violation {
                    label: s.label.clone(),
                    q: exact(&s.q),
                    lhs: value(&s.lhs, places),
                    bound: value(&s.bound, places),
                    game: GameDocument::from_game(&s.game),
                }
            })
            .collect(),
        max: Worst {
            label: best.label.clone(),
            q: Some(exact(&best.q)),
            ratio: value(&r.max_ratio, places),
            game: GameDocument::from_game(&best.game),
        },
    };
    let code = if r.violations.is_empty() {
        EXIT_OK
    } else {
        EXIT_VIOLATED
    };
    Ok((serde_json::to_string_pretty(&report)? + "\n", code))
}
