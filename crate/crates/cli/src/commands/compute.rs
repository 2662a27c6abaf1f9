use std::io::Write;
use std::path::Path;

use serde::Serialize;
use voting_power::counting::banzhaf;
use voting_power::families::shapley_shubik_exact;
use voting_power::nucleolus::nucleolus;
use voting_power::numeric::render_fraction;
use voting_power::weights::{l1_distance, linf_distance, weight_stats};
use voting_power::{PowerVector, WeightedGame};

use crate::document::GameDocument;
use crate::error::{CliError, CliResult, EXIT_OK};
use crate::render::{value, Value};
use crate::{emit, Format, IndexArg};

#[derive(Debug, Serialize)]
struct ClassRow {
    weight: String,
    relative_weight: Value,
    count: usize,
}

#[derive(Debug, Serialize)]
struct IndexReport {
    index: &'static str,
    /// One value per class; every member of a class gets it.
    values: Vec<Value>,
    l1: Value,
    linf: Value,
}

#[derive(Debug, Serialize)]
struct ComputeReport {
    game: GameDocument,
    players: usize,
    classes: Vec<ClassRow>,
    delta: Value,
    lambda: Value,
    laakso: Value,
    indices: Vec<IndexReport>,
}

fn indices(game: &WeightedGame, which: IndexArg) -> CliResult<Vec<PowerVector>> {
    let mut out = Vec::new();
    if matches!(which, IndexArg::Banzhaf | IndexArg::All) {
        out.push(banzhaf(game));
    }
    if matches!(which, IndexArg::Ssi | IndexArg::All) {
        out.push(shapley_shubik_exact(game));
    }
    if matches!(which, IndexArg::Nucleolus | IndexArg::All) {
        out.push(nucleolus(game)?);
    }
    Ok(out)
}

pub fn run(
    file: &Path,
    which: IndexArg,
    format: Format,
    places: u32,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let game = GameDocument::load(file)?.to_game()?;
    let w = game.relative_weights();
    let stats = weight_stats(&w)?;
    let vectors = indices(&game, which)?;
    let starts: Vec<usize> = game
        .classes()
        .iter()
        .scan(0, |pos, c| {
            let start = *pos;
            *pos += c.count;
            Some(start)
        })
        .collect();
    let reports: Vec<IndexReport> = vectors
        .iter()
        .map(|x| IndexReport {
            index: x.kind.name(),
            values: starts
                .iter()
                .map(|&s| value(&x.values[s], places))
                .collect(),
            l1: value(
                &l1_distance(&x.values, w.entries()).expect("same length"),
                places,
            ),
            linf: value(
                &linf_distance(&x.values, w.entries()).expect("same length"),
                places,
            ),
        })
        .collect();
    let report = ComputeReport {
        game: GameDocument::from_game(&game),
        players: game.n(),
        classes: game
            .classes()
            .iter()
            .zip(&starts)
            .map(|(c, &s)| ClassRow {
                weight: render_fraction(&c.weight),
                relative_weight: value(&w.entries()[s], places),
                count: c.count,
            })
            .collect(),
        delta: value(&stats.delta, places),
        lambda: value(&stats.lambda, places),
        laakso: value(&stats.laakso, places),
        indices: reports,
    };
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
        Format::Csv => csv_text(&report)?,
        Format::Plain => plain_text(&report),
    };
    emit(None, out, &text)?;
    Ok(EXIT_OK)
}

/// One row per player in class-major order, then the two distances per index.
fn csv_text(report: &ComputeReport) -> CliResult<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["index", "player", "class", "weight", "fraction", "decimal"])?;
    for idx in &report.indices {
        let mut player = 0;
        for (c, (class, v)) in report.classes.iter().zip(&idx.values).enumerate() {
            for _ in 0..class.count {
                player += 1;
                writer.write_record([
                    idx.index,
                    &player.to_string(),
                    &(c + 1).to_string(),
                    &class.weight,
                    &v.fraction,
                    &v.decimal,
                ])?;
            }
        }
        for (name, v) in [("l1", &idx.l1), ("linf", &idx.linf)] {
            writer.write_record([idx.index, name, "", "", &v.fraction, &v.decimal])?;
        }
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| CliError::io("cannot write CSV", e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("CSV of UTF-8 strings"))
}

fn plain_text(report: &ComputeReport) -> String {
    let mut s = String::new();
    let line = |s: &mut String, text: String| {
        s.push_str(&text);
        s.push('\n');
    };
    line(
        &mut s,
        format!(
            "game: quota {}, {} players in {} classes",
            report.game.quota,
            report.players,
            report.classes.len()
        ),
    );
    for (c, class) in report.classes.iter().enumerate() {
        line(
            &mut s,
            format!(
                "  class {}: weight {} x{} (relative {} = {})",
                c + 1,
                class.weight,
                class.count,
                class.relative_weight.fraction,
                class.relative_weight.decimal
            ),
        );
    }
    for (name, v) in [
        ("delta", &report.delta),
        ("lambda", &report.lambda),
        ("L(w)", &report.laakso),
    ] {
        line(&mut s, format!("{name}: {} = {}", v.fraction, v.decimal));
    }
    for idx in &report.indices {
        line(&mut s, format!("{}:", idx.index));
        for (c, v) in idx.values.iter().enumerate() {
            line(
                &mut s,
                format!("  class {}: {} = {}", c + 1, v.fraction, v.decimal),
            );
        }
        line(
            &mut s,
            format!("  ||x - w||_1 = {} = {}", idx.l1.fraction, idx.l1.decimal),
        );
        line(
            &mut s,
            format!(
                "  ||x - w||_inf = {} = {}",
                idx.linf.fraction, idx.linf.decimal
            ),
        );
    }
    s
}
