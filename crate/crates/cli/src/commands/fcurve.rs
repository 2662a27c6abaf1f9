use std::io::Write;
use std::path::Path;

use voting_power::decimal::Precision;
use voting_power::families::{f_curve, g_bracket};
use voting_power::numeric::{render_decimal, render_fraction};

use crate::document::parse_grid;
use crate::emit;
use crate::error::{CliError, CliResult, EXIT_OK, EXIT_VIOLATED};
use crate::render::{decimal, exact};

pub const HEADER: [&str; 7] = [
    "q",
    "quota",
    "f_frac",
    "f_dec",
    "cand_cubic",
    "cand_entropy",
    "g",
];

pub fn run(
    n: u64,
    grid: &str,
    path: Option<&Path>,
    places: u32,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<i32> {
    if n == 0 {
        return Err(CliError::Input("n must be at least 1".into()));
    }
    let grid = parse_grid(grid)?;
    let report = f_curve(n, &grid, Precision::new(places))?;
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(HEADER)?;
    for p in &report.points {
        writer.write_record([
            exact(&p.q),
            p.quota.to_string(),
            render_fraction(&p.f),
            render_decimal(&p.f, places as usize),
            render_decimal(&p.analytic.cand_cubic, places as usize),
            decimal(&p.analytic.cand_entropy, places),
            decimal(&p.analytic.g, places),
        ])?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| CliError::io("cannot write CSV", e.into_error()))?;
    emit(path, out, &String::from_utf8(bytes).expect("UTF-8"))?;

    let summary = format!(
        "n={} points={} duality={} nondecreasing_on_upper_half={} max_err_cubic={} max_err_entropy={}\n",
        n,
        report.points.len(),
        if report.duality_holds { "holds" } else { "FAILS" },
        report.nondecreasing_upper_half,
        decimal(&report.max_err_cubic, places),
        decimal(&report.max_err_entropy, places),
    );
    let bracket = g_bracket(&grid, Precision::new(places))?;
    let verdict = |v: &Option<_>| match v {
        None => "holds".to_owned(),
        Some(q) => format!("fails at q={}", exact(q)),
    };
    let summary = format!(
        "{summary}q<=g(q): {} g(q)<=1.07q: {} (over {} points in [1/2,1]) max_g_over_q={} max_symmetry_defect={}\n",
        verdict(&bracket.lower_violation),
        verdict(&bracket.upper_violation),
        bracket.checked,
        bracket
            .max_ratio
            .as_ref()
            .map_or("-".to_owned(), |(q, r)| format!("{} at q={}", decimal(r, places), exact(q))),
        decimal(&bracket.max_symmetry_defect, places),
    );
    err.write_all(summary.as_bytes())
        .map_err(|e| CliError::io("cannot write summary", e))?;
    Ok(if report.duality_holds {
        EXIT_OK
    } else {
        EXIT_VIOLATED
    })
}
