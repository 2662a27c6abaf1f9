use std::io::Write;

use serde::Serialize;
use voting_power::decimal::Precision;
use voting_power::families::{
    all_pass, prop1_instance, prop2_instance, vnq_eta_printed, vnq_instance, BoundCheck,
};
use voting_power::numeric::render_fraction;

use crate::document::parse_number;
use crate::error::{CliError, CliResult, EXIT_OK, EXIT_VIOLATED};
use crate::render::{decimal, value, Value};
use crate::{emit, FamilyCmd, Format};

#[derive(Debug, Serialize)]
struct CheckRow {
    name: String,
    relation: &'static str,
    value: Value,
    bound: Value,
    holds: bool,
    asserted: bool,
}

#[derive(Debug, Serialize)]
struct FamilyReport {
    family: String,
    players: usize,
    relative_quota: String,
    checks: Vec<CheckRow>,
    passed: bool,
}

fn rows(checks: &[BoundCheck], places: u32) -> Vec<CheckRow> {
    checks
        .iter()
        .map(|c| CheckRow {
            name: c.name.clone(),
            relation: c.relation.symbol(),
            value: value(&c.value, places),
            bound: value(&c.bound, places),
            holds: c.holds,
            asserted: c.asserted,
        })
        .collect()
}

fn verdict(row: &CheckRow) -> &'static str {
    match (row.asserted, row.holds) {
        (true, true) => "PASS",
        (true, false) => "FAIL",
        (false, true) => "holds (not claimed)",
        (false, false) => "fails (not claimed)",
    }
}

fn check_n(n: u64) -> CliResult<()> {
    if n < 2 {
        return Err(CliError::Input(format!("n must be at least 2, got {n}")));
    }
    Ok(())
}

pub fn run(family: &FamilyCmd, format: Format, places: u32, out: &mut dyn Write) -> CliResult<i32> {
    let report = match *family {
        FamilyCmd::Prop1 { n } => {
            check_n(n)?;
            let r = prop1_instance(n);
            bound_report(&r.instance, &r.checks, places)
        }
        FamilyCmd::Prop2 { n } => {
            check_n(n)?;
            let r = prop2_instance(n);
            bound_report(&r.instance, &r.checks, places)
        }
        FamilyCmd::Vnq { n, ref q } => {
            let q = parse_number(q)?;
            return vnq(n, &q, format, places, out);
        }
    };
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
        _ => {
            let mut s = format!(
                "{}: {} players, relative quota {}\n",
                report.family, report.players, report.relative_quota
            );
            for row in &report.checks {
                s += &format!(
                    "  {:<36} value {}  {} bound {}  {}\n",
                    row.name,
                    row.value.decimal,
                    row.relation,
                    row.bound.decimal,
                    verdict(row)
                );
            }
            s += if report.passed {
                "all claimed bounds hold\n"
            } else {
                "some claimed bound fails\n"
            };
            s
        }
    };
    emit(None, out, &text)?;
    Ok(if report.passed {
        EXIT_OK
    } else {
        EXIT_VIOLATED
    })
}

fn bound_report(
    instance: &voting_power::families::FamilyInstance,
    checks: &[BoundCheck],
    places: u32,
) -> FamilyReport {
    FamilyReport {
        family: instance.id.to_string(),
        players: instance.game.n(),
        relative_quota: render_fraction(&instance.relative_quota),
        checks: rows(checks, places),
        passed: all_pass(checks),
    }
}

#[derive(Debug, Serialize)]
struct PrintedRow {
    printed_weight2: String,
    counted_weight2: String,
    printed_weight1: String,
    counted_weight1: String,
    agrees: bool,
}

#[derive(Debug, Serialize)]
struct VnqReport {
    family: String,
    quota: u64,
    banzhaf_weight2: Value,
    banzhaf_weight1: Value,
    f: Value,
    f_dual_quota: Value,
    g: String,
    cand_cubic: Value,
    cand_entropy: String,
    swing_sums: PrintedRow,
}

fn vnq(
    n: u64,
    q: &voting_power::Rational,
    format: Format,
    places: u32,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let precision = Precision::new(places);
    let (instance, bzi, point) = vnq_instance(n, q, precision)?;
    let printed = vnq_eta_printed(n, q)?;
    let report = VnqReport {
        family: instance.id.to_string(),
        quota: point.quota,
        banzhaf_weight2: value(&bzi.values[0], places),
        banzhaf_weight1: value(&bzi.values[n as usize], places),
        f: value(&point.f, places),
        f_dual_quota: value(&point.f_dual, places),
        g: decimal(&point.analytic.g, places),
        cand_cubic: value(&point.analytic.cand_cubic, places),
        cand_entropy: decimal(&point.analytic.cand_entropy, places),
        swing_sums: PrintedRow {
            printed_weight2: printed.printed_first.to_string(),
            counted_weight2: printed.dp_first.to_string(),
            printed_weight1: printed.printed_last.to_string(),
            counted_weight1: printed.dp_last.to_string(),
            agrees: printed.agrees(),
        },
    };
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
        _ => {
            let r = &report;
            let s = &r.swing_sums;
            format!(
                "{}: quota {} of {}\n  BZI weight 2: {} = {}\n  BZI weight 1: {} = {}\n  f_n(q) = {} = {}\n  f_n at dual quota = {}\n  g(q) = {}\n  cand_cubic = {}\n  cand_entropy = {}\n  swing sums (written / counted): weight 2 {} / {}, weight 1 {} / {}{}\n",
                r.family,
                r.quota,
                3 * n,
                r.banzhaf_weight2.fraction,
                r.banzhaf_weight2.decimal,
                r.banzhaf_weight1.fraction,
                r.banzhaf_weight1.decimal,
                r.f.fraction,
                r.f.decimal,
                r.f_dual_quota.fraction,
                r.g,
                r.cand_cubic.decimal,
                r.cand_entropy,
                s.printed_weight2,
                s.counted_weight2,
                s.printed_weight1,
                s.counted_weight1,
                if s.agrees { "" } else { "  (differ)" },
            )
        }
    };
    emit(None, out, &text)?;
    Ok(EXIT_OK)
}
