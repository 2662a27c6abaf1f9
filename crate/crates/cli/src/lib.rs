//! Command-line front end for `voting-power`: indices of user games, the
//! parametric families, the f-curve table and the conjecture scans.

pub mod commands;
pub mod document;
pub mod error;
pub mod render;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use error::{CliError, CliResult, EXIT_BAD_INPUT, EXIT_CAP, EXIT_OK, EXIT_VIOLATED};

/// Environment variable holding the worker thread count.
pub const THREADS_ENV: &str = "VPOWER_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "vpower",
    version,
    about = "Exact voting power in weighted games"
)]
pub struct Cli {
    /// Digits after the decimal point in decimal renderings.
    #[arg(long, global = true, default_value_t = 12)]
    pub precision: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IndexArg {
    Banzhaf,
    Ssi,
    Nucleolus,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScanKind {
    Bzi,
    Ssi,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Power indices of a game given as a JSON document.
    Compute {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        index: IndexArg,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Bounds of a parametric family member.
    Family {
        /// plain or json
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        #[command(subcommand)]
        family: FamilyCmd,
    },
    /// f_n(q) over a grid of q as CSV.
    Fcurve {
        #[arg(long)]
        n: u64,
        /// start:stop:step, e.g. 0.5:1.0:0.05
        #[arg(long)]
        grid: String,
        /// Defaults to standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded scans for the two open deviation bounds.
    Scan {
        #[arg(value_enum)]
        kind: ScanKind,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        nmin: usize,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        #[arg(long, default_value_t = 20)]
        weight_max: u64,
        /// start:stop:step of relative quotas (ssi only); defaults to 0.1:0.9:0.1
        #[arg(long)]
        q_grid: Option<String>,
        /// n of the family members added to the scan.
        #[arg(long, default_value_t = 11)]
        family_n: u64,
        #[arg(long)]
        no_families: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum FamilyCmd {
    /// [n³+n²; 2n², 1×2n³]
    Prop1 {
        #[arg(long)]
        n: u64,
    },
    /// [3n³+n²; 2n²×(2n+1), 1×2n³]
    Prop2 {
        #[arg(long)]
        n: u64,
    },
    /// [⌈3nq⌉; 2×n, 1×n]
    Vnq {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: String,
    },
}

/// Runs one invocation and returns the exit code. Errors go to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let places = cli.precision;
    let result = match cli.command {
        Command::Compute {
            file,
            index,
            format,
        } => commands::compute::run(&file, index, format, places, out),
        Command::Family { format, family } => commands::family::run(&family, format, places, out),
        Command::Fcurve { n, grid, out: path } => {
            commands::fcurve::run(n, &grid, path.as_deref(), places, out, err)
        }
        Command::Scan {
            kind,
            samples,
            seed,
            nmin,
            nmax,
            weight_max,
            q_grid,
            family_n,
            no_families,
            out: path,
        } => {
            let options = commands::scan::ScanOptions {
                samples,
                seed,
                n_min: nmin,
                n_max: nmax,
                weight_max,
                q_grid,
                family_n: (!no_families).then_some(family_n),
            };
            commands::scan::run(kind, &options, path.as_deref(), places, out)
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Writes to `path` when given, else to `out`.
pub(crate) fn emit(
    path: Option<&std::path::Path>,
    out: &mut dyn Write,
    text: &str,
) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| CliError::io(format!("cannot write {}", p.display()), e)),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| CliError::io("cannot write output", e)),
    }
}
