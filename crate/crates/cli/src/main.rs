use std::process::ExitCode;

use clap::Parser;
use vpower::{run, Cli, EXIT_BAD_INPUT, THREADS_ENV};

fn main() -> ExitCode {
    if let Ok(value) = std::env::var(THREADS_ENV) {
        let threads = match value.trim().parse::<usize>() {
            Ok(t) if t > 0 => t,
            _ => {
                eprintln!("error: {THREADS_ENV} must be a positive integer, got {value:?}");
                return ExitCode::from(EXIT_BAD_INPUT as u8);
            }
        };
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .expect("global pool is configured once");
    }
    let cli = Cli::parse();
    let code = run(
        cli,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}
