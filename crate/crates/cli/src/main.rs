use std::process::ExitCode;

use clap::Parser;
use minw_cli::{run, ConfigError, Format, RunConfig, Suite, EXIT_INTERNAL};

/// Exact verification runs for the minimal nilpotent W-algebra of sl(n+1).
#[derive(Parser, Debug)]
#[command(name = "minw", version)]
struct Args {
    /// Rank of gl_n (2..=4); inferred from --lambda when omitted.
    #[arg(long)]
    n: Option<usize>,
    /// Dominant highest weight, comma separated rationals such as "2,0,-1/2".
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Cuspidal shift mu, comma separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    /// Half-width of the lattice box for the cuspidal suite.
    #[arg(long, default_value_t = 3)]
    radius: i64,
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the randomized checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// Omit per-check timings so that output is byte-for-byte reproducible.
    #[arg(long)]
    no_timing: bool,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let config = RunConfig::from_args(
        args.n,
        args.lambda.as_deref(),
        args.mu.as_deref(),
        args.radius,
        args.suite,
        args.seed,
    );
    let mut config = match config {
        Ok(c) => c,
        Err(e) => return fail(&e),
    };
    config.timing = !args.no_timing;
    let report = run(&config);
    let text = match args.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
    };
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_INTERNAL);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(report.exit_code())
}

fn fail(e: &ConfigError) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(e.exit_code())
}
