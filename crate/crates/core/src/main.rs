use clap::{Parser, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;
use wq_core::report::{self, SessionConfig};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Exact checks for twisted quantum groups, q-W algebras and slices.
#[derive(Parser, Debug)]
#[command(name = "wq", version)]
struct Cli {
    /// TOML session config.
    #[arg(long)]
    config: PathBuf,
    /// One of root-system, realization, algebra-check, rmatrix-check, wq, slice, all.
    #[arg(long, default_value = "all")]
    command: String,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Overrides the seed in the config.
    #[arg(long)]
    seed: Option<u64>,
    /// Record per-section wall-clock time (makes reports non-reproducible).
    #[arg(long)]
    timing: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let text = match std::fs::read_to_string(&cli.config) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("wq: cannot read {}: {}", cli.config.display(), e);
            return ExitCode::from(2);
        }
    };
    let mut cfg = match SessionConfig::parse(&text) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("wq: {}: {}", cli.config.display(), e);
            return ExitCode::from(2);
        }
    };
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    let rep = match report::run_timed(&cli.command, &cfg, cli.timing) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("wq: {}", e);
            return ExitCode::from(2);
        }
    };
    let body = match cli.format {
        Format::Json => rep.to_json(),
        Format::Text => format!("{}\n", rep),
    };
    match &cli.out {
        Some(p) => {
            if let Err(e) = std::fs::write(p, &body) {
                eprintln!("wq: cannot write {}: {}", p.display(), e);
                return ExitCode::from(2);
            }
        }
        None => print!("{}", body),
    }
    if rep.failed() {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
