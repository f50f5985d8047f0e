use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use relmod_cli::{run_experiment, CliError, ExperimentConfig, Format, Task};

/// Relation modules of finite quotients of free groups.
#[derive(Parser, Debug)]
#[command(name = "relmod", version)]
struct Args {
    task: Task,
    /// Group file (JSON).
    #[arg(long)]
    group: Option<PathBuf>,
    /// Built-in corpus group, e.g. `S3`.
    #[arg(long)]
    corpus: Option<String>,
    /// Presentation file (JSON).
    #[arg(long)]
    presentation: Option<PathBuf>,
    /// Idempotent file (JSON) used instead of computed idempotents.
    #[arg(long)]
    idempotents: Option<PathBuf>,
    /// Rank of the free group.
    #[arg(long)]
    n: Option<usize>,
    /// Order of the cyclic quotient for `cyclic-sigma`.
    #[arg(long)]
    m: Option<u64>,
    /// Divisor of `m` selecting σ_d; all divisors when absent.
    #[arg(long)]
    d: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = relmod::fpgrp::DEFAULT_MAX_COSETS)]
    max_cosets: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Catalog automorphism `NAME[:ARGS]`, repeatable.
    #[arg(long = "auto")]
    autos: Vec<String>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let config = ExperimentConfig {
        task: args.task,
        group: args.group,
        corpus: args.corpus,
        presentation: args.presentation,
        idempotents: args.idempotents,
        n: args.n,
        m: args.m,
        d: args.d,
        seed: args.seed,
        max_cosets: args.max_cosets,
        format: args.format,
        autos: args.autos,
    };
    let report = match run_experiment(&config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("relmod {}: {e}", config.task);
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let text = report.render(config.format);
    match &args.out {
        Some(path) => {
            if let Err(source) = std::fs::write(path, &text) {
                let e = CliError::Io {
                    path: path.display().to_string(),
                    source,
                };
                eprintln!("relmod {}: {e}", config.task);
                return ExitCode::from(e.exit_code() as u8);
            }
        }
        None => {
            // a closed pipe (`relmod ... | head`) is not an error
            let mut out = std::io::stdout().lock();
            if let Err(e) = out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("relmod {}: writing output: {e}", config.task);
                    return ExitCode::from(2);
                }
            }
        }
    }
    for f in &report.assertion_failures {
        eprintln!("relmod {}: assertion failed: {f}", config.task);
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
