use std::path::PathBuf;
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, ValueEnum};
use hcell_cli::{parse_spec, run, Command, Flags};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Output {
    Text,
    Json,
}

/// Exact verification pipelines for covering-quiver Hopf algebras and their
/// bimodule bicategories.
#[derive(Parser, Debug)]
#[command(name = "hcell", version)]
struct Cli {
    command: Command,
    /// JSON spec file; optional for `classify` and `schur` when `--group` is given.
    spec: Option<PathBuf>,
    /// Use the extended configuration with the semisimple factor adjoined.
    #[arg(long)]
    tilde: bool,
    #[arg(long, value_enum, default_value = "text")]
    output: Output,
    /// Group-only spec for the classification commands.
    #[arg(long)]
    group: Option<PathBuf>,
    /// Seed for sampled checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Include wall-clock time in the report.
    #[arg(long)]
    timing: bool,
}

fn execute(cli: &Cli) -> Result<hcell_cli::Report> {
    let start = Instant::now();
    let spec = cli.spec.as_deref().map(parse_spec).transpose().context("reading the input file")?;
    let group = cli.group.as_deref().map(parse_spec).transpose().context("reading the group file")?;
    let flags = Flags { tilde: cli.tilde, seed: cli.seed, group };
    let mut report = run(cli.command, spec.as_ref(), &flags)?;
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(report) => {
            let text = match cli.output {
                Output::Text => report.to_text(),
                Output::Json => report.to_json() + "\n",
            };
            // A closed pipe (`hcell ... | head`) is not an error worth reporting.
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
