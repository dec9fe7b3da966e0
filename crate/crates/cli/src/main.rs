use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use parafock::commands::{enumerate, run_verify, transition};
use parafock::config::parse_partition;
use parafock::render::{render_enumerate, render_transition, render_verify};
use parafock::{CliError, Format, JobConfig, SuiteName};

#[derive(Parser)]
#[command(
    name = "parafock",
    version,
    about = "Exact computations in parabosonic Fock spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Number of parabosonic modes.
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Order of the Fock space L(p).
    #[arg(long, default_value_t = 2)]
    p: u32,
    /// Degree: exact degree for enumerate, bound for verify.
    #[arg(long, default_value_t = 3)]
    deg: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the randomized checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the output to FILE instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List the PBW-type basis of one degree.
    Enumerate {
        #[command(flatten)]
        common: Common,
    },
    /// Run verification suites.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = SuiteName::All)]
        suite: SuiteName,
    },
    /// Transition blocks from the GZ basis to the PBW-type basis.
    Transition {
        #[command(flatten)]
        common: Common,
        /// Highest weight, e.g. "4,2,0".
        #[arg(long)]
        lambda: String,
    },
}

enum Outcome {
    Passed,
    Failed,
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn config(c: &Common) -> Result<JobConfig, CliError> {
    JobConfig::new(c.n, c.p, c.deg, c.format, c.seed)
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Enumerate { common } => {
            let cfg = config(&common)?;
            emit(
                &render_enumerate(&enumerate(&cfg)?, cfg.format)?,
                &common.out,
            )?;
            Ok(Outcome::Passed)
        }
        Command::Verify { common, suite } => {
            let cfg = config(&common)?;
            let report = run_verify(&cfg, suite)?;
            emit(&render_verify(&report, cfg.format)?, &common.out)?;
            Ok(if report.passed() {
                Outcome::Passed
            } else {
                Outcome::Failed
            })
        }
        Command::Transition { common, lambda } => {
            let cfg = config(&common)?;
            let report = transition(&cfg, &parse_partition(&lambda)?)?;
            if let Some(message) = &report.message {
                eprintln!("{message}");
            }
            emit(&render_transition(&report, cfg.format)?, &common.out)?;
            Ok(Outcome::Passed)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Outcome::Passed) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e @ CliError::Usage(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e @ CliError::Mz(mzops::MzError::NotTriangular(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
