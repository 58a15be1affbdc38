//! `realtoric`: Betti numbers of real toric varieties of Weyl chambers.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 invalid input or a run
//! refused as over budget.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use realtoric::homology::Coefficients;
use realtoric::pipeline::{
    betti_real_toric, render_formula, render_report, render_verification, verify, Cache, ComputeOptions, Format,
    Level, Strategy, CACHE_DIR_ENV,
};
use realtoric::sequences::closed_form_table;
use realtoric::Family;

/// Largest rank `compute` runs without `--force`.
const COMPUTE_MAX_N: usize = 7;
/// Largest rank `verify --level full` runs without `--force`.
const VERIFY_FULL_MAX_N: usize = 6;

#[derive(Parser)]
#[command(name = "realtoric", version, about = "Betti numbers of real toric varieties of types A-D")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the closed-form Betti numbers and Euler characteristic.
    Formula {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value = "md")]
        format: Format,
    },
    /// Compute Betti numbers from the subcomplexes K_S.
    Compute {
        #[command(flatten)]
        target: Target,
        /// q, z or gfP for a prime P.
        #[arg(long = "coeff", default_value = "q")]
        coefficients: Coefficients,
        #[arg(long, default_value = "orbit")]
        strategy: Strategy,
        #[arg(long, default_value = "md")]
        format: Format,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Cross-check closed forms, tables and computed homology.
    Verify {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value = "quick")]
        level: Level,
        #[arg(long, default_value = "md")]
        format: Format,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args)]
struct Target {
    /// Root system family: A, B, C or D.
    #[arg(long)]
    family: Family,
    /// Rank.
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct RunArgs {
    /// Worker threads (default: one per core).
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,
    /// Do not read or write the cache.
    #[arg(long)]
    no_cache: bool,
    /// Run ranks beyond the default budget.
    #[arg(long)]
    force: bool,
}

impl RunArgs {
    fn options(&self) -> ComputeOptions {
        let cache = if self.no_cache {
            None
        } else {
            self.cache_dir.clone().or_else(Cache::default_dir).map(Cache::new)
        };
        ComputeOptions { jobs: self.jobs, cache }
    }
}

enum Failure {
    Mismatch,
    Invalid(String),
}

impl From<realtoric::Error> for Failure {
    fn from(e: realtoric::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn over_budget(what: &str, n: usize, max: usize) -> Failure {
    Failure::Invalid(format!("{what} with n = {n} > {max} is over budget; pass --force to run it anyway"))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Formula { target, format } => {
            let table = closed_form_table(target.family, target.n)?;
            print!("{}", render_formula(&table, format));
            Ok(())
        }
        Command::Compute {
            target,
            coefficients,
            strategy,
            format,
            run,
        } => {
            let Target { family, n } = target;
            family.require_complex(n)?;
            if n > COMPUTE_MAX_N && !run.force {
                return Err(over_budget("compute", n, COMPUTE_MAX_N));
            }
            let report = betti_real_toric(family, n, coefficients, strategy, &run.options())?;
            print!("{}", render_report(&report, format)?);
            if !report.aggregation_holds() {
                eprintln!("error: per-subset ranks do not add up to the reported Betti numbers");
                return Err(Failure::Mismatch);
            }
            if coefficients == Coefficients::Q && !report.matches_closed_form()? {
                eprintln!("error: computed Betti numbers differ from the closed form");
                return Err(Failure::Mismatch);
            }
            Ok(())
        }
        Command::Verify {
            target,
            level,
            format,
            run,
        } => {
            let Target { family, n } = target;
            family.check_rank(n)?;
            if level == Level::Full {
                family.require_complex(n)?;
                if n > VERIFY_FULL_MAX_N && !run.force {
                    return Err(over_budget("full verification", n, VERIFY_FULL_MAX_N));
                }
            }
            let report = verify(family, n, level, &run.options())?;
            print!("{}", render_verification(&report, format)?);
            if report.overall() {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
