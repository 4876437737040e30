//! `compsum`: verification sweeps, single sums, polynomial and series
//! printing, and a brute-force vs. recurrence benchmark.
//!
//! Exit codes: 0 when every check passes, 1 when any check fails, 2 on a
//! usage or parameter error.

mod bench;
mod output;
mod poly;
mod series;
mod verify;

pub use crate::output::CliError;

use clap::{Parser, Subcommand, ValueEnum};
use compsum_core::compsum::{BruteForce, DEFAULT_BRUTEFORCE_CAP};
use compsum_core::sampling::DEFAULT_SEED;
use compsum_core::Rational;

#[derive(Parser, Debug)]
#[command(
    name = "compsum",
    version,
    about = "Exact composition-sum identity checks"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    global: GlobalOpts,
}

#[derive(clap::Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Output format; `text` is for humans and may change between versions.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Seed for every randomized check.
    #[arg(long, env = "COMPSUM_SEED", default_value_t = DEFAULT_SEED, global = true)]
    pub seed: u64,

    /// Largest n for which compositions are enumerated.
    #[arg(long, default_value_t = DEFAULT_BRUTEFORCE_CAP, global = true,
          value_parser = clap::value_parser!(u32).range(1..))]
    pub bruteforce_cap: u32,

    /// Spread enumeration and sweep items across worker threads.
    #[arg(long, global = true)]
    pub parallel: bool,
}

impl GlobalOpts {
    pub fn brute_force(&self) -> BruteForce {
        BruteForce {
            cap: self.bruteforce_cap,
            parallel: self.parallel,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run check suites for every n up to --n-max.
    Verify(verify::VerifyArgs),
    /// Print P_n and its closed-form factorization.
    Poly(poly::PolyArgs),
    /// Print S(k,l,n).
    Sum(SumArgs),
    /// Print both sides of the gauge identity for (alpha, beta, gamma).
    Series(series::SeriesArgs),
    /// Time brute force against the recurrence.
    Bench(bench::BenchArgs),
}

#[derive(clap::Args, Debug)]
struct SumArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    #[arg(long)]
    l: u32,
    #[arg(long)]
    k: u32,
}

fn run_sum(args: &SumArgs, global: &GlobalOpts) -> Result<bool, CliError> {
    if args.n > global.bruteforce_cap {
        return Err(CliError::Usage(format!(
            "--n {} exceeds --bruteforce-cap {}",
            args.n, global.bruteforce_cap
        )));
    }
    let value: Rational = compsum_core::compsum::composition_sum(args.k, args.l, args.n)?;
    match global.format {
        Format::Latex => println!("{}", value.to_latex()),
        Format::Json | Format::Text => println!("{value}"),
    }
    Ok(true)
}

/// Runs one parsed invocation; `Ok(false)` means a check failed.
pub fn run(cli: &Cli) -> Result<bool, CliError> {
    match &cli.command {
        Command::Verify(args) => verify::run(args, &cli.global),
        Command::Poly(args) => poly::run(args, &cli.global),
        Command::Sum(args) => run_sum(args, &cli.global),
        Command::Series(args) => series::run(args, &cli.global),
        Command::Bench(args) => bench::run(args, &cli.global),
    }
}

/// 0 when every check passed, 1 when one failed, 2 on a usage or
/// parameter error. Clap's own parse errors also exit with 2.
pub fn exit_code(result: &Result<bool, CliError>) -> u8 {
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(_) => 2,
    }
}
