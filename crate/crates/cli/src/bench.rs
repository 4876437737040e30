use std::time::Instant;

use serde::Serialize;

use compsum_core::compsum::{generating_poly_bruteforce_with, generating_poly_recurrence};

use crate::output::{emit_json, CliError};
use crate::{Format, GlobalOpts};

#[derive(clap::Args, Debug)]
pub struct BenchArgs {
    #[arg(long)]
    n_max: u32,
}

#[derive(Serialize)]
struct Row {
    n: u32,
    compositions: u64,
    bruteforce_ns: u128,
    recurrence_ns: u128,
    equal: bool,
}

pub fn run(args: &BenchArgs, global: &GlobalOpts) -> Result<bool, CliError> {
    if args.n_max == 0 {
        return Err(CliError::Usage("--n-max must be at least 1".into()));
    }
    if global.format == Format::Latex {
        return Err(CliError::Usage(
            "bench supports --format json or text".into(),
        ));
    }
    let top = args.n_max.min(global.bruteforce_cap);
    if global.format == Format::Text {
        println!(
            "{:>4} {:>12} {:>16} {:>16} {:>6}",
            "n", "compositions", "bruteforce_ns", "recurrence_ns", "equal"
        );
    }
    let mut all_equal = true;
    for n in 1..=top {
        let start = Instant::now();
        let brute = generating_poly_bruteforce_with(n, global.brute_force())?;
        let bruteforce_ns = start.elapsed().as_nanos();
        let start = Instant::now();
        let recurrence = generating_poly_recurrence(n)?;
        let recurrence_ns = start.elapsed().as_nanos();
        let row = Row {
            n,
            compositions: 1u64 << (n - 1),
            bruteforce_ns,
            recurrence_ns,
            equal: brute == recurrence,
        };
        all_equal &= row.equal;
        match global.format {
            Format::Json => emit_json(&row),
            _ => println!(
                "{:>4} {:>12} {:>16} {:>16} {:>6}",
                row.n, row.compositions, row.bruteforce_ns, row.recurrence_ns, row.equal
            ),
        }
    }
    Ok(all_equal)
}
