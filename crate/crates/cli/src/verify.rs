use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;

use compsum_core::compsum::{lemma1_random, theorem1_check, Lemma1Report, Theorem1Report};
use compsum_core::hypergeom::{factor_sweep, gauge_sweep, ode_sweep, VerificationReport};
use compsum_core::identities::{identity_eq1, identity_eq2, identity_pn0v, qr_sum_reports};
use compsum_core::{IdentityReport, Result};

use crate::output::{emit_json, pass_word, CliError};
use crate::{Format, GlobalOpts};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Check {
    Theorem1,
    Eq1,
    Eq2,
    Pn0v,
    Lemma1,
    Gauge,
    Ode,
    Factors,
    Qr,
}

#[derive(clap::Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    n_max: u32,

    /// Comma-separated subset of checks; all of them by default.
    #[arg(long, value_enum, value_delimiter = ',')]
    checks: Vec<Check>,

    /// Random parameter points for gauge, ode and factors.
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..))]
    points: u32,

    /// Series order for gauge and ode.
    #[arg(long, default_value_t = 24, value_parser = clap::value_parser!(u32).range(1..))]
    order: u32,

    /// Random oracles per n for lemma1.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
    lemma1_seeds: u32,
}

#[derive(Serialize)]
#[serde(untagged)]
enum Line {
    Identity(IdentityReport),
    Theorem1(Theorem1Report),
    Lemma1(Lemma1Report),
    Series(VerificationReport),
}

impl Line {
    fn pass(&self) -> bool {
        match self {
            Line::Identity(r) => r.pass,
            Line::Theorem1(r) => r.pass,
            Line::Lemma1(r) => r.pass,
            Line::Series(r) => r.pass,
        }
    }

    fn text(&self) -> String {
        let verdict = pass_word(self.pass());
        match self {
            Line::Identity(r) => {
                let mut at = format!("n={}", r.n);
                if let Some(l) = r.l {
                    at += &format!(" l={l}");
                }
                if let Some(i) = r.i {
                    at += &format!(" i={i}");
                }
                format!(
                    "{verdict} {} {at} lhs={} rhs={}",
                    r.identity.name(),
                    r.lhs,
                    r.rhs
                )
            }
            Line::Theorem1(r) => {
                format!("{verdict} theorem1 n={} routes={}", r.n, r.routes.join(","))
            }
            Line::Lemma1(r) => format!(
                "{verdict} lemma1 n={} seed={} recursion={} enumeration={}",
                r.n, r.seed, r.recursion, r.enumeration
            ),
            Line::Series(r) => {
                let params: Vec<String> =
                    r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let mismatch = r
                    .first_mismatch
                    .map(|i| format!(" first_mismatch={i}"))
                    .unwrap_or_default();
                format!(
                    "{verdict} {} order={} {}{mismatch}",
                    r.check,
                    r.order,
                    params.join(" ")
                )
            }
        }
    }
}

/// Runs `f` over `items`, in parallel when asked, keeping input order.
fn over<T: Sync, F>(parallel: bool, items: &[T], f: F) -> Result<Vec<Line>>
where
    F: Fn(&T) -> Result<Vec<Line>> + Sync + Send,
{
    let chunks: Result<Vec<Vec<Line>>> = if parallel {
        items.par_iter().map(&f).collect()
    } else {
        items.iter().map(&f).collect()
    };
    Ok(chunks?.into_iter().flatten().collect())
}

fn identity_lines(
    parallel: bool,
    ns: &[u32],
    check: fn(u32, u32) -> Result<IdentityReport>,
) -> Result<Vec<Line>> {
    over(parallel, ns, |&n| {
        (1..=n).map(|l| check(n, l).map(Line::Identity)).collect()
    })
}

pub fn run(args: &VerifyArgs, global: &GlobalOpts) -> std::result::Result<bool, CliError> {
    if args.n_max == 0 {
        return Err(CliError::Usage("--n-max must be at least 1".into()));
    }
    if global.format == Format::Latex {
        return Err(CliError::Usage(
            "verify supports --format json or text".into(),
        ));
    }
    let mut checks = if args.checks.is_empty() {
        Check::value_variants().to_vec()
    } else {
        args.checks.clone()
    };
    checks.sort();
    checks.dedup();

    let par = global.parallel;
    let all: Vec<u32> = (1..=args.n_max).collect();
    // Enumeration-based checks stop at the brute-force cap.
    let enumerable: Vec<u32> = (1..=args.n_max.min(global.bruteforce_cap)).collect();
    let points = args.points as usize;
    let order = args.order as usize;

    let mut all_pass = true;
    for check in checks {
        let lines = match check {
            Check::Theorem1 => over(par, &all, |&n| {
                Ok(vec![Line::Theorem1(theorem1_check(
                    n,
                    global.brute_force(),
                )?)])
            })?,
            Check::Eq1 => identity_lines(par, &enumerable, identity_eq1)?,
            Check::Eq2 => identity_lines(par, &enumerable, identity_eq2)?,
            Check::Pn0v => identity_lines(par, &enumerable, identity_pn0v)?,
            Check::Lemma1 => over(par, &enumerable, |&n| {
                (0..args.lemma1_seeds as u64)
                    .map(|s| lemma1_random(n, global.seed.wrapping_add(s)).map(Line::Lemma1))
                    .collect()
            })?,
            Check::Gauge => gauge_sweep(global.seed, points, order)?
                .into_iter()
                .map(Line::Series)
                .collect(),
            Check::Ode => ode_sweep(global.seed, points, order)?
                .into_iter()
                .map(Line::Series)
                .collect(),
            Check::Factors => over(par, &all, |&n| {
                Ok(vec![Line::Series(factor_sweep(global.seed, points, n)?)])
            })?,
            Check::Qr => {
                let ns: Vec<u32> = all.iter().copied().filter(|&n| n >= 2).collect();
                over(par, &ns, |&n| {
                    Ok(qr_sum_reports(n)?.into_iter().map(Line::Identity).collect())
                })?
            }
        };
        for line in &lines {
            all_pass &= line.pass();
            match global.format {
                Format::Json => emit_json(line),
                _ => println!("{}", line.text()),
            }
        }
    }
    Ok(all_pass)
}
