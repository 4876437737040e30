use clap::ValueEnum;
use serde::Serialize;

use compsum_core::compsum::{
    generating_poly_bruteforce_with, generating_poly_factored, generating_poly_recurrence,
};
use compsum_core::{BiPoly, FactorData, GeneratingPolynomial, Parity};

use crate::output::{emit_json, CliError};
use crate::{Format, GlobalOpts};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Recurrence,
    Brute,
    Factored,
}

#[derive(clap::Args, Debug)]
pub struct PolyArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,

    #[arg(long, value_enum, default_value_t = Route::Recurrence)]
    route: Route,
}

#[derive(Serialize)]
struct PolyOutput<'a> {
    n: u32,
    poly: &'a BiPoly,
    route: Route,
    factors: &'a FactorData,
    /// `(n!)^2`, as an exact decimal string.
    normalizer: String,
}

pub fn run(args: &PolyArgs, global: &GlobalOpts) -> Result<bool, CliError> {
    let n = args.n;
    let pn: GeneratingPolynomial = match args.route {
        Route::Recurrence => generating_poly_recurrence(n)?,
        Route::Factored => generating_poly_factored(n)?,
        Route::Brute => {
            if n > global.bruteforce_cap {
                return Err(CliError::Usage(format!(
                    "--route brute needs n <= --bruteforce-cap ({})",
                    global.bruteforce_cap
                )));
            }
            generating_poly_bruteforce_with(n, global.brute_force())?
        }
    };
    let factors = FactorData::new(n)?;
    let normalizer = factors.normalizer().to_string();
    match global.format {
        Format::Json => emit_json(&PolyOutput {
            n,
            poly: &pn.poly,
            route: args.route,
            factors: &factors,
            normalizer,
        }),
        Format::Text => {
            println!("P_{n} = {}", pn.poly.to_text());
            println!("q = {:?}", factors.q);
            println!("r = {:?}", factors.r);
            println!("(n!)^2 = {normalizer}");
        }
        Format::Latex => {
            println!("P_{{{n}}}(u,v) = {}", pn.poly.to_latex());
            println!("({n}!)^2 P_{{{n}}}(u,v) = {}", latex_product(&factors));
            let q: Vec<String> = factors
                .q
                .iter()
                .enumerate()
                .map(|(i, q)| format!("q_{i} = {q}"))
                .collect();
            let r: Vec<String> = factors
                .r
                .iter()
                .enumerate()
                .map(|(i, r)| format!("r_{i} = {r}"))
                .collect();
            println!("{}", q.join(",\\ "));
            if !r.is_empty() {
                println!("{}", r.join(",\\ "));
            }
        }
    }
    Ok(true)
}

fn shifted_sum(q: u64) -> String {
    if q == 0 {
        "(u+v)".into()
    } else {
        format!("(u+v+{q})")
    }
}

/// `\left[(u+v+q_i)(u+v+q_{i+1}) + r_i u\right] ...` with the numbers filled in.
fn latex_product(data: &FactorData) -> String {
    let mut factors: Vec<String> = (0..data.m as usize)
        .map(|i| {
            let r = match data.r[i] {
                1 => "u".to_string(),
                r => format!("{r}u"),
            };
            format!(
                "{}{} + {r}",
                shifted_sum(data.q[i]),
                shifted_sum(data.q[i + 1])
            )
        })
        .collect();
    if data.parity == Parity::Odd {
        factors.push(shifted_sum(data.q[data.m as usize]));
    }
    if factors.len() == 1 {
        return factors.pop().expect("one factor");
    }
    factors
        .into_iter()
        .map(|f| {
            if f.contains(" + ") {
                format!("\\left[{f}\\right]")
            } else {
                f
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}
