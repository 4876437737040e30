use serde::Serialize;

use compsum_core::hypergeom::{gauge_params, gauge_sides, GaugeParams, HypergeometricParams};
use compsum_core::{Error, Rational, Series};

use crate::output::{emit_json, pass_word, CliError};
use crate::{Format, GlobalOpts};

#[derive(clap::Args, Debug)]
pub struct SeriesArgs {
    #[arg(long, allow_hyphen_values = true)]
    alpha: Rational,
    #[arg(long, allow_hyphen_values = true)]
    beta: Rational,
    #[arg(long, allow_hyphen_values = true)]
    gamma: Rational,
    #[arg(long, default_value_t = 24)]
    order: usize,
}

#[derive(Serialize)]
struct SeriesOutput<'a> {
    params: &'a HypergeometricParams,
    gauge: GaugeParams,
    order: usize,
    f_series: Series,
    hypergeometric: Series,
    product_side: Series,
    #[serde(rename = "match")]
    matches: bool,
    first_mismatch: Option<usize>,
}

pub fn run(args: &SeriesArgs, global: &GlobalOpts) -> Result<bool, CliError> {
    if global.format == Format::Latex {
        return Err(CliError::Usage(
            "series supports --format json or text".into(),
        ));
    }
    let params =
        HypergeometricParams::new(args.alpha.clone(), args.beta.clone(), args.gamma.clone());
    let sides = gauge_sides(&params, args.order).map_err(|e| match e {
        Error::Inadmissible(reason) => {
            CliError::Usage(format!("inadmissible parameters: {reason}"))
        }
        other => CliError::Core(other),
    })?;
    let first_mismatch = sides.f_side.first_mismatch(&sides.product_side);
    let matches = first_mismatch.is_none();
    let out = SeriesOutput {
        params: &params,
        gauge: gauge_params(&params),
        order: args.order,
        f_series: sides.f_side,
        hypergeometric: sides.hypergeometric,
        product_side: sides.product_side,
        matches,
        first_mismatch,
    };
    match global.format {
        Format::Json => emit_json(&out),
        _ => {
            println!("u_hat = {}, v_hat = {}", out.gauge.u_hat, out.gauge.v_hat);
            println!("f       = {:?}", out.f_series);
            println!("product = {:?}", out.product_side);
            println!(
                "{} gauge identity through z^{}",
                pass_word(matches),
                args.order
            );
        }
    }
    Ok(matches)
}
