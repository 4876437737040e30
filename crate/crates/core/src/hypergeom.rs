//! Hypergeometric and binomial series, the gauge map `(alpha, beta, gamma)
//! -> (u_hat, v_hat)`, and exact checks of
//!
//! - the gauge identity `f(u_hat, v_hat, gamma; z) =
//!   (1-z)^((alpha+beta+gamma)/2) F(alpha, beta, 1-gamma; z)`;
//! - the ODE satisfied by `f`, by substituting the series back in;
//! - the factor identities that turn `P_n(u_hat, v_hat)` into Pochhammer
//!   products.
//!
//! All parameters are rationals; polynomial identities in the parameters
//! are tested at seeded random points.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::compsum::FactorData;
use crate::error::{Error, Result};
use crate::exactmath::{general_binomial, Rational};
use crate::polynomials::Series;
use crate::sampling::RationalSampler;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergeometricParams {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
}

impl HypergeometricParams {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Self {
        HypergeometricParams { alpha, beta, gamma }
    }

    /// `F(alpha, beta, 1-gamma)` and the `f` recurrence are both defined
    /// through `z^order` iff `gamma` is not an integer in `1..=order`.
    pub fn check_admissible(&self, order: usize) -> Result<()> {
        check_gamma(&self.gamma, order)
    }

    fn to_map(&self) -> BTreeMap<String, Rational> {
        BTreeMap::from([
            ("alpha".to_string(), self.alpha.clone()),
            ("beta".to_string(), self.beta.clone()),
            ("gamma".to_string(), self.gamma.clone()),
        ])
    }
}

fn check_gamma(gamma: &Rational, order: usize) -> Result<()> {
    match gamma.to_i64() {
        Some(g) if g >= 1 && g as u64 <= order as u64 => Err(Error::Inadmissible(format!(
            "gamma = {g} is an integer in 1..={order}: the f recurrence divides by zero at z^{g} \
             and (1-gamma)_n vanishes for n >= {g}"
        ))),
        _ => Ok(()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaugeParams {
    pub u_hat: Rational,
    pub v_hat: Rational,
}

/// `u_hat = (a+b+g)(2-a-b-g)/4`, `v_hat = (a-b-g)(a-b+g)/4`.
pub fn gauge_params(params: &HypergeometricParams) -> GaugeParams {
    let HypergeometricParams { alpha, beta, gamma } = params;
    let quarter = Rational::new(1, 4).expect("nonzero");
    let s = alpha + beta + gamma.clone();
    let u_hat = &quarter * &(&s * &(Rational::from(2) - &s));
    let d = alpha - beta;
    let v_hat = &quarter * &(&(&d - gamma) * &(&d + gamma));
    GaugeParams { u_hat, v_hat }
}

/// `F(a, b, c; z) = sum (a)_n (b)_n / (n! (c)_n) z^n` through `z^order`.
pub fn hypergeometric_series(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    order: usize,
) -> Result<Series> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = Rational::one();
    coeffs.push(term.clone());
    for n in 0..order {
        let k = Rational::from(n);
        let lower = c + &k;
        if lower.is_zero() {
            return Err(Error::Inadmissible(format!(
                "lower parameter c = {c}: (c)_{} = 0",
                n + 1
            )));
        }
        let upper = &(a + &k) * &(b + &k);
        term = &(&term * &upper) / &(&lower * &Rational::from(n + 1));
        coeffs.push(term.clone());
    }
    Series::new(coeffs)
}

/// `(1-z)^e = sum (-1)^n binom(e, n) z^n` through `z^order`.
pub fn binomial_series(e: &Rational, order: usize) -> Series {
    Series::from_fn(order, |n| {
        let c = general_binomial(e, n as u32);
        if n % 2 == 1 {
            -c
        } else {
            c
        }
    })
}

/// Coefficients of the solution `f(u, v, gamma; z)` with `f(0) = 1` from
/// `n (gamma - n) f_n = sum_{i<n} ((n-i) u + v) f_i`.
pub fn f_series(u: &Rational, v: &Rational, gamma: &Rational, order: usize) -> Result<Series> {
    check_gamma(gamma, order)?;
    let mut f: Vec<Rational> = vec![Rational::one()];
    for n in 1..=order {
        let mut rhs = Rational::zero();
        for (i, fi) in f.iter().enumerate() {
            let weight = &(u * &Rational::from(n - i)) + v;
            rhs += weight * fi;
        }
        let divisor = Rational::from(n) * (gamma - &Rational::from(n));
        f.push(rhs.checked_div(&divisor)?);
    }
    Series::new(f)
}

/// Left side of the ODE with `f_series` substituted, through `z^order`:
/// `z^2 f'' + (1-gamma) z f' + (v z/(1-z) + u z/(1-z)^2) f`.
pub fn ode_residual(u: &Rational, v: &Rational, gamma: &Rational, order: usize) -> Result<Series> {
    let f = f_series(u, v, gamma, order)?;
    let df = f.differentiate();
    let d2f = df.differentiate();
    let second = d2f.shift().shift();
    let first = df.shift().scale(&(Rational::one() - gamma));
    // z/(1-z) = sum_{n>0} z^n and z/(1-z)^2 = sum_{n>0} n z^n.
    let potential = Series::from_fn(order, |n| {
        if n == 0 {
            Rational::zero()
        } else {
            v + &(u * &Rational::from(n))
        }
    });
    let zeroth = potential.mul(&f);
    Ok(second.add(&first).add(&zeroth).truncate(order))
}

/// Outcome of a series or identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub params: BTreeMap<String, Rational>,
    pub order: usize,
    pub pass: bool,
    pub first_mismatch: Option<usize>,
}

/// Both sides of the gauge identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaugeSides {
    pub f_side: Series,
    /// `F(alpha, beta, 1-gamma; z)` before the binomial factor.
    pub hypergeometric: Series,
    pub product_side: Series,
}

pub fn gauge_sides(params: &HypergeometricParams, order: usize) -> Result<GaugeSides> {
    params.check_admissible(order)?;
    let GaugeParams { u_hat, v_hat } = gauge_params(params);
    let f_side = f_series(&u_hat, &v_hat, &params.gamma, order)?;
    let exponent = &(&params.alpha + &params.beta + params.gamma.clone()) / &Rational::from(2);
    let lower = Rational::one() - &params.gamma;
    let hyper = hypergeometric_series(&params.alpha, &params.beta, &lower, order)?;
    let product_side = binomial_series(&exponent, order).mul(&hyper);
    Ok(GaugeSides {
        f_side,
        hypergeometric: hyper,
        product_side,
    })
}

pub fn verify_gauge_identity(
    params: &HypergeometricParams,
    order: usize,
) -> Result<VerificationReport> {
    let sides = gauge_sides(params, order)?;
    let first_mismatch = sides.f_side.first_mismatch(&sides.product_side);
    Ok(VerificationReport {
        check: "gauge".into(),
        params: params.to_map(),
        order,
        pass: first_mismatch.is_none(),
        first_mismatch,
    })
}

pub fn verify_ode(
    u: &Rational,
    v: &Rational,
    gamma: &Rational,
    order: usize,
) -> Result<VerificationReport> {
    let residual = ode_residual(u, v, gamma, order)?;
    let first_mismatch = residual.coeffs().iter().position(|c| !c.is_zero());
    Ok(VerificationReport {
        check: "ode".into(),
        params: BTreeMap::from([
            ("u".to_string(), u.clone()),
            ("v".to_string(), v.clone()),
            ("gamma".to_string(), gamma.clone()),
        ]),
        order,
        pass: first_mismatch.is_none(),
        first_mismatch,
    })
}

/// Differences `lhs - rhs` of the factor identities for `n` at the given
/// parameters: one per `0 <= i < n/2` for
/// `(U+q_i)(U+q_{i+1}) + r_i u_hat = (a+i)(b+i)(a+n-1-i)(b+n-1-i)` with
/// `U = u_hat + v_hat`, then, for odd `n = 2m+1`, one for
/// `U + q_m = -(a+m)(b+m)`.
pub fn factor_identity_residuals(
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
    n: u32,
) -> Result<Vec<Rational>> {
    let data = FactorData::new(n)?;
    let params = HypergeometricParams::new(alpha.clone(), beta.clone(), gamma.clone());
    let GaugeParams { u_hat, v_hat } = gauge_params(&params);
    let sum = &u_hat + &v_hat;
    let shift = |x: &Rational, k: u64| x + &Rational::from(k);
    let n64 = n as u64;
    let mut out = Vec::new();
    for i in 0..data.m as usize {
        let i64_ = i as u64;
        let lhs = &(&shift(&sum, data.q[i]) * &shift(&sum, data.q[i + 1]))
            + &(&u_hat * &Rational::from(data.r[i]));
        let rhs = shift(alpha, i64_)
            * shift(beta, i64_)
            * shift(alpha, n64 - 1 - i64_)
            * shift(beta, n64 - 1 - i64_);
        out.push(lhs - rhs);
    }
    if n % 2 == 1 {
        let m = data.m as u64;
        let lhs = shift(&sum, data.q[data.m as usize]);
        let rhs = -(shift(alpha, m) * shift(beta, m));
        out.push(lhs - rhs);
    }
    Ok(out)
}

/// The factor identities at the residue point `gamma = n`.
///
/// They do not hold for other `gamma`: each difference carries a factor
/// `(gamma - n)`.
pub fn factor_identity_check(alpha: &Rational, beta: &Rational, n: u32) -> Result<bool> {
    Ok(
        factor_identity_residuals(alpha, beta, &Rational::from(n), n)?
            .iter()
            .all(Rational::is_zero),
    )
}

const MAX_REJECTIONS: usize = 10_000;

/// `count` random admissible `(alpha, beta, gamma)` for series work through
/// `z^order`.
pub fn random_params(
    sampler: &mut RationalSampler,
    count: usize,
    order: usize,
) -> Vec<HypergeometricParams> {
    (0..count)
        .map(|_| {
            let alpha = sampler.rational();
            let beta = sampler.rational();
            let gamma = sampler
                .rational_where(MAX_REJECTIONS, |g| check_gamma(g, order).is_ok())
                .expect("most rationals are admissible");
            HypergeometricParams::new(alpha, beta, gamma)
        })
        .collect()
}

pub fn gauge_sweep(seed: u64, points: usize, order: usize) -> Result<Vec<VerificationReport>> {
    let mut sampler = RationalSampler::new(seed);
    random_params(&mut sampler, points, order)
        .iter()
        .map(|p| verify_gauge_identity(p, order))
        .collect()
}

pub fn ode_sweep(seed: u64, points: usize, order: usize) -> Result<Vec<VerificationReport>> {
    let mut sampler = RationalSampler::new(seed);
    random_params(&mut sampler, points, order)
        .iter()
        // (alpha, beta) double as (u, v): the ODE check needs no gauge.
        .map(|p| verify_ode(&p.alpha, &p.beta, &p.gamma, order))
        .collect()
}

/// Factor identities at `points` random `(alpha, beta)` for one `n`.
pub fn factor_sweep(seed: u64, points: usize, n: u32) -> Result<VerificationReport> {
    let mut sampler = RationalSampler::new(seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut first_mismatch = None;
    for idx in 0..points {
        let alpha = sampler.rational();
        let beta = sampler.rational();
        if !factor_identity_check(&alpha, &beta, n)? {
            first_mismatch = Some(idx);
            break;
        }
    }
    Ok(VerificationReport {
        check: "factors".into(),
        params: BTreeMap::from([("n".to_string(), Rational::from(n))]),
        order: points,
        pass: first_mismatch.is_none(),
        first_mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::pochhammer;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn params(a: &str, b: &str, g: &str) -> HypergeometricParams {
        HypergeometricParams::new(r(a), r(b), r(g))
    }

    #[test]
    fn hypergeometric_coefficients() {
        let (a, b, c) = (r("2/3"), r("-5/2"), r("7/4"));
        let f = hypergeometric_series(&a, &b, &c, 6).unwrap();
        assert_eq!(f.coeff(0), &Rational::one());
        assert_eq!(f.coeff(1), &(&(&a * &b) / &c));
        // Pochhammer definition, term by term.
        for n in 0..=6u32 {
            let expected = pochhammer(&a, n) * pochhammer(&b, n)
                / (Rational::from(crate::exactmath::factorial(n)) * pochhammer(&c, n));
            assert_eq!(f.coeff(n as usize), &expected);
        }
    }

    #[test]
    fn hypergeometric_terminates_for_negative_integer_alpha() {
        let f = hypergeometric_series(&r("-1"), &r("1/2"), &r("6/7"), 8).unwrap();
        assert!(f.coeffs()[2..].iter().all(Rational::is_zero));
        for d in 1..=5i64 {
            let f = hypergeometric_series(&Rational::from(-d), &r("1/3"), &r("2/5"), 12).unwrap();
            let nonzero = f.coeffs().iter().filter(|c| !c.is_zero()).count();
            assert_eq!(nonzero as i64, d + 1);
        }
    }

    #[test]
    fn hypergeometric_rejects_pochhammer_zero() {
        assert!(matches!(
            hypergeometric_series(&r("1"), &r("1"), &r("0"), 3),
            Err(Error::Inadmissible(_))
        ));
        assert!(matches!(
            hypergeometric_series(&r("1"), &r("1"), &r("-2"), 3),
            Err(Error::Inadmissible(_))
        ));
        // (-2)_n only vanishes from n = 3 on.
        assert!(hypergeometric_series(&r("1"), &r("1"), &r("-2"), 2).is_ok());
    }

    #[test]
    fn binomial_series_values() {
        let one = binomial_series(&r("1"), 4);
        assert_eq!(one.coeffs(), &[r("1"), r("-1"), r("0"), r("0"), r("0")]);
        let half = binomial_series(&r("1/2"), 3);
        assert_eq!(half.coeffs(), &[r("1"), r("-1/2"), r("-1/8"), r("-1/16")]);
        for order in 0..=12 {
            let sq = binomial_series(&r("1/2"), order).mul(&binomial_series(&r("1/2"), order));
            assert_eq!(sq, binomial_series(&r("1"), order));
        }
    }

    #[test]
    fn gauge_params_values() {
        let g = gauge_params(&params("1", "1", "1"));
        assert_eq!((g.u_hat, g.v_hat), (r("-3/4"), r("-1/4")));
        assert!(gauge_params(&params("1/2", "-3/2", "1")).u_hat.is_zero());
        assert!(gauge_params(&params("5/3", "5/3", "0")).v_hat.is_zero());
    }

    #[test]
    fn f_series_values() {
        let (u, v, g) = (r("2/5"), r("-1/3"), r("7/2"));
        let f = f_series(&u, &v, &g, 5).unwrap();
        assert_eq!(f.coeff(0), &Rational::one());
        assert_eq!(f.coeff(1), &(&(&u + &v) / &(&g - &Rational::one())));
        assert_eq!(f_series(&r("0"), &r("0"), &g, 6).unwrap(), Series::one(6));
        assert_eq!(
            f_series(&r("1"), &r("1"), &r("3"), 1).unwrap().coeff(1),
            &r("1")
        );
        assert!(matches!(
            f_series(&u, &v, &r("3"), 5),
            Err(Error::Inadmissible(_))
        ));
    }

    #[test]
    fn f_series_matches_polynomial_table() {
        let gamma = r("-5/3");
        let table = crate::compsum::FCoefficientTable::build(gamma.clone(), 7).unwrap();
        let (u, v) = (r("3/2"), r("-4/7"));
        assert_eq!(
            table.eval_series(&u, &v),
            f_series(&u, &v, &gamma, 7).unwrap()
        );
    }

    #[test]
    fn gauge_identity_examples() {
        let report = verify_gauge_identity(&params("1/2", "1/3", "1/5"), 12).unwrap();
        assert!(report.pass);
        assert_eq!(report.first_mismatch, None);
        assert!(matches!(
            verify_gauge_identity(&params("1", "1", "1"), 12),
            Err(Error::Inadmissible(_))
        ));
        let terminating = params("-1", "1/2", "1/7");
        assert!(verify_gauge_identity(&terminating, 8).unwrap().pass);
    }

    #[test]
    fn gauge_identity_detects_a_wrong_exponent() {
        // Same construction with the exponent off by one must fail at z^1.
        let p = params("1/2", "1/3", "1/5");
        let sides = gauge_sides(&p, 6).unwrap();
        let wrong = sides.product_side.mul(&binomial_series(&r("1"), 6));
        assert_eq!(sides.f_side.first_mismatch(&wrong), Some(1));
    }

    #[test]
    fn ode_residual_vanishes() {
        assert!(ode_residual(&r("1"), &r("1"), &r("1/2"), 16)
            .unwrap()
            .is_zero());
        assert!(ode_residual(&r("0"), &r("0"), &r("-3"), 10)
            .unwrap()
            .is_zero());
        assert_eq!(
            ode_residual(&r("1"), &r("1"), &r("1/2"), 16)
                .unwrap()
                .order(),
            16
        );
    }

    #[test]
    fn ode_residual_detects_a_perturbed_solution() {
        let (u, v, g) = (r("1"), r("2"), r("1/2"));
        let order = 6;
        let mut f = f_series(&u, &v, &g, order).unwrap().coeffs().to_vec();
        f[3] += r("1/1000");
        let f = Series::new(f).unwrap();
        let df = f.differentiate();
        let residual = df
            .differentiate()
            .shift()
            .shift()
            .add(&df.shift().scale(&(Rational::one() - &g)))
            .add(
                &Series::from_fn(order, |n| {
                    if n == 0 {
                        r("0")
                    } else {
                        &v + &(&u * &Rational::from(n))
                    }
                })
                .mul(&f),
            );
        assert_eq!(residual.coeffs().iter().position(|c| !c.is_zero()), Some(3));
    }

    #[test]
    fn factor_identity_examples() {
        let (a, b) = (r("3/7"), r("-5/2"));
        // n = 2, i = 0: (U)(U+1) + u_hat = a b (a+1) (b+1) at gamma = 2.
        let g = gauge_params(&HypergeometricParams::new(a.clone(), b.clone(), r("2")));
        let s = &g.u_hat + &g.v_hat;
        let lhs = &(&s * &(&s + &Rational::one())) + &g.u_hat;
        let rhs = &a * &b * (&a + &Rational::one()) * (&b + &Rational::one());
        assert_eq!(lhs, rhs);
        // n = 3, odd tail: U + 2 = -(a+1)(b+1) at gamma = 3.
        let g = gauge_params(&HypergeometricParams::new(a.clone(), b.clone(), r("3")));
        assert_eq!(
            &g.u_hat + &g.v_hat + r("2"),
            -((&a + &Rational::one()) * (&b + &Rational::one()))
        );
        assert!(factor_identity_check(&a, &b, 2).unwrap());
        assert!(factor_identity_check(&a, &b, 3).unwrap());
        assert!(factor_identity_check(&r("0"), &b, 4).unwrap());
    }

    #[test]
    fn factor_identities_need_gamma_at_the_residue_point() {
        let (a, b, g) = (r("3/7"), r("-5/2"), r("1/3"));
        for n in 2..=6 {
            let residuals = factor_identity_residuals(&a, &b, &g, n).unwrap();
            assert!(residuals.iter().any(|x| !x.is_zero()), "n = {n}");
        }
    }

    #[test]
    fn sweeps_are_reproducible() {
        let a = gauge_sweep(5, 4, 8).unwrap();
        let b = gauge_sweep(5, 4, 8).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|r| r.pass));
        assert!(ode_sweep(5, 4, 8).unwrap().iter().all(|r| r.pass));
        assert!(factor_sweep(5, 10, 7).unwrap().pass);
    }

    #[test]
    fn report_json_shape() {
        let report = verify_gauge_identity(&params("1/2", "1/3", "1/5"), 2).unwrap();
        assert_eq!(
            serde_json::to_string(&report).unwrap(),
            r#"{"check":"gauge","params":{"alpha":"1/2","beta":"1/3","gamma":"1/5"},"order":2,"pass":true,"first_mismatch":null}"#
        );
    }
}
