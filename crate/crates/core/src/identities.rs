//! Corollary composition-sum identities, each checked by computing both
//! sides independently. Left-hand sides always come from direct
//! enumeration, never from `P_n`, so these checks corroborate the
//! [`compsum`](crate::compsum) routes instead of restating them.

use serde::{Deserialize, Serialize};

use crate::compositions::{elementary_symmetric, enumerate_compositions, Composition};
use crate::compsum::{composition_sum, FactorData, GeneratingPolynomial};
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::polynomials::{BiPoly, Monomial, Substitution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityKind {
    /// `sum p_1...p_l / (L R) = e_{l-1}(1/(1*2), ..., 1/((n-1)n)) / n`
    Eq1,
    /// `sum (p_1-1)...(p_l-1) / (L R) = (n-1)/n^2 e_{l-1}(r_i/(q_i q_{i+1}), i = 1..m-1)`
    Eq2,
    /// `sum 1 / (L R) = e_{l-1}(1/q_1, ..., 1/q_{n-1}) / n^2`
    Pn0v,
    /// `sum (p_1-1)...(p_l-1) / (L R) = sum_k (-1)^(l-k) S(k,l,n)`
    AlternatingSum,
    /// `[u^l] P_n(u,0) = [u^l] (u/n) prod_{i<n} (u/(i(i+1)) + 1)`
    PnU0Product,
    /// `q_i + q_{i+1} + r_i = i(i+1) + (n-i-1)(n-i)`
    QrSum,
}

impl IdentityKind {
    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Eq1 => "eq1",
            IdentityKind::Eq2 => "eq2",
            IdentityKind::Pn0v => "pn0v",
            IdentityKind::AlternatingSum => "alternating_sum",
            IdentityKind::PnU0Product => "pn_u0_product",
            IdentityKind::QrSum => "qr_sum",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: IdentityKind,
    pub n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<u32>,
    /// Index `i` for per-factor identities.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<u32>,
    pub lhs: Rational,
    pub rhs: Rational,
    pub pass: bool,
}

impl IdentityReport {
    fn new(identity: IdentityKind, n: u32, l: Option<u32>, lhs: Rational, rhs: Rational) -> Self {
        let pass = lhs == rhs;
        IdentityReport {
            identity,
            n,
            l,
            i: None,
            lhs,
            rhs,
            pass,
        }
    }
}

fn check_range(n: u32, l: u32) -> Result<()> {
    if l == 0 || l > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= l <= n, got n = {n}, l = {l}"
        )));
    }
    Ok(())
}

/// `sum weight(p) / (L(p) R(p))` over the `l`-compositions of `n`.
fn weighted_sum(n: u32, l: u32, weight: impl Fn(&Composition) -> Rational) -> Rational {
    enumerate_compositions(n, l)
        .map(|p| {
            let w = weight(&p);
            if w.is_zero() {
                return w;
            }
            w / Rational::from(p.left_product() * p.right_product())
        })
        .sum()
}

fn parts_product(p: &Composition, shift: u32) -> Rational {
    p.parts()
        .iter()
        .map(|&x| Rational::from(x - shift))
        .product()
}

fn unit_fraction(den: u64) -> Rational {
    Rational::new(1, den).expect("positive denominator")
}

pub fn identity_eq1(n: u32, l: u32) -> Result<IdentityReport> {
    check_range(n, l)?;
    let lhs = weighted_sum(n, l, |p| parts_product(p, 0));
    let args: Vec<Rational> = (1..n as u64).map(|i| unit_fraction(i * (i + 1))).collect();
    let rhs = elementary_symmetric(&args, l as usize - 1) * unit_fraction(n as u64);
    Ok(IdentityReport::new(IdentityKind::Eq1, n, Some(l), lhs, rhs))
}

/// The argument list `r_i / (q_i q_{i+1})` runs over `i = 1..m-1` with
/// `m = floor(n/2)`; it is empty for `n <= 3`.
pub fn identity_eq2(n: u32, l: u32) -> Result<IdentityReport> {
    check_range(n, l)?;
    let lhs = weighted_sum(n, l, |p| parts_product(p, 1));
    let data = FactorData::new(n)?;
    let args: Vec<Rational> = (1..data.m as usize)
        .map(|i| Rational::new(data.r[i], data.q[i] * data.q[i + 1]).expect("q_i > 0 for i >= 1"))
        .collect();
    let scale = Rational::new(n - 1, n as u64 * n as u64)?;
    let rhs = elementary_symmetric(&args, l as usize - 1) * scale;
    Ok(IdentityReport::new(IdentityKind::Eq2, n, Some(l), lhs, rhs))
}

pub fn identity_pn0v(n: u32, l: u32) -> Result<IdentityReport> {
    check_range(n, l)?;
    let lhs = weighted_sum(n, l, |_| Rational::one());
    let args: Vec<Rational> = (1..n as u64)
        .map(|i| unit_fraction(i * (n as u64 - i)))
        .collect();
    let rhs = elementary_symmetric(&args, l as usize - 1) * unit_fraction(n as u64 * n as u64);
    Ok(IdentityReport::new(
        IdentityKind::Pn0v,
        n,
        Some(l),
        lhs,
        rhs,
    ))
}

/// Left side of Eq. 2's sum against the signed sum of `S(k,l,n)`.
pub fn identity_alternating_sum(n: u32, l: u32) -> Result<IdentityReport> {
    check_range(n, l)?;
    let lhs = weighted_sum(n, l, |p| parts_product(p, 1));
    let mut rhs = Rational::zero();
    for k in 0..=l {
        let s = composition_sum(k, l, n)?;
        if (l - k).is_multiple_of(2) {
            rhs += s;
        } else {
            rhs -= &s;
        }
    }
    Ok(IdentityReport::new(
        IdentityKind::AlternatingSum,
        n,
        Some(l),
        lhs,
        rhs,
    ))
}

/// `(u/n) prod_{i=1}^{n-1} (u/(i(i+1)) + 1)`, expanded.
pub fn pn_u0_product(n: u32) -> Result<BiPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let mut acc = BiPoly::monomial(1, 0, unit_fraction(n as u64));
    for i in 1..n as u64 {
        let factor = BiPoly::from_terms([
            (Monomial::new(1, 0), unit_fraction(i * (i + 1))),
            (Monomial::new(0, 0), Rational::one()),
        ]);
        acc = &acc * &factor;
    }
    Ok(acc)
}

/// One report per `l` comparing `[u^l]` of the product form with
/// `[u^l] P_n(u, 0)` from the given generating polynomial.
pub fn identity_pn_u0(pn: &GeneratingPolynomial) -> Result<Vec<IdentityReport>> {
    let product = pn_u0_product(pn.n)?;
    let slice = pn.poly.substitute(Substitution::VZero);
    let mut reports: Vec<IdentityReport> = (1..=pn.n)
        .map(|l| {
            IdentityReport::new(
                IdentityKind::PnU0Product,
                pn.n,
                Some(l),
                product.coefficient(l, 0),
                slice.coefficient(l, 0),
            )
        })
        .collect();
    // Anything outside degrees 1..=n must be absent on both sides.
    let stray = |p: &BiPoly| p.terms().any(|(m, _)| m.v != 0 || m.u == 0 || m.u > pn.n);
    if stray(&product) || stray(&slice) {
        for r in &mut reports {
            r.pass = false;
        }
    }
    Ok(reports)
}

/// One report per `0 <= i < floor(n/2)`.
pub fn qr_sum_reports(n: u32) -> Result<Vec<IdentityReport>> {
    let data = FactorData::new(n)?;
    let n64 = n as u64;
    Ok((0..data.m as usize)
        .map(|i| {
            let i64_ = i as u64;
            let lhs = data.q[i] + data.q[i + 1] + data.r[i];
            let rhs = i64_ * (i64_ + 1) + (n64 - i64_ - 1) * (n64 - i64_);
            let mut report = IdentityReport::new(
                IdentityKind::QrSum,
                n,
                None,
                Rational::from(lhs),
                Rational::from(rhs),
            );
            report.i = Some(i as u32);
            report
        })
        .collect())
}

pub fn qr_sum_identity(n: u32) -> Result<bool> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "qr sum identity needs n >= 2".into(),
        ));
    }
    Ok(qr_sum_reports(n)?.iter().all(|r| r.pass))
}

/// The agreements tying the identity left-hand sides to a generating
/// polynomial: eq1 to `[u^l v^0]`, pn0v to `[u^0 v^l]`, and eq2 to
/// `[u^l] P_n(u, -u)`, plus each to the matching `S(k,l,n)`.
pub fn cross_check(pn: &GeneratingPolynomial, l: u32) -> Result<bool> {
    let n = pn.n;
    let eq1 = identity_eq1(n, l)?;
    let pn0v = identity_pn0v(n, l)?;
    let eq2 = identity_eq2(n, l)?;
    let alternating = pn.poly.substitute(Substitution::VNegU).coefficient(l, 0);
    Ok(eq1.lhs == composition_sum(l, l, n)?
        && eq1.lhs == pn.poly.coefficient(l, 0)
        && pn0v.lhs == composition_sum(0, l, n)?
        && pn0v.lhs == pn.poly.coefficient(0, l)
        && eq2.lhs == alternating)
}
