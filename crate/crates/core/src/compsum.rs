//! The composition sums `S(k,l,n)` and the generating polynomial
//!
//! ```text
//! P_n(u,v) = sum_{l=1..n} sum_{k=0..l} S(k,l,n) u^k v^(l-k)
//! ```
//!
//! computed three independent ways:
//!
//! - [`generating_poly_bruteforce`] enumerates every composition of `n`;
//! - [`generating_poly_recurrence`] runs the coefficient recurrence of the
//!   ODE `z^2 f'' + (1-g) z f' + (v z/(1-z) + u z/(1-z)^2) f = 0` at `g = n`
//!   and takes the residue limit of `f_n`;
//! - [`generating_poly_factored`] expands the closed-form product in
//!   `q_i = i(n-i)` and `r_i = (n-1-2i)^2`, divided by `(n!)^2`.

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::compositions::{all_compositions, elementary_symmetric_parts, Compositions};
use crate::error::{Error, Result};
use crate::exactmath::{factorial, Rational};
use crate::grid::IntGrid;
use crate::polynomials::{BiPoly, Monomial};

pub const DEFAULT_BRUTEFORCE_CAP: u32 = 24;

/// `P_n` together with its index.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GeneratingPolynomial {
    pub n: u32,
    pub poly: BiPoly,
}

impl GeneratingPolynomial {
    /// `S(k,l,n)`, read off as the coefficient of `u^k v^(l-k)`.
    pub fn sum(&self, k: u32, l: u32) -> Rational {
        if k > l {
            return Rational::zero();
        }
        self.poly.coefficient(k, l - k)
    }

    /// Every term has degree `1..=n` and a positive coefficient, and every
    /// `u^k v^(l-k)` with `k <= l <= n` is present.
    pub fn check_shape(&self) -> bool {
        let well_placed = self
            .poly
            .terms()
            .all(|(m, c)| (1..=self.n).contains(&m.degree()) && c.is_positive());
        let count = (self.n as usize) * (self.n as usize + 3) / 2;
        well_placed && self.poly.len() == count
    }
}

/// How the enumeration route runs.
#[derive(Clone, Copy, Debug)]
pub struct BruteForce {
    /// Largest `n` accepted; enumeration costs `2^(n-1)` compositions.
    pub cap: u32,
    /// Split work across rayon workers by `(length, first part)`.
    pub parallel: bool,
}

impl Default for BruteForce {
    fn default() -> Self {
        BruteForce {
            cap: DEFAULT_BRUTEFORCE_CAP,
            parallel: false,
        }
    }
}

/// Exact sum of `e_k(p) / (L(p) R(p))` over the `l`-compositions of `n`;
/// zero when `k > l` or `l > n`.
pub fn composition_sum(k: u32, l: u32, n: u32) -> Result<Rational> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if k > l || l > n || l == 0 {
        return Ok(Rational::zero());
    }
    let scaled = WeightedSums::new(n).accumulate(Compositions::new(n, l), l);
    Ok(scaled.finish(n)[k as usize].clone())
}

pub fn generating_poly_bruteforce(n: u32) -> Result<GeneratingPolynomial> {
    generating_poly_bruteforce_with(n, BruteForce::default())
}

pub fn generating_poly_bruteforce_with(n: u32, opts: BruteForce) -> Result<GeneratingPolynomial> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if n > opts.cap {
        return Err(Error::InvalidArgument(format!(
            "n = {n} exceeds the brute-force cap {}",
            opts.cap
        )));
    }
    let units: Vec<(u32, u32)> = (1..=n)
        .flat_map(|l| (1..=n - l + 1).map(move |first| (l, first)))
        .collect();
    let weights = WeightedSums::new(n);
    let run = |&(l, first): &(u32, u32)| {
        (
            l,
            weights.accumulate(Compositions::with_first_part(n, l, first), l),
        )
    };
    let partials: Vec<(u32, Accumulator)> = if opts.parallel {
        units.par_iter().map(run).collect()
    } else {
        units.iter().map(run).collect()
    };

    let mut per_length: Vec<Accumulator> = (0..=n).map(Accumulator::new).collect();
    for (l, acc) in partials {
        per_length[l as usize].merge(acc);
    }
    let mut poly = BiPoly::zero();
    for (l, acc) in per_length.into_iter().enumerate().skip(1) {
        for (k, s) in acc.finish(n).into_iter().enumerate() {
            poly.add_term(Monomial::new(k as u32, (l - k) as u32), s);
        }
    }
    Ok(GeneratingPolynomial { n, poly })
}

/// Per-length accumulator of `(n!)^2 e_k(p) / (L(p) R(p))` for every `k`.
///
/// `L(p)` and `R(p)` are products of distinct integers in `1..=n`, so each
/// divides `n!` and every summand is an integer. Summands are added in
/// `u128` while they fit and spill into a `BigUint` otherwise.
#[derive(Clone, Debug)]
struct Accumulator {
    small: Vec<u128>,
    big: Vec<BigUint>,
}

impl Accumulator {
    fn new(l: u32) -> Self {
        let len = l as usize + 1;
        Accumulator {
            small: vec![0; len],
            big: vec![BigUint::zero(); len],
        }
    }

    fn add_small(&mut self, k: usize, x: u128) {
        match self.small[k].checked_add(x) {
            Some(s) => self.small[k] = s,
            None => {
                self.big[k] += self.small[k];
                self.small[k] = x;
            }
        }
    }

    fn merge(&mut self, other: Accumulator) {
        for (k, (s, b)) in other.small.into_iter().zip(other.big).enumerate() {
            self.big[k] += b;
            self.add_small(k, s);
        }
    }

    fn finish(self, n: u32) -> Vec<Rational> {
        let denom = Rational::from(factorial(n).pow(2));
        self.small
            .into_iter()
            .zip(self.big)
            .map(|(s, b)| Rational::from(b + s) / denom.clone())
            .collect()
    }
}

struct WeightedSums {
    n_fact: BigUint,
    n_fact_small: Option<u128>,
}

impl WeightedSums {
    fn new(n: u32) -> Self {
        let n_fact = factorial(n);
        let n_fact_small = n_fact.to_u128();
        WeightedSums {
            n_fact,
            n_fact_small,
        }
    }

    fn accumulate(&self, mut stream: Compositions, l: u32) -> Accumulator {
        let mut acc = Accumulator::new(l);
        let mut e = Vec::with_capacity(l as usize + 1);
        while let Some(parts) = stream.advance() {
            elementary_symmetric_parts(parts, &mut e);
            match self.n_fact_small {
                Some(nf) => {
                    let (left, right) = left_right_u128(parts);
                    let a = nf / left;
                    let b = nf / right;
                    match a.checked_mul(b) {
                        Some(w) => {
                            for (k, &ek) in e.iter().enumerate() {
                                match w.checked_mul(ek) {
                                    Some(t) => acc.add_small(k, t),
                                    None => acc.big[k] += BigUint::from(w) * ek,
                                }
                            }
                        }
                        None => {
                            let w = BigUint::from(a) * b;
                            for (k, &ek) in e.iter().enumerate() {
                                acc.big[k] += &w * ek;
                            }
                        }
                    }
                }
                None => {
                    let (left, right) = left_right_big(parts);
                    let w = (&self.n_fact / left) * (&self.n_fact / right);
                    for (k, &ek) in e.iter().enumerate() {
                        acc.big[k] += &w * ek;
                    }
                }
            }
        }
        acc
    }
}

// Only called when n! fits in a u128, so L and R (which divide n!) do too.
fn left_right_u128(parts: &[u32]) -> (u128, u128) {
    let mut left = 1u128;
    let mut s = 0u128;
    for &p in parts {
        s += p as u128;
        left *= s;
    }
    let mut right = 1u128;
    s = 0;
    for &p in parts.iter().rev() {
        s += p as u128;
        right *= s;
    }
    (left, right)
}

fn left_right_big(parts: &[u32]) -> (BigUint, BigUint) {
    let product = |it: &mut dyn Iterator<Item = &u32>| {
        let mut s = 0u64;
        let mut acc = BigUint::from(1u32);
        for &p in it {
            s += p as u64;
            acc *= s;
        }
        acc
    };
    (product(&mut parts.iter()), product(&mut parts.iter().rev()))
}

/// Coefficients `f_0..f_N` of the power-series solution of the ODE with
/// `f(0) = 1`, at a fixed rational `gamma`, as polynomials in `u`, `v`.
///
/// They satisfy `i (gamma - i) f_i = sum_{j<i} ((i-j) u + v) f_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FCoefficientTable {
    pub gamma: Rational,
    pub entries: Vec<BiPoly>,
    // Right-hand side of the recurrence for index N+1.
    next_rhs: BiPoly,
}

impl FCoefficientTable {
    /// Builds `f_0..f_max_index`. Fails if `gamma` is an integer in
    /// `1..=max_index`, where the recurrence divides by zero.
    pub fn build(gamma: Rational, max_index: u32) -> Result<Self> {
        if let Some(g) = gamma.to_i64() {
            if g >= 1 && g <= max_index as i64 {
                return Err(Error::Inadmissible(format!(
                    "gamma = {g} is a pole of f_{g} (recurrence divisor {g}(gamma - {g}) = 0)"
                )));
            }
        }
        // With A_i = sum_{j<i} f_j and B_i = sum_{j<i} (i-j) f_j the
        // right-hand side is u B_i + v A_i, and B_{i+1} = B_i + A_{i+1}.
        let mut entries = vec![BiPoly::one()];
        let mut prefix = BiPoly::one();
        let mut weighted = BiPoly::one();
        for i in 1..=max_index {
            let rhs = &weighted.mul_monomial(1, 0) + &prefix.mul_monomial(0, 1);
            let divisor = Rational::from(i) * (&gamma - &Rational::from(i));
            let f = rhs.scale(&divisor.recip()?);
            prefix.add_assign_ref(&f);
            weighted.add_assign_ref(&prefix);
            entries.push(f);
        }
        let next_rhs = &weighted.mul_monomial(1, 0) + &prefix.mul_monomial(0, 1);
        Ok(FCoefficientTable {
            gamma,
            entries,
            next_rhs,
        })
    }

    pub fn max_index(&self) -> u32 {
        self.entries.len() as u32 - 1
    }

    /// `sum_{j<=N} ((N+1-j) u + v) f_j`, i.e. `(N+1)(gamma-N-1) f_{N+1}`.
    pub fn next_rhs(&self) -> &BiPoly {
        &self.next_rhs
    }

    /// Checks the recurrence at every index with full polynomial products.
    pub fn check_recurrence(&self) -> bool {
        if self.entries.first() != Some(&BiPoly::one()) {
            return false;
        }
        (1..self.entries.len()).all(|i| {
            let mut rhs = BiPoly::zero();
            for (j, f) in self.entries[..i].iter().enumerate() {
                let linear =
                    BiPoly::linear(Rational::from(i - j), Rational::one(), Rational::zero());
                rhs.add_assign_ref(&(&linear * f));
            }
            let divisor = Rational::from(i) * (&self.gamma - &Rational::from(i));
            self.entries[i].scale(&divisor) == rhs
        })
    }

    /// `f(u0, v0, gamma; z)` through `z^N`.
    pub fn eval_series(&self, u0: &Rational, v0: &Rational) -> crate::polynomials::Series {
        crate::polynomials::Series::from_fn(self.max_index() as usize, |i| {
            self.entries[i].eval(u0, v0)
        })
    }
}

/// `P_n` as `Res(f_n; gamma = n) / n`.
///
/// `f_0..f_{n-1}` have their poles at integers `<= n-1`, so they can be
/// evaluated at `gamma = n` directly; near `gamma = n`,
/// `(gamma - n) f_n = rhs_n / n`, hence `P_n = rhs_n / n^2`.
///
/// This is the same computation as [`FCoefficientTable::build`] at
/// `gamma = n` followed by [`FCoefficientTable::next_rhs`], but carried out
/// over the integers: with `c_i = i(n-i)` and `D_i = c_1 ... c_i`, the
/// scaled prefix sums `A'_{i+1} = D_i A_{i+1}` and `B'_{i+1} = D_i B_{i+1}`
/// obey
///
/// ```text
/// D_i f_i  = u B'_i + v A'_i
/// A'_{i+1} = c_i A'_i + D_i f_i
/// B'_{i+1} = c_i B'_i + A'_{i+1}
/// ```
///
/// and `P_n = (u B'_n + v A'_n) / (n^2 D_{n-1})`.
pub fn generating_poly_recurrence(n: u32) -> Result<GeneratingPolynomial> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let mut a = IntGrid::constant(n, 1);
    let mut b = IntGrid::constant(n, 1);
    let mut denominator = BigInt::from(n as u64 * n as u64);
    for i in 1..n as u64 {
        let c = i * (n as u64 - i);
        let scaled_f = IntGrid::u_times_plus_v_times(&b, &a);
        a.scale_add(c, &scaled_f);
        b.scale_add(c, &a);
        denominator *= c;
    }
    Ok(GeneratingPolynomial {
        n,
        poly: IntGrid::u_times_plus_v_times(&b, &a).to_bipoly(&denominator),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// Integer parameters of the closed-form factorization of `(n!)^2 P_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorData {
    pub n: u32,
    pub m: u32,
    /// `q_i = i(n-i)` for `i = 0..=m`.
    pub q: Vec<u64>,
    /// `r_i = (n-1-2i)^2` for `i = 0..m`.
    pub r: Vec<u64>,
    pub parity: Parity,
}

impl FactorData {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be at least 1".into()));
        }
        let n64 = n as u64;
        let m = n / 2;
        let q = (0..=m as u64).map(|i| i * (n64 - i)).collect();
        let r = (0..m as u64)
            .map(|i| {
                let d = n64 as i64 - 1 - 2 * i as i64;
                (d * d) as u64
            })
            .collect();
        let parity = if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        };
        Ok(FactorData { n, m, q, r, parity })
    }

    pub fn check_invariants(&self) -> bool {
        let n = self.n as u64;
        let symmetric = self
            .q
            .iter()
            .enumerate()
            .all(|(i, &qi)| qi == (n - i as u64) * i as u64);
        let qr = (0..self.m as usize).all(|i| {
            let i64_ = i as u64;
            self.q[i] + self.q[i + 1] + self.r[i] == i64_ * (i64_ + 1) + (n - i64_ - 1) * (n - i64_)
        });
        self.q[0] == 0 && symmetric && qr
    }

    /// `(u+v+q_i)(u+v+q_{i+1}) + r_i u` for `i < m`, then `u+v+q_m` when
    /// `n` is odd.
    pub fn factors(&self) -> Vec<BiPoly> {
        let shifted = |c: u64| BiPoly::linear(Rational::one(), Rational::one(), Rational::from(c));
        let mut out: Vec<BiPoly> = (0..self.m as usize)
            .map(|i| {
                let quad = &shifted(self.q[i]) * &shifted(self.q[i + 1]);
                &quad + &BiPoly::monomial(1, 0, Rational::from(self.r[i]))
            })
            .collect();
        if self.parity == Parity::Odd {
            out.push(shifted(self.q[self.m as usize]));
        }
        out
    }

    /// `(n!)^2`.
    pub fn normalizer(&self) -> BigUint {
        factorial(self.n).pow(2)
    }
}

pub fn factor_data(n: u32) -> Result<FactorData> {
    FactorData::new(n)
}

/// Expands the product with integer coefficients and divides once at the end.
pub fn generating_poly_factored(n: u32) -> Result<GeneratingPolynomial> {
    let data = FactorData::new(n)?;
    let mut product = IntGrid::constant(n, 1);
    for i in 0..data.m as usize {
        let (qa, qb) = (data.q[i], data.q[i + 1]);
        let s = qa + qb;
        product = product.mul_sparse(&[
            ((2, 0), 1),
            ((1, 1), 2),
            ((0, 2), 1),
            ((1, 0), s + data.r[i]),
            ((0, 1), s),
            ((0, 0), qa * qb),
        ]);
    }
    if data.parity == Parity::Odd {
        let q = data.q[data.m as usize];
        product = product.mul_sparse(&[((1, 0), 1), ((0, 1), 1), ((0, 0), q)]);
    }
    Ok(GeneratingPolynomial {
        n,
        poly: product.to_bipoly(&BigInt::from(data.normalizer())),
    })
}

/// `f_n` from `f_n = sum_{j<n} a(j, n) f_j`, `f_0 = 1`.
pub fn lemma1_recursion(
    n: u32,
    mut a: impl FnMut(u32, u32) -> Result<Rational>,
) -> Result<Rational> {
    let mut f = vec![Rational::one()];
    for target in 1..=n {
        let mut acc = Rational::zero();
        for (j, fj) in f.iter().enumerate() {
            acc += a(j as u32, target)? * fj;
        }
        f.push(acc);
    }
    Ok(f.swap_remove(n as usize))
}

/// `sum_p a(0,s_1) a(s_1,s_2) ... a(s_{l-1},n)` over every composition `p`
/// of `n` with partial sums `s_j`.
pub fn lemma1_enumeration(
    n: u32,
    mut a: impl FnMut(u32, u32) -> Result<Rational>,
) -> Result<Rational> {
    if n == 0 {
        return Ok(Rational::one());
    }
    let mut total = Rational::zero();
    for p in all_compositions(n) {
        let mut prev = 0;
        let mut term = Rational::one();
        for s in p.partial_sums() {
            term *= &a(prev, s)?;
            prev = s;
        }
        total += term;
    }
    Ok(total)
}

/// Outcome of comparing the `P_n` routes at one `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Report {
    pub check: String,
    pub n: u32,
    /// Routes that were compared; brute force is left out above its cap.
    pub routes: Vec<String>,
    pub pass: bool,
}

pub fn theorem1_check(n: u32, brute: BruteForce) -> Result<Theorem1Report> {
    let recurrence = generating_poly_recurrence(n)?;
    let factored = generating_poly_factored(n)?;
    let mut routes = vec!["recurrence".to_string(), "factored".to_string()];
    let mut pass = recurrence == factored && recurrence.check_shape();
    if n <= brute.cap {
        routes.insert(0, "bruteforce".into());
        pass &= generating_poly_bruteforce_with(n, brute)? == recurrence;
    }
    Ok(Theorem1Report {
        check: "theorem1".into(),
        n,
        routes,
        pass,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma1Report {
    pub check: String,
    pub n: u32,
    pub seed: u64,
    pub recursion: Rational,
    pub enumeration: Rational,
    pub pass: bool,
}

/// Recursion and path enumeration on a random rational oracle `a(j, n')` drawn from
/// `seed`.
pub fn lemma1_random(n: u32, seed: u64) -> Result<Lemma1Report> {
    let mut sampler = crate::sampling::RationalSampler::new(seed);
    let mut table = vec![Vec::new(); n as usize + 1];
    for (target, row) in table.iter_mut().enumerate().skip(1) {
        *row = (0..target).map(|_| sampler.rational()).collect();
    }
    let oracle = |j: u32, target: u32| Ok(table[target as usize][j as usize].clone());
    let recursion = lemma1_recursion(n, oracle)?;
    let enumeration = lemma1_enumeration(n, oracle)?;
    Ok(Lemma1Report {
        check: "lemma1".into(),
        n,
        seed,
        pass: recursion == enumeration,
        recursion,
        enumeration,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::{elementary_symmetric, enumerate_compositions};
    use crate::sampling::RationalSampler;
    use std::collections::HashMap;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    // Summand-by-summand rational oracle straight from the definition.
    fn composition_sum_direct(k: u32, l: u32, n: u32) -> Rational {
        enumerate_compositions(n, l)
            .map(|p| {
                let parts: Vec<Rational> = p.parts().iter().map(|&x| Rational::from(x)).collect();
                let denom = Rational::from(p.left_product() * p.right_product());
                elementary_symmetric(&parts, k as usize) / denom
            })
            .sum()
    }

    #[test]
    fn integer_recurrence_matches_rational_table() {
        for n in 1..=20 {
            let table = FCoefficientTable::build(Rational::from(n), n - 1).unwrap();
            let scale = Rational::from(n as u64 * n as u64).recip().unwrap();
            let expected = table.next_rhs().scale(&scale);
            assert_eq!(
                generating_poly_recurrence(n).unwrap().poly,
                expected,
                "n={n}"
            );
        }
    }

    #[test]
    fn integer_product_matches_rational_product() {
        for n in 1..=20 {
            let data = FactorData::new(n).unwrap();
            let product = data.factors().iter().fold(BiPoly::one(), |acc, f| &acc * f);
            let expected = product.scale(&Rational::from(data.normalizer()).recip().unwrap());
            assert_eq!(generating_poly_factored(n).unwrap().poly, expected, "n={n}");
        }
    }

    #[test]
    fn composition_sum_examples() {
        assert_eq!(composition_sum(1, 1, 2).unwrap(), r("1/2"));
        assert_eq!(composition_sum(3, 3, 3).unwrap(), r("1/36"));
        assert_eq!(composition_sum(5, 2, 4).unwrap(), Rational::zero());
        assert_eq!(composition_sum(0, 5, 4).unwrap(), Rational::zero());
        assert!(composition_sum(0, 1, 0).is_err());
    }

    #[test]
    fn common_denominator_route_matches_direct_sum() {
        for n in 1..=9 {
            for l in 1..=n {
                for k in 0..=l {
                    assert_eq!(
                        composition_sum(k, l, n).unwrap(),
                        composition_sum_direct(k, l, n),
                        "S({k},{l},{n})"
                    );
                }
            }
        }
    }

    #[test]
    fn big_factorial_path_matches_direct_sum() {
        // n = 36 forces the BigUint weights; only lengths 1, 2 and n are cheap.
        let n = 36;
        for (k, l) in [(0, 1), (1, 1), (0, 2), (1, 2), (2, 2), (n, n), (0, n)] {
            assert_eq!(
                composition_sum(k, l, n).unwrap(),
                composition_sum_direct(k, l, n)
            );
        }
    }

    #[test]
    fn bruteforce_small_cases() {
        let p1 = generating_poly_bruteforce(1).unwrap();
        assert_eq!(p1.poly, &BiPoly::u() + &BiPoly::v());
        let p2 = generating_poly_bruteforce(2).unwrap();
        let expected = BiPoly::from_terms([
            (Monomial::new(1, 0), r("1/2")),
            (Monomial::new(0, 1), r("1/4")),
            (Monomial::new(2, 0), r("1/4")),
            (Monomial::new(1, 1), r("1/2")),
            (Monomial::new(0, 2), r("1/4")),
        ]);
        assert_eq!(p2.poly, expected);
        let p3 = generating_poly_bruteforce(3).unwrap();
        assert_eq!(p3.poly.coefficient(0, 1), r("1/9"));
        assert!(generating_poly_bruteforce(0).is_err());
        assert!(generating_poly_bruteforce_with(
            5,
            BruteForce {
                cap: 4,
                parallel: false
            }
        )
        .is_err());
    }

    #[test]
    fn parallel_bruteforce_is_identical() {
        for n in [1, 5, 11] {
            let seq = generating_poly_bruteforce(n).unwrap();
            let par = generating_poly_bruteforce_with(
                n,
                BruteForce {
                    cap: 24,
                    parallel: true,
                },
            )
            .unwrap();
            assert_eq!(seq, par);
        }
    }

    #[test]
    fn recurrence_small_cases() {
        assert_eq!(
            generating_poly_recurrence(1).unwrap().poly,
            &BiPoly::u() + &BiPoly::v()
        );
        assert_eq!(
            generating_poly_recurrence(2).unwrap(),
            generating_poly_bruteforce(2).unwrap()
        );
        let t = FCoefficientTable::build(r("3"), 1).unwrap();
        assert_eq!(t.entries[1].eval(&r("1"), &r("1")), r("1"));
    }

    #[test]
    fn f_table_recurrence_holds() {
        for gamma in ["1/2", "-7/3", "10"] {
            let t = FCoefficientTable::build(r(gamma), 8).unwrap();
            assert!(t.check_recurrence(), "gamma = {gamma}");
            assert_eq!(t.entries[0], BiPoly::one());
        }
        for n in 1..=10u32 {
            assert!(FCoefficientTable::build(Rational::from(n), n - 1)
                .unwrap()
                .check_recurrence());
        }
    }

    #[test]
    fn f_table_rejects_poles() {
        assert!(matches!(
            FCoefficientTable::build(r("3"), 5),
            Err(Error::Inadmissible(_))
        ));
        assert!(FCoefficientTable::build(r("6"), 5).is_ok());
        assert!(FCoefficientTable::build(r("0"), 5).is_ok());
    }

    #[test]
    fn factored_small_cases() {
        assert_eq!(
            generating_poly_factored(1).unwrap().poly,
            &BiPoly::u() + &BiPoly::v()
        );
        assert_eq!(
            generating_poly_factored(2).unwrap(),
            generating_poly_bruteforce(2).unwrap()
        );
        let p3 = generating_poly_factored(3).unwrap();
        assert_eq!(p3.poly.coefficient(1, 0), r("1/3"));
        assert_eq!(p3.poly.coefficient(1, 0), composition_sum(1, 1, 3).unwrap());
    }

    #[test]
    fn factor_data_examples() {
        let d4 = factor_data(4).unwrap();
        assert_eq!(
            (d4.q.clone(), d4.r.clone(), d4.m, d4.parity),
            (vec![0, 3, 4], vec![9, 1], 2, Parity::Even)
        );
        let d2 = factor_data(2).unwrap();
        assert_eq!((d2.q.clone(), d2.r.clone(), d2.m), (vec![0, 1], vec![1], 1));
        let d1 = factor_data(1).unwrap();
        assert_eq!(
            (d1.q.clone(), d1.r.clone(), d1.m, d1.parity),
            (vec![0], vec![], 0, Parity::Odd)
        );
        for n in 1..=60 {
            assert!(factor_data(n).unwrap().check_invariants(), "n = {n}");
        }
        assert!(factor_data(0).is_err());
    }

    #[test]
    fn triple_route_agreement_small() {
        for n in 1..=10 {
            let bf = generating_poly_bruteforce(n).unwrap();
            assert!(bf.check_shape(), "shape n = {n}");
            assert_eq!(
                bf,
                generating_poly_recurrence(n).unwrap(),
                "recurrence n = {n}"
            );
            assert_eq!(bf, generating_poly_factored(n).unwrap(), "factored n = {n}");
        }
    }

    #[test]
    fn generating_polynomial_json() {
        let p = generating_poly_factored(1).unwrap();
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(
            js,
            r#"{"n":1,"poly":{"terms":[{"u":1,"v":0,"c":"1"},{"u":0,"v":1,"c":"1"}]}}"#
        );
        assert_eq!(
            serde_json::from_str::<GeneratingPolynomial>(&js).unwrap(),
            p
        );
    }

    #[test]
    fn lemma1_examples() {
        let ones = |_: u32, _: u32| Ok(Rational::one());
        assert_eq!(lemma1_recursion(3, ones).unwrap(), r("4"));
        assert_eq!(lemma1_enumeration(3, ones).unwrap(), r("4"));
        // Distinct primes per edge make every path product identifiable.
        let primes = [2i64, 3, 5, 7, 11, 13];
        let edge = |j: u32, n: u32| Ok(Rational::from(primes[(j + 2 * n - 2) as usize]));
        // a01 = 2, a02 = 5, a12 = 7: f_2 = a02 + a01 a12 = 5 + 14.
        assert_eq!(lemma1_recursion(2, edge).unwrap(), r("19"));
        assert_eq!(lemma1_enumeration(2, edge).unwrap(), r("19"));
        assert_eq!(lemma1_recursion(1, edge).unwrap(), r("2"));
        assert_eq!(lemma1_enumeration(1, edge).unwrap(), r("2"));
    }

    #[test]
    fn lemma1_oracle_errors_propagate() {
        let failing = |_: u32, _: u32| Err(Error::InvalidArgument("oracle".into()));
        assert!(lemma1_recursion(2, failing).is_err());
        assert!(lemma1_enumeration(2, failing).is_err());
    }

    #[test]
    fn report_helpers() {
        let t = theorem1_check(6, BruteForce::default()).unwrap();
        assert!(t.pass);
        assert_eq!(t.routes, vec!["bruteforce", "recurrence", "factored"]);
        let t = theorem1_check(
            6,
            BruteForce {
                cap: 5,
                parallel: false,
            },
        )
        .unwrap();
        assert_eq!(t.routes.len(), 2);
        let l = lemma1_random(7, 11).unwrap();
        assert!(l.pass);
        assert_eq!(l, lemma1_random(7, 11).unwrap());
    }

    #[test]
    fn lemma1_random_oracles() {
        for seed in 0..3u64 {
            let mut sampler = RationalSampler::new(seed);
            let mut table = HashMap::new();
            for n in 1..=8u32 {
                for j in 0..n {
                    table.insert((j, n), sampler.rational());
                }
            }
            let a = |j: u32, n: u32| Ok(table[&(j, n)].clone());
            for n in 1..=8 {
                assert_eq!(
                    lemma1_recursion(n, a).unwrap(),
                    lemma1_enumeration(n, a).unwrap()
                );
            }
        }
    }
}
