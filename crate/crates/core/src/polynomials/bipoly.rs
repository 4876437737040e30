use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exactmath::Rational;

/// Exponent pair `u^u v^v`, ordered by total degree, then by descending
/// `u`-degree so that `u` comes before `v` within each degree.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub u: u32,
    pub v: u32,
}

impl Monomial {
    pub fn new(u: u32, v: u32) -> Self {
        Monomial { u, v }
    }

    pub fn degree(self) -> u32 {
        self.u + self.v
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), other.u).cmp(&(other.degree(), self.u))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Specializations of one variable used to extract univariate slices.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Substitution {
    /// `v := 0`; result is a polynomial in `u`.
    VZero,
    /// `v := -u`; result is a polynomial in `u`.
    VNegU,
    /// `u := 0`; result is a polynomial in `v`.
    UZero,
}

/// Sparse polynomial in `u` and `v` with rational coefficients.
///
/// Zero coefficients are never stored, so two polynomials are equal exactly
/// when their term maps are.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        BiPoly::monomial(0, 0, c)
    }

    pub fn u() -> Self {
        BiPoly::monomial(1, 0, Rational::one())
    }

    pub fn v() -> Self {
        BiPoly::monomial(0, 1, Rational::one())
    }

    pub fn monomial(u: u32, v: u32, c: Rational) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(Monomial::new(u, v), c);
        p
    }

    /// Sums duplicate monomials and drops zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = BiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// The linear form `a u + b v + c`.
    pub fn linear(a: Rational, b: Rational, c: Rational) -> Self {
        BiPoly::from_terms([
            (Monomial::new(1, 0), a),
            (Monomial::new(0, 1), b),
            (Monomial::new(0, 0), c),
        ])
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order: total degree ascending, then `u`-degree
    /// descending.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &Rational)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    /// Coefficient of `u^i v^j`; zero when absent.
    pub fn coefficient(&self, i: u32, j: u32) -> Rational {
        self.terms
            .get(&Monomial::new(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn scale(&self, c: &Rational) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// Multiplies by `u^i v^j`.
    pub fn mul_monomial(&self, i: u32, j: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.u + i, m.v + j), c.clone()))
                .collect(),
        }
    }

    pub fn add_assign_ref(&mut self, other: &BiPoly) {
        for (m, c) in &other.terms {
            self.add_term(*m, c.clone());
        }
    }

    pub fn pow(&self, exp: u32) -> BiPoly {
        (0..exp).fold(BiPoly::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, u0: &Rational, v0: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(m, c)| c * &u0.pow(m.u) * v0.pow(m.v))
            .sum()
    }

    pub fn substitute(&self, rule: Substitution) -> BiPoly {
        let mut out = BiPoly::zero();
        for (m, c) in &self.terms {
            match rule {
                Substitution::VZero if m.v == 0 => out.add_term(*m, c.clone()),
                Substitution::UZero if m.u == 0 => out.add_term(*m, c.clone()),
                Substitution::VNegU => {
                    let c = if m.v % 2 == 1 { -c } else { c.clone() };
                    out.add_term(Monomial::new(m.u + m.v, 0), c);
                }
                _ => {}
            }
        }
        out
    }

    /// Plain-text rendering such as `1/2 u + 1/4 v^2`.
    pub fn to_text(&self) -> String {
        self.render(|c| c.to_string(), |e| e.to_string())
    }

    /// LaTeX rendering such as `\frac{1}{2} u + \frac{1}{4} v^{2}`.
    pub fn to_latex(&self) -> String {
        self.render(Rational::to_latex, |e| format!("{{{e}}}"))
    }

    fn render(&self, coeff: impl Fn(&Rational) -> String, exp: impl Fn(u32) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = if negative { -c } else { c.clone() };
            let mut factors = Vec::new();
            if !abs.is_one() || m.degree() == 0 {
                factors.push(coeff(&abs));
            }
            for (name, e) in [("u", m.u), ("v", m.v)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{}", exp(e))),
                }
            }
            out.push_str(&factors.join(" "));
        }
        out
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(mut self, rhs: BiPoly) -> BiPoly {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        &self - &rhs
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(Monomial::new(ma.u + mb.u, ma.v + mb.v), ca * cb);
            }
        }
        out
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    u: u32,
    v: u32,
    c: Rational,
}

#[derive(Serialize, Deserialize)]
struct BiPolyRepr {
    terms: Vec<TermRepr>,
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        BiPolyRepr {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermRepr {
                    u: m.u,
                    v: m.v,
                    c: c.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = BiPolyRepr::deserialize(deserializer)?;
        Ok(BiPoly::from_terms(
            repr.terms
                .into_iter()
                .map(|t| (Monomial::new(t.u, t.v), t.c)),
        ))
    }
}
