//! Fixed-length integer compositions and the per-composition quantities the
//! composition sums are built from.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::Rational;

/// An ordered list of positive parts. Serializes as a bare JSON array.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidArgument("composition has no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!("zero part in {parts:?}")));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn reversed(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }

    /// `(s_1, ..., s_l)` with `s_j = p_1 + ... + p_j`.
    pub fn partial_sums(&self) -> Vec<u32> {
        partial_sums(&self.parts)
    }

    /// `L(p) = s_1 s_2 ... s_{l-1} n`: the product of all left partial sums.
    pub fn left_product(&self) -> BigUint {
        self.partial_sums()
            .into_iter()
            .fold(BigUint::one(), |acc, s| acc * s)
    }

    /// `R(p)`, the left product of the reversed composition.
    pub fn right_product(&self) -> BigUint {
        self.reversed().left_product()
    }
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<u32> {
    fn from(c: Composition) -> Vec<u32> {
        c.parts
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

pub fn partial_sums(parts: &[u32]) -> Vec<u32> {
    parts
        .iter()
        .scan(0u32, |acc, &p| {
            *acc += p;
            Some(*acc)
        })
        .collect()
}

/// Lexicographic stream of the `l`-compositions of `n`.
///
/// Holds a single working buffer; [`Compositions::advance`] hands out a
/// borrowed view of it for allocation-free loops, while the `Iterator` impl
/// yields owned [`Composition`]s. Empty when `l == 0` or `l > n`.
#[derive(Clone, Debug)]
pub struct Compositions {
    parts: Vec<u32>,
    // Parts before this index are frozen (used to pin the first part).
    frozen: usize,
    started: bool,
    done: bool,
}

impl Compositions {
    pub fn new(n: u32, l: u32) -> Self {
        if l == 0 || l > n {
            return Self::empty();
        }
        let l = l as usize;
        let mut parts = vec![1; l];
        parts[l - 1] = n - (l as u32 - 1);
        Compositions {
            parts,
            frozen: 0,
            started: false,
            done: false,
        }
    }

    /// The sub-stream of compositions whose first part is `first`. The
    /// sub-streams for `first = 1..=n-l+1` partition the full stream.
    pub fn with_first_part(n: u32, l: u32, first: u32) -> Self {
        if l == 0 || l > n || first == 0 {
            return Self::empty();
        }
        if l == 1 {
            return if first == n {
                Self::new(n, 1)
            } else {
                Self::empty()
            };
        }
        let rest = match n.checked_sub(first) {
            Some(r) if r >= l - 1 => r,
            _ => return Self::empty(),
        };
        let l = l as usize;
        let mut parts = vec![1; l];
        parts[0] = first;
        parts[l - 1] = rest - (l as u32 - 2);
        Compositions {
            parts,
            frozen: 1,
            started: false,
            done: false,
        }
    }

    fn empty() -> Self {
        Compositions {
            parts: Vec::new(),
            frozen: 0,
            started: true,
            done: true,
        }
    }

    /// Steps to the next composition and borrows it.
    pub fn advance(&mut self) -> Option<&[u32]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.parts);
        }
        let l = self.parts.len();
        let mut tail = 0u32;
        // Rightmost non-final index whose part can grow while the tail still
        // fits into all-positive parts.
        for i in (self.frozen..l.saturating_sub(1)).rev() {
            tail += self.parts[i + 1];
            let slots = (l - 1 - i) as u32;
            if tail > slots {
                self.parts[i] += 1;
                for p in &mut self.parts[i + 1..l - 1] {
                    *p = 1;
                }
                self.parts[l - 1] = tail - 1 - (slots - 1);
                return Some(&self.parts);
            }
        }
        self.done = true;
        None
    }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        self.advance().map(|p| Composition { parts: p.to_vec() })
    }
}

pub fn enumerate_compositions(n: u32, l: u32) -> Compositions {
    Compositions::new(n, l)
}

/// Every composition of `n`, by increasing length.
pub fn all_compositions(n: u32) -> impl Iterator<Item = Composition> {
    (1..=n).flat_map(move |l| Compositions::new(n, l))
}

/// `e_0, ..., e_len` of `values`, via the one-pass product recurrence for
/// `(X + x_1)...(X + x_len)`.
pub fn elementary_symmetric_all(values: &[Rational]) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); values.len() + 1];
    e[0] = Rational::one();
    for (i, x) in values.iter().enumerate() {
        for k in (1..=i + 1).rev() {
            let t = &e[k - 1] * x;
            e[k] += t;
        }
    }
    e
}

/// `e_k(values)`; 1 for `k = 0` (even on an empty list), 0 for `k > len`.
pub fn elementary_symmetric(values: &[Rational], k: usize) -> Rational {
    if k > values.len() {
        return Rational::zero();
    }
    let mut e = vec![Rational::zero(); k + 1];
    e[0] = Rational::one();
    for (i, x) in values.iter().enumerate() {
        for j in (1..=k.min(i + 1)).rev() {
            let t = &e[j - 1] * x;
            e[j] += t;
        }
    }
    e.swap_remove(k)
}

/// Integer `e_0..e_l` of composition parts. Splitting a part never lowers
/// `e_k`, so `e_k(p) <= C(n, k)`: no overflow for totals up to 127.
pub(crate) fn elementary_symmetric_parts(parts: &[u32], out: &mut Vec<u128>) {
    out.clear();
    out.resize(parts.len() + 1, 0);
    out[0] = 1;
    for (i, &p) in parts.iter().enumerate() {
        for k in (1..=i + 1).rev() {
            out[k] += out[k - 1] * p as u128;
        }
    }
}
