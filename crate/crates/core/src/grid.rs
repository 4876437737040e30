//! Dense integer polynomials in `u`, `v` of bounded degree. The fast
//! paths of the recurrence and factored routes run here, where additions
//! skip the gcd normalization rational arithmetic pays on every step.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactmath::Rational;
use crate::polynomials::{BiPoly, Monomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntGrid {
    // Row-major: coeffs[u * stride + v], with u + v <= max_degree.
    coeffs: Vec<BigInt>,
    stride: usize,
}

impl IntGrid {
    pub fn zero(max_degree: u32) -> Self {
        let stride = max_degree as usize + 1;
        IntGrid {
            coeffs: vec![BigInt::zero(); stride * stride],
            stride,
        }
    }

    pub fn constant(max_degree: u32, c: impl Into<BigInt>) -> Self {
        let mut g = IntGrid::zero(max_degree);
        g.coeffs[0] = c.into();
        g
    }

    fn max_degree(&self) -> usize {
        self.stride - 1
    }

    /// `self = self * c + other`.
    pub fn scale_add(&mut self, c: u64, other: &IntGrid) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !a.is_zero() {
                *a *= c;
            }
            if !b.is_zero() {
                *a += b;
            }
        }
    }

    /// `u * a + v * b`. Terms pushed past the degree bound must be zero.
    pub fn u_times_plus_v_times(a: &IntGrid, b: &IntGrid) -> IntGrid {
        let d = a.max_degree();
        let mut out = IntGrid::zero(d as u32);
        for i in 0..=d {
            for j in 0..=d - i {
                let k = i * a.stride + j;
                if !a.coeffs[k].is_zero() {
                    assert!(i + j < d, "degree bound exceeded");
                    out.coeffs[k + a.stride] += &a.coeffs[k];
                }
                if !b.coeffs[k].is_zero() {
                    assert!(i + j < d, "degree bound exceeded");
                    out.coeffs[k + 1] += &b.coeffs[k];
                }
            }
        }
        out
    }

    /// Product with a sparse factor of small integer coefficients.
    pub fn mul_sparse(&self, factor: &[((usize, usize), u64)]) -> IntGrid {
        let d = self.max_degree();
        let mut out = IntGrid::zero(d as u32);
        for i in 0..=d {
            for j in 0..=d - i {
                let c = &self.coeffs[i * self.stride + j];
                if c.is_zero() {
                    continue;
                }
                for &((di, dj), f) in factor {
                    if f == 0 {
                        continue;
                    }
                    assert!(i + di + j + dj <= d, "degree bound exceeded");
                    out.coeffs[(i + di) * self.stride + j + dj] += c * f;
                }
            }
        }
        out
    }

    /// The rational polynomial `self / denominator`.
    pub fn to_bipoly(&self, denominator: &BigInt) -> BiPoly {
        let d = self.max_degree();
        let mut terms = Vec::new();
        for i in 0..=d {
            for j in 0..=d - i {
                let c = &self.coeffs[i * self.stride + j];
                if !c.is_zero() {
                    let value =
                        Rational::new(c.clone(), denominator.clone()).expect("nonzero denominator");
                    terms.push((Monomial::new(i as u32, j as u32), value));
                }
            }
        }
        BiPoly::from_terms(terms)
    }
}
