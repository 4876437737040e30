//! Exact composition sums `S(k,l,n)` and their bivariate generating
//! polynomials `P_n(u,v)`.
//!
//! `P_n` is computed three ways that share no code path: by enumerating
//! compositions ([`compsum::generating_poly_bruteforce`]), as a residue of
//! the power-series solution of a second-order ODE
//! ([`compsum::generating_poly_recurrence`]), and from its closed-form
//! factorization ([`compsum::generating_poly_factored`]). The
//! [`hypergeom`] module checks the gauge transform relating that ODE to the
//! hypergeometric equation, and [`identities`] checks the corollary
//! composition-sum identities. Everything is exact rational arithmetic.

pub mod compositions;
pub mod compsum;
pub mod error;
pub mod exactmath;
mod grid;
pub mod hypergeom;
pub mod identities;
pub mod polynomials;
pub mod sampling;

pub use compositions::Composition;
pub use compsum::{
    BruteForce, FCoefficientTable, FactorData, GeneratingPolynomial, Lemma1Report, Parity,
    Theorem1Report,
};
pub use error::{Error, Result};
pub use exactmath::Rational;
pub use hypergeom::{GaugeParams, HypergeometricParams, VerificationReport};
pub use identities::{IdentityKind, IdentityReport};
pub use polynomials::{BiPoly, Series, Substitution};
