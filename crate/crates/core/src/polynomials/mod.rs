//! Carrier algebras: sparse bivariate polynomials in `u`, `v` and truncated
//! power series in `z`, both over exact rationals.

mod bipoly;
mod series;

pub use bipoly::{BiPoly, Monomial, Substitution};
pub use series::Series;
