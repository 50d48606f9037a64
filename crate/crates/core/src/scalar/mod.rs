//! Base field, polynomials, rational functions, and the split of K(s) into
//! polynomial and strictly proper parts.

mod field;
mod gf;
mod poly;
mod ratfun;

pub use field::{Field, Rational, Ring, Scalar};
pub use gf::{is_prime, with_prime, Gf, GfContext};
pub use poly::Poly;
pub use ratfun::{Causality, Delta, RatFun};
