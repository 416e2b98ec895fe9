//! Exact scalars, weight vectors and sparse Laurent polynomials.
//!
//! Every half-integer is stored doubled, so all arithmetic is integer
//! arithmetic. Exponents of [`LaurentPolynomial`] are doubled weight
//! coordinates, delta axes first.

mod halfint;
mod poly;
mod weight;

pub use halfint::{HalfInt, Quarter};
pub use poly::{Exponent, LaurentPolynomial, PolyAccumulator};
pub use weight::Weight;
