//! Exact scalars, univariate rational functions and dense linear algebra.

mod field;
mod matrix;
mod poly;
mod quad;
mod rational;
mod ratfunc;

pub use field::Field;
pub use matrix::{ExactMatrix, Matrix, SpanBasis};
pub use poly::{ParsePolyError, Poly};
pub use quad::QuadExt;
pub use rational::{ParseRationalError, Rational};
pub use ratfunc::{Limit, RatFunc};

/// `Q` embedded in any coefficient field.
pub fn q<F: Field>(num: i64, den: i64) -> F {
    F::from_rational(&Rational::new(num, den))
}
