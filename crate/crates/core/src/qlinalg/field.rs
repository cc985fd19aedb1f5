use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use super::matrix::{gauss_jordan, Matrix};
use super::Rational;

/// Coefficient field for the generic linear algebra and operator code.
///
/// Division is exposed only through [`Field::inv`] so that every caller has
/// to decide what a zero divisor means in its context.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;
    fn from_rational(q: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_int(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Reduce `m` in place to reduced row echelon form; returns pivot columns.
    fn row_reduce(m: &mut Matrix<Self>) -> Vec<usize> {
        gauss_jordan(m)
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        self.recip()
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn is_one(&self) -> bool {
        Rational::is_one(self)
    }
    fn row_reduce(m: &mut Matrix<Self>) -> Vec<usize> {
        super::matrix::bareiss_rref(m)
    }
}
