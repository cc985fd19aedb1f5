use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use super::{Field, Rational};

/// Element `a + b·√s` of a quadratic extension Q(√s), `s` not a square.
///
/// Rational elements carry no radicand (`s = None`); mixing two different
/// radicands is a programming error and panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    s: Option<Rational>,
}

impl QuadExt {
    pub fn rational(a: Rational) -> Self {
        QuadExt { a, b: Rational::zero(), s: None }
    }

    pub fn new(a: Rational, b: Rational, s: Rational) -> Self {
        if b.is_zero() {
            return Self::rational(a);
        }
        QuadExt { a, b, s: Some(s) }
    }

    /// `√s` itself.
    pub fn sqrt(s: Rational) -> Self {
        Self::new(Rational::zero(), Rational::one(), s)
    }

    pub fn parts(&self) -> (&Rational, &Rational) {
        (&self.a, &self.b)
    }

    pub fn radicand(&self) -> Option<&Rational> {
        self.s.as_ref()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.b.is_zero().then(|| self.a.clone())
    }

    fn join(&self, o: &Self) -> Option<Rational> {
        match (&self.s, &o.s) {
            (Some(x), Some(y)) => {
                assert_eq!(x, y, "mixed quadratic extensions");
                Some(x.clone())
            }
            (Some(x), None) | (None, Some(x)) => Some(x.clone()),
            (None, None) => None,
        }
    }

    fn conj(&self) -> Self {
        QuadExt { a: self.a.clone(), b: -&self.b, s: self.s.clone() }
    }

    fn norm(&self) -> Rational {
        match &self.s {
            Some(s) => &self.a * &self.a - &(&self.b * &self.b) * s,
            None => &self.a * &self.a,
        }
    }

    fn add_ref(&self, o: &Self) -> Self {
        let s = self.join(o);
        let b = &self.b + &o.b;
        match s {
            Some(s) => Self::new(&self.a + &o.a, b, s),
            None => Self::rational(&self.a + &o.a),
        }
    }

    fn mul_ref(&self, o: &Self) -> Self {
        match self.join(o) {
            Some(s) => {
                let a = &self.a * &o.a + &(&self.b * &o.b) * &s;
                let b = &self.a * &o.b + &self.b * &o.a;
                Self::new(a, b, s)
            }
            None => Self::rational(&self.a * &o.a),
        }
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt { a: -self.a, b: -self.b, s: self.s }
    }
}

macro_rules! quad_ops {
    ($tr:ident, $m:ident, $atr:ident, $am:ident, $f:expr) => {
        impl $tr for QuadExt {
            type Output = QuadExt;
            fn $m(self, o: QuadExt) -> QuadExt {
                let f: fn(&QuadExt, &QuadExt) -> QuadExt = $f;
                f(&self, &o)
            }
        }
        impl $tr<&QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $m(self, o: &QuadExt) -> QuadExt {
                let f: fn(&QuadExt, &QuadExt) -> QuadExt = $f;
                f(&self, o)
            }
        }
        impl $atr<&QuadExt> for QuadExt {
            fn $am(&mut self, o: &QuadExt) {
                let f: fn(&QuadExt, &QuadExt) -> QuadExt = $f;
                *self = f(self, o);
            }
        }
    };
}

quad_ops!(Add, add, AddAssign, add_assign, |a, b| a.add_ref(b));
quad_ops!(Sub, sub, SubAssign, sub_assign, |a, b| a.add_ref(&-b.clone()));
quad_ops!(Mul, mul, MulAssign, mul_assign, |a, b| a.mul_ref(b));

impl Field for QuadExt {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }
    fn one() -> Self {
        Self::rational(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm().recip()?;
        let c = self.conj();
        Some(QuadExt::new(&c.a * &n, &c.b * &n, self.s.clone().unwrap_or_default()))
    }
    fn from_rational(q: &Rational) -> Self {
        Self::rational(q.clone())
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.s {
            Some(s) => write!(f, "{} + {}*sqrt({})", self.a, self.b, s),
            None => write!(f, "{}", self.a),
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops() {
        let r2 = QuadExt::sqrt(Rational::from_int(2));
        let sq = r2.clone() * &r2;
        assert_eq!(sq.as_rational(), Some(Rational::from_int(2)));
        let x = QuadExt::one() + &r2;
        let y = x.inv().unwrap();
        assert_eq!(x * &y, QuadExt::one());
        assert_eq!(QuadExt::zero().inv(), None);
    }
}
