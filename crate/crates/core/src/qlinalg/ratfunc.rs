use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use super::{Field, Poly, Rational};

/// Rational function `num/den` in one variable `t`, kept canonical:
/// coprime, monic denominator, zero stored as `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

/// Value of a rational function at a point, or the order of its pole there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Limit {
    Value(Rational),
    Pole { order: usize },
}

impl Limit {
    pub fn value(self) -> Option<Rational> {
        match self {
            Limit::Value(v) => Some(v),
            Limit::Pole { .. } => None,
        }
    }
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::from_poly(Poly::zero());
        }
        if den.is_constant() {
            let inv = den.lead().recip().unwrap();
            return RatFunc { num: num.scale(&inv), den: Poly::one() };
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.is_constant() { (num, den) } else { (num.div_exact(&g), den.div_exact(&g)) };
        let inv = den.lead().recip().unwrap();
        RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn var() -> Self {
        Self::from_poly(Poly::var())
    }

    /// `a + b*t`
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::from_poly(Poly::linear(a, b))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.num.lead())
    }

    pub fn eval(&self, t0: &Rational) -> Option<Rational> {
        let d = self.den.eval(t0);
        (!d.is_zero()).then(|| self.num.eval(t0) / d)
    }

    pub fn limit_at(&self, t0: &Rational) -> Limit {
        match self.eval(t0) {
            Some(v) => Limit::Value(v),
            None => Limit::Pole { order: self.den.root_multiplicity(t0) },
        }
    }

    fn add_ref(&self, o: &RatFunc) -> RatFunc {
        if self.num.is_zero() {
            return o.clone();
        }
        if o.num.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den.clone());
        }
        let g = Poly::gcd(&self.den, &o.den);
        let (da, db) = (self.den.div_exact(&g), o.den.div_exact(&g));
        let num = &(&self.num * &db) + &(&o.num * &da);
        RatFunc::new(num, &self.den * &db)
    }

    fn mul_ref(&self, o: &RatFunc) -> RatFunc {
        if self.num.is_zero() || o.num.is_zero() {
            return Self::from_poly(Poly::zero());
        }
        if self.den.is_constant() && o.den.is_constant() && (self.num.is_constant() || o.num.is_constant()) {
            return RatFunc { num: &self.num * &o.num, den: Poly::one() };
        }
        let g1 = Poly::gcd(&self.num, &o.den);
        let g2 = Poly::gcd(&o.num, &self.den);
        let n1 = self.num.div_exact(&g1);
        let d2 = o.den.div_exact(&g1);
        let n2 = o.num.div_exact(&g2);
        let d1 = self.den.div_exact(&g2);
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let inv = den.lead().recip().unwrap();
        RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, o: RatFunc) -> RatFunc {
        self.add_ref(&o)
    }
}
impl Add<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        self.add_ref(o)
    }
}
impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, o: RatFunc) -> RatFunc {
        self.add_ref(&-o)
    }
}
impl Sub<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self.add_ref(&-o.clone())
    }
}
impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, o: RatFunc) -> RatFunc {
        self.mul_ref(&o)
    }
}
impl Mul<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        self.mul_ref(o)
    }
}
impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, o: &RatFunc) {
        *self = self.add_ref(o);
    }
}
impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, o: &RatFunc) {
        *self = self.add_ref(&-o.clone());
    }
}
impl MulAssign<&RatFunc> for RatFunc {
    fn mul_assign(&mut self, o: &RatFunc) {
        *self = self.mul_ref(o);
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(RatFunc::new(self.den.clone(), self.num.clone()))
    }
    fn from_rational(q: &Rational) -> Self {
        Self::constant(q.clone())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{} / {}", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for RatFunc {
    type Err = super::poly::ParsePolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once(" / ") {
            Some((n, d)) => {
                let d: Poly = d.parse()?;
                if d.is_zero() {
                    return Err(super::poly::ParsePolyError(s.to_string()));
                }
                Ok(RatFunc::new(n.parse()?, d))
            }
            None => Ok(RatFunc::from_poly(s.parse()?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn limits() {
        let t = RatFunc::var();
        let f = (t.clone() * &t) * &t.inv().unwrap();
        assert_eq!(f, t);
        assert_eq!(f.limit_at(&q("0")), Limit::Value(q("0")));
        assert_eq!(t.inv().unwrap().limit_at(&q("0")), Limit::Pole { order: 1 });
        let g = r("-1 + 1*t / -1 + 1*t^2");
        assert_eq!(g, r("1 / 1 + 1*t"));
        assert_eq!(g.limit_at(&q("1")), Limit::Value(q("1/2")));
        let h = r("1 / 1*t^2 + 1*t^3");
        assert_eq!(h.limit_at(&q("0")), Limit::Pole { order: 2 });
    }

    #[test]
    fn canonical_text() {
        let f = r("2 + 2*t / 4 + -4*t^2");
        assert_eq!(f.to_string(), "-1/2 / -1 + 1*t");
        assert_eq!(r(&f.to_string()), f);
        assert_eq!(RatFunc::zero().to_string(), "0");
        assert!(r("1 / 1*t").den().is_monic());
    }
}
