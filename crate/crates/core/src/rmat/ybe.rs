use serde::{Deserialize, Serialize};

use super::{OperatorProduct, RFactor, RKind};
use crate::qlinalg::{Field, RatFunc, Rational};
use crate::tensor::{Elementary, FormChoice, LinearOp, Placed, TensorOperator, TensorSpace};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum YbeVariant {
    Ybe,
    Tybe,
    Cybe,
    Hybe,
    Bybe,
}

impl YbeVariant {
    pub const ALL: [YbeVariant; 5] = [YbeVariant::Ybe, YbeVariant::Tybe, YbeVariant::Cybe, YbeVariant::Hybe, YbeVariant::Bybe];

    pub fn needs_form(&self) -> bool {
        matches!(self, YbeVariant::Cybe | YbeVariant::Hybe | YbeVariant::Bybe)
    }

    /// Σ over the factors of one side of deg_y(argument).
    fn y_degree(&self) -> usize {
        2
    }
}

/// The two sides of a Yang–Baxter-type identity, factors listed left to right.
pub fn ybe_sides<F: Field>(variant: YbeVariant, n: usize, form: Option<FormChoice>, x: &F, y: &F) -> Result<(Vec<RFactor<F>>, Vec<RFactor<F>>)> {
    let form = if variant.needs_form() { Some(form.ok_or_else(|| Error::Precondition(format!("{variant:?} needs a form")))?) } else { form };
    let r = |k: RKind, p, q, a: F| RFactor::new(k, p, q, a);
    let xy = x.clone() + y;
    let (a, b, c, k1, k2, k3) = match variant {
        // R12(x) R13(x+y) R23(y)
        YbeVariant::Ybe => (x.clone(), xy, y.clone(), RKind::Plain, RKind::Plain, RKind::Plain),
        // R̄12(x+y) R̄13(x) R23(y)
        YbeVariant::Tybe => (xy, x.clone(), y.clone(), RKind::Bar, RKind::Bar, RKind::Plain),
        YbeVariant::Cybe => {
            let f = form.unwrap();
            (xy, x.clone(), y.clone(), RKind::Tilde(f), RKind::Tilde(f), RKind::Plain)
        }
        // R̂12(x) R̂13(x+y) R23(y)
        YbeVariant::Hybe => {
            let f = form.unwrap();
            (x.clone(), xy, y.clone(), RKind::Hat(f), RKind::Hat(f), RKind::Plain)
        }
        // R̄12(n−x−y) R̂13(x) R̃23(y)
        YbeVariant::Bybe => {
            let f = form.unwrap();
            (F::from_int(n as i64) - &xy, x.clone(), y.clone(), RKind::Bar, RKind::Hat(f), RKind::Tilde(f))
        }
    };
    let lhs = vec![r(k1, 1, 2, a.clone())?, r(k2, 1, 3, b.clone())?, r(k3, 2, 3, c.clone())?];
    let rhs = vec![r(k3, 2, 3, c)?, r(k2, 1, 3, b)?, r(k1, 1, 2, a)?];
    Ok((lhs, rhs))
}

fn product<F: Field>(n: usize, factors: Vec<RFactor<F>>) -> Result<TensorOperator<F>> {
    Ok(OperatorProduct::new(TensorSpace::new(n, 3), factors)?.materialize())
}

pub fn check_ybe_variant<F: Field>(variant: YbeVariant, n: usize, form: Option<FormChoice>, x: &F, y: &F) -> Result<bool> {
    let (l, r) = ybe_sides(variant, n, form, x, y)?;
    Ok(product(n, l)? == product(n, r)?)
}

/// Exact check with x symbolic. Both sides times the product of the three
/// arguments are polynomials of degree ≤ 2 in y, so agreement at three
/// values of y proves the two-variable identity.
pub fn check_ybe_symbolic(variant: YbeVariant, n: usize, form: Option<FormChoice>) -> Result<bool> {
    let x = RatFunc::var();
    let count = variant.y_degree() + 1;
    let ys = [Rational::new(3, 1), Rational::new(-5, 2), Rational::new(7, 3), Rational::new(11, 13)];
    for y in ys.iter().take(count) {
        if !check_ybe_variant(variant, n, form, &x, &RatFunc::constant(y.clone()))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Fast path: sampled rational points with denominators ≤ 100.
pub fn check_ybe_numeric(variant: YbeVariant, n: usize, form: Option<FormChoice>, points: &[(Rational, Rational)]) -> Result<bool> {
    for (x, y) in points {
        if !check_ybe_variant(variant, n, form, x, y)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Degeneration {
    Nopole,
    Nopolet,
}

/// R12(x) R13(x+1) R23(1) = (1 − (P12 + P13)/x)(1 − P23), and the tilde
/// analogue R̃12(x+1) R̃13(x) R23(1) = (1 − (P̃12 + P̃13)/x)(1 − P23).
pub fn check_degeneration<F: Field>(which: Degeneration, n: usize, form: Option<FormChoice>, x: &F) -> Result<bool> {
    let space = TensorSpace::new(n, 3);
    let one = F::one();
    let x1 = x.clone() + &one;
    let (lhs, k) = match which {
        Degeneration::Nopole => (vec![RFactor::new(RKind::Plain, 1, 2, x.clone())?, RFactor::new(RKind::Plain, 1, 3, x1)?, RFactor::new(RKind::Plain, 2, 3, one.clone())?], Elementary::P),
        Degeneration::Nopolet => {
            let f = form.ok_or_else(|| Error::Precondition("nopolet needs a form".into()))?;
            (vec![RFactor::new(RKind::Tilde(f), 1, 2, x1)?, RFactor::new(RKind::Tilde(f), 1, 3, x.clone())?, RFactor::new(RKind::Plain, 2, 3, one.clone())?], Elementary::Ptilde(f))
        }
    };
    let left = OperatorProduct::new(space, lhs)?.materialize();
    let inv = x.inv().ok_or_else(|| Error::Pole("degeneration identity at x = 0".into()))?;
    let k12: TensorOperator<F> = Placed::new(k, space, 1, 2)?.materialize();
    let k13: TensorOperator<F> = Placed::new(k, space, 1, 3)?.materialize();
    let p23: TensorOperator<F> = Placed::new(Elementary::P, space, 2, 3)?.materialize();
    let id = TensorOperator::identity(space);
    let first = id.sub(&k12.add(&k13).scale(&inv));
    let right = first.compose(&id.sub(&p23));
    Ok(left == right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::Limit;
    use crate::tensor::FormKind;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn numeric_examples() {
        assert!(check_ybe_variant(YbeVariant::Ybe, 2, None, &q(2, 1), &q(3, 1)).unwrap());
        let sp2 = FormChoice::new(2, FormKind::Sp).unwrap();
        assert!(check_ybe_variant(YbeVariant::Cybe, 2, Some(sp2), &q(5, 1), &q(7, 2)).unwrap());
        // altered middle argument
        let (mut l, r) = ybe_sides(YbeVariant::Ybe, 2, None, &q(2, 1), &q(3, 1)).unwrap();
        l[1] = RFactor::new(RKind::Plain, 1, 3, q(6, 1)).unwrap();
        assert_ne!(product(2, l).unwrap(), product(2, r).unwrap());
    }

    #[test]
    fn all_variants_symbolic_n2() {
        for kind in [FormKind::So, FormKind::Sp] {
            let f = FormChoice::new(2, kind).unwrap();
            for v in YbeVariant::ALL {
                assert!(check_ybe_symbolic(v, 2, Some(f)).unwrap(), "{v:?} {kind:?}");
            }
        }
    }

    #[test]
    fn degenerations() {
        assert!(check_degeneration(Degeneration::Nopole, 3, None, &q(4, 1)).unwrap());
        let so2 = FormChoice::new(2, FormKind::So).unwrap();
        assert!(check_degeneration(Degeneration::Nopolet, 2, Some(so2), &q(3, 1)).unwrap());
        let sp4 = FormChoice::new(4, FormKind::Sp).unwrap();
        assert!(check_degeneration(Degeneration::Nopolet, 4, Some(sp4), &RatFunc::var()).unwrap());
        // the symbolic left side has no pole at x = −1
        let t = RatFunc::var();
        assert!(check_degeneration(Degeneration::Nopole, 2, None, &t).unwrap());
        let space = TensorSpace::new(2, 3);
        let left = OperatorProduct::new(
            space,
            vec![
                RFactor::new(RKind::Plain, 1, 2, t.clone()).unwrap(),
                RFactor::new(RKind::Plain, 1, 3, t.clone() + &RatFunc::one()).unwrap(),
                RFactor::new(RKind::Plain, 2, 3, RatFunc::one()).unwrap(),
            ],
        )
        .unwrap()
        .materialize();
        for (_, _, v) in left.triples() {
            assert!(matches!(v.limit_at(&q(-1, 1)), Limit::Value(_)));
        }
    }
}
