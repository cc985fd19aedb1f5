//! The rational R-matrices R, R̄, R̃, R̂ as two-slot factors, ordered
//! products of them, and checkers for the Yang–Baxter-type identities.

mod ybe;

pub use ybe::{check_degeneration, check_ybe_numeric, check_ybe_symbolic, check_ybe_variant, ybe_sides, Degeneration, YbeVariant};

use serde::{Deserialize, Serialize};

use crate::qlinalg::Field;
use crate::tensor::{Elementary, FormChoice, LinearOp, SparseVec, TensorOperator, TensorSpace};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RTag {
    Plain,
    Bar,
    Tilde,
    Hat,
}

/// Which R-matrix: tilde and hat carry the form they conjugate with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RKind {
    Plain,
    Bar,
    Tilde(FormChoice),
    Hat(FormChoice),
}

impl RKind {
    pub fn new(tag: RTag, form: Option<FormChoice>) -> Result<Self> {
        match (tag, form) {
            (RTag::Plain, _) => Ok(RKind::Plain),
            (RTag::Bar, _) => Ok(RKind::Bar),
            (RTag::Tilde, Some(f)) => Ok(RKind::Tilde(f)),
            (RTag::Hat, Some(f)) => Ok(RKind::Hat(f)),
            (t, None) => Err(Error::Precondition(format!("{t:?} R-matrix needs a bilinear form"))),
        }
    }

    pub fn elementary(&self) -> Elementary {
        match *self {
            RKind::Plain => Elementary::P,
            RKind::Bar => Elementary::Pbar,
            RKind::Tilde(f) => Elementary::Ptilde(f),
            RKind::Hat(f) => Elementary::Phat(f),
        }
    }
}

/// The factor 1 − K_pq / x, stored through 1/x.
#[derive(Debug, Clone, PartialEq)]
pub struct RFactor<F> {
    pub kind: RKind,
    pub p: usize,
    pub q: usize,
    pub arg: F,
    inv: F,
}

impl<F: Field> RFactor<F> {
    pub fn new(kind: RKind, p: usize, q: usize, arg: F) -> Result<Self> {
        let inv = arg.inv().ok_or_else(|| Error::Pole(format!("R-matrix {kind:?} on slots ({p},{q}) evaluated at 0")))?;
        Ok(RFactor { kind, p, q, arg, inv })
    }

    pub fn apply_in(&self, space: &TensorSpace, v: &SparseVec<F>) -> SparseVec<F> {
        let k = self.kind.elementary().apply_on(space, self.p, self.q, v);
        let mut out = v.clone();
        out.axpy(&-self.inv.clone(), &k);
        out
    }
}

/// Ordered product of R-factors on a fixed tensor space; the leftmost
/// factor is applied last.
#[derive(Debug, Clone)]
pub struct OperatorProduct<F> {
    space: TensorSpace,
    factors: Vec<RFactor<F>>,
}

impl<F: Field> OperatorProduct<F> {
    pub fn new(space: TensorSpace, factors: Vec<RFactor<F>>) -> Result<Self> {
        for f in &factors {
            space.check_pair(f.p, f.q)?;
        }
        Ok(OperatorProduct { space, factors })
    }

    pub fn identity(space: TensorSpace) -> Self {
        OperatorProduct { space, factors: Vec::new() }
    }

    pub fn factors(&self) -> &[RFactor<F>] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// self · o
    pub fn then_right(mut self, o: &OperatorProduct<F>) -> Self {
        assert_eq!(self.space, o.space);
        self.factors.extend(o.factors.iter().cloned());
        self
    }
}

impl<F: Field> LinearOp<F> for OperatorProduct<F> {
    fn space(&self) -> TensorSpace {
        self.space
    }

    fn apply(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut out = v.clone();
        for f in self.factors.iter().rev() {
            out = f.apply_in(&self.space, &out);
        }
        out
    }
}

/// 1 − K_pq/x as an explicit operator.
pub fn r_matrix<F: Field>(kind: RKind, space: TensorSpace, p: usize, q: usize, x: F) -> Result<TensorOperator<F>> {
    space.check_pair(p, q)?;
    Ok(OperatorProduct::new(space, vec![RFactor::new(kind, p, q, x)?])?.materialize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::{Matrix, Rational};
    use crate::tensor::{op_p, FormKind};

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn plain_examples() {
        let s = TensorSpace::new(2, 2);
        let r1 = r_matrix(RKind::Plain, s, 1, 2, q(1, 1)).unwrap();
        let id = TensorOperator::identity(s);
        assert_eq!(r1, id.sub(&op_p(s, 1, 2).unwrap()));
        let r2 = r_matrix(RKind::Plain, s, 1, 2, q(2, 1)).unwrap().to_dense();
        let h = |a, b| q(a, b);
        let expect = Matrix::from_rows(vec![
            vec![h(1, 2), h(0, 1), h(0, 1), h(0, 1)],
            vec![h(0, 1), h(1, 1), h(-1, 2), h(0, 1)],
            vec![h(0, 1), h(-1, 2), h(1, 1), h(0, 1)],
            vec![h(0, 1), h(0, 1), h(0, 1), h(1, 2)],
        ]);
        assert_eq!(r2, expect);
        assert!(matches!(r_matrix(RKind::Plain, s, 1, 2, q(0, 1)), Err(Error::Pole(_))));
    }

    #[test]
    fn bar_inversion() {
        for n in 1..5usize {
            let s = TensorSpace::new(n, 2);
            for x in [q(1, 3), q(-7, 2), q(5, 1)] {
                let a = r_matrix(RKind::Bar, s, 1, 2, x.clone()).unwrap();
                let b = r_matrix(RKind::Bar, s, 1, 2, Rational::from_int(n as i64) - &x).unwrap();
                assert_eq!(a.compose(&b), TensorOperator::identity(s));
            }
        }
    }

    /// Partial operations on the first slot of an operator on (C^n)^⊗2.
    fn slot1(m: &Matrix<Rational>, n: usize, f: impl Fn(&Matrix<Rational>) -> Matrix<Rational>) -> Matrix<Rational> {
        // m = Σ_{ab} E_ab ⊗ M_ab with blocks M_ab; apply f to the first factor
        let mut out = Matrix::zeros(n * n, n * n);
        for a in 0..n {
            for b in 0..n {
                let e = Matrix::from_fn(n, n, |i, j| if (i, j) == (a, b) { q(1, 1) } else { q(0, 1) });
                let blk = Matrix::from_fn(n, n, |i, j| m.get(a * n + i, b * n + j).clone());
                out = out.add(&f(&e).kron(&blk));
            }
        }
        out
    }

    #[test]
    fn slot_one_relations() {
        for (n, kind) in [(2, FormKind::Sp), (3, FormKind::So), (4, FormKind::Sp)] {
            let f = FormChoice::new(n, kind).unwrap();
            let s = TensorSpace::new(n, 2);
            let x = q(7, 3);
            let r = r_matrix(RKind::Plain, s, 1, 2, x.clone()).unwrap().to_dense();
            let rb = r_matrix(RKind::Bar, s, 1, 2, x.clone()).unwrap().to_dense();
            let rt = r_matrix(RKind::Tilde(f), s, 1, 2, x.clone()).unwrap().to_dense();
            let rh = r_matrix(RKind::Hat(f), s, 1, 2, x.clone()).unwrap().to_dense();
            assert_eq!(slot1(&r, n, |e| e.transpose()), rb);
            assert_eq!(slot1(&r, n, |e| f.conj(e)), rt);
            assert_eq!(slot1(&rb, n, |e| f.conj(e)), rh);
            let p = op_p::<Rational>(s, 1, 2).unwrap().to_dense();
            for m in [&r, &rb, &rt] {
                assert_eq!(&p.mul(m).mul(&p), m);
            }
        }
    }
}
