use serde::{Deserialize, Serialize};

use crate::qlinalg::{Field, Matrix};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    So,
    Sp,
}

/// The anti-diagonal bilinear form ⟨e_i, e_j⟩ = θ_i δ_{ī j} on C^n,
/// ī = n − i + 1, with θ_i = −1 exactly when the form is alternating and
/// i > n/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FormChoice {
    pub n: usize,
    pub kind: FormKind,
}

impl FormChoice {
    pub fn new(n: usize, kind: FormKind) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("form on a zero-dimensional space".into()));
        }
        if kind == FormKind::Sp && n % 2 == 1 {
            return Err(Error::Precondition(format!("alternating form needs even n, got {n}")));
        }
        Ok(FormChoice { n, kind })
    }

    /// θ for a 1-based index.
    pub fn theta(&self, i: usize) -> i64 {
        if self.kind == FormKind::Sp && 2 * i > self.n {
            -1
        } else {
            1
        }
    }

    /// θ for a 0-based index.
    pub fn theta0(&self, i: usize) -> i64 {
        self.theta(i + 1)
    }

    /// ī for a 1-based index.
    pub fn bar(&self, i: usize) -> usize {
        self.n + 1 - i
    }

    /// ī for a 0-based index.
    pub fn bar0(&self, i: usize) -> usize {
        self.n - 1 - i
    }

    /// +1 for the symmetric form, −1 for the alternating one.
    pub fn sign(&self) -> i64 {
        match self.kind {
            FormKind::So => 1,
            FormKind::Sp => -1,
        }
    }

    /// Gram matrix G with G[i][j] = ⟨e_i, e_j⟩ (0-based).
    pub fn gram<F: Field>(&self) -> Matrix<F> {
        Matrix::from_fn(self.n, self.n, |i, j| if j == self.bar0(i) { F::from_int(self.theta0(i)) } else { F::zero() })
    }

    /// Form-conjugate X̃ of an n×n matrix, from Ẽ_ij = θ_i θ_j E_{j̄ ī}.
    pub fn conj<F: Field>(&self, x: &Matrix<F>) -> Matrix<F> {
        let n = self.n;
        Matrix::from_fn(n, n, |a, b| {
            // coefficient of E_ab in X̃ comes from x_{b̄ ā}
            let (i, j) = (self.bar0(b), self.bar0(a));
            let s = self.theta0(i) * self.theta0(j);
            let v = x.get(i, j).clone();
            if s < 0 {
                -v
            } else {
                v
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::Rational;

    fn unit(n: usize, i: usize, j: usize) -> Matrix<Rational> {
        Matrix::from_fn(n, n, |a, b| if (a, b) == (i, j) { Rational::one() } else { Rational::zero() })
    }

    #[test]
    fn conjugate_is_adjoint() {
        for (n, kind) in [(2, FormKind::Sp), (4, FormKind::Sp), (3, FormKind::So), (4, FormKind::So)] {
            let f = FormChoice::new(n, kind).unwrap();
            let g = f.gram::<Rational>();
            for i in 0..n {
                for j in 0..n {
                    let e = unit(n, i, j);
                    let et = f.conj(&e);
                    // ⟨Xu, v⟩ = ⟨u, X̃v⟩  ⇔  Xᵀ G = G X̃
                    assert_eq!(e.transpose().mul(&g), g.mul(&et));
                    assert_eq!(f.conj(&et), e);
                    let expect = unit(n, f.bar0(j), f.bar0(i)).scale(&Rational::from_int(f.theta0(i) * f.theta0(j)));
                    assert_eq!(et, expect);
                }
            }
        }
        assert!(FormChoice::new(3, FormKind::Sp).is_err());
    }

    #[test]
    fn symmetry_type() {
        let sp = FormChoice::new(4, FormKind::Sp).unwrap().gram::<Rational>();
        assert_eq!(sp.transpose(), sp.scale(&Rational::from_int(-1)));
        let so = FormChoice::new(3, FormKind::So).unwrap().gram::<Rational>();
        assert_eq!(so.transpose(), so);
    }
}
