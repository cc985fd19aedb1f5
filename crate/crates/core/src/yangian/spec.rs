use serde::{Deserialize, Serialize};

use super::wedge::{conjugate_creation_annihilation, creation_annihilation};
use crate::qlinalg::{ExactMatrix, Field, Matrix, Rational};
use crate::tensor::{binomial, FormChoice, FormKind};
use crate::weights::WeightPair;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

/// Φ^{±k}_t on Λ^k(C^n), optionally multiplied by f(x) = (x−t)/(x−t+1).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FundamentalFactor {
    pub degree: usize,
    pub sign: Sign,
    pub t: Rational,
    #[serde(default)]
    pub twisted: bool,
}

impl FundamentalFactor {
    pub fn plus(degree: usize, t: Rational) -> Self {
        FundamentalFactor { degree, sign: Sign::Plus, t, twisted: false }
    }

    pub fn minus(degree: usize, t: Rational) -> Self {
        FundamentalFactor { degree, sign: Sign::Minus, t, twisted: false }
    }

    pub fn twist(mut self) -> Self {
        self.twisted = true;
        self
    }

    pub fn dim(&self, n: usize) -> usize {
        binomial(n, self.degree)
    }
}

/// Matrices of the n² operators T_ij (or S_ij) on a module, row-major in (i, j).
pub type OpMatrix<F> = Vec<Matrix<F>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleSpec {
    pub n: usize,
    /// Needed by sign-flipped factors and by the S-action.
    pub form: Option<FormKind>,
    pub factors: Vec<FundamentalFactor>,
}

impl ModuleSpec {
    pub fn new(n: usize, form: Option<FormKind>, factors: Vec<FundamentalFactor>) -> Result<Self> {
        if let Some(f) = factors.iter().find(|f| f.degree > n) {
            return Err(Error::InvalidShape(format!("degree {} exceeds n = {n}", f.degree)));
        }
        if let Some(k) = form {
            FormChoice::new(n, k)?;
        } else if factors.iter().any(|f| f.sign == Sign::Minus) {
            return Err(Error::Precondition("sign-flipped factors need a bilinear form".into()));
        }
        Ok(ModuleSpec { n, form, factors })
    }

    pub fn trivial(n: usize, form: Option<FormKind>) -> Result<Self> {
        Self::new(n, form, Vec::new())
    }

    /// Φ^{ν_1}_{t_1} ⊗ … ⊗ Φ^{ν_m}_{t_m}, t_a = μ_a+ρ_a+1/2.
    pub fn from_pair(pair: &WeightPair) -> Result<Self> {
        let nu = pair.nu()?;
        Self::new(pair.n, pair.algebra.form_kind(), nu.iter().zip(pair.spectral_params()).map(|(&k, t)| FundamentalFactor::plus(k, t)).collect())
    }

    /// Φ^{ν_m}_{t_m} ⊗ … ⊗ Φ^{ν_1}_{t_1}, the target of I(μ).
    pub fn reversed_from_pair(pair: &WeightPair) -> Result<Self> {
        let mut s = Self::from_pair(pair)?;
        s.factors.reverse();
        Ok(s)
    }

    /// Φ^{−ν_1}_{t_1} ⊗ … ⊗ Φ^{−ν_m}_{t_m}, the target of J(μ).
    pub fn flipped_from_pair(pair: &WeightPair) -> Result<Self> {
        let mut s = Self::from_pair(pair)?;
        if s.form.is_none() {
            return Err(Error::Precondition("sign-flipped factors need an sp or so pair".into()));
        }
        for f in &mut s.factors {
            f.sign = Sign::Minus;
        }
        Ok(s)
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim(self.n)).product()
    }

    /// The form, or the symmetric one when only sign-+ factors occur (θ unused).
    pub fn form_choice(&self) -> FormChoice {
        FormChoice::new(self.n, self.form.unwrap_or(FormKind::So)).expect("validated at construction")
    }

    pub fn require_form(&self) -> Result<FormChoice> {
        self.form.ok_or_else(|| Error::Precondition("the S-action needs an sp or so module".into()))?;
        Ok(self.form_choice())
    }
}

pub(crate) fn delta_identity<F: Field>(n: usize, dim: usize) -> OpMatrix<F> {
    (0..n * n).map(|ij| if ij / n == ij % n { Matrix::identity(dim) } else { Matrix::zeros(dim, dim) }).collect()
}

/// Coproduct: (A ⊗ B)_ij = Σ_k A_ik ⊗ B_kj.
pub(crate) fn coproduct<F: Field>(n: usize, a: &OpMatrix<F>, b: &OpMatrix<F>) -> OpMatrix<F> {
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut acc: Option<Matrix<F>> = None;
            for k in 0..n {
                let term = a[i * n + k].kron(&b[k * n + j]);
                acc = Some(match acc {
                    Some(x) => x.add(&term),
                    None => term,
                });
            }
            out.push(acc.expect("n ≥ 1"));
        }
    }
    out
}

/// The bare operators M_ij = x_i∂_j (sign +) or N_ij = θ_iθ_j x_{j̄}∂_{ī} (sign −).
pub fn factor_generators(form: FormChoice, f: &FundamentalFactor) -> Vec<ExactMatrix> {
    let n = form.n;
    (0..n * n)
        .map(|ij| match f.sign {
            Sign::Plus => creation_annihilation(n, f.degree, ij / n, ij % n),
            Sign::Minus => conjugate_creation_annihilation(form, f.degree, ij / n, ij % n),
        })
        .collect()
}

fn lift<F: Field>(m: &ExactMatrix) -> Matrix<F> {
    m.map(|x| F::from_rational(x))
}

/// T_ij(x) of one factor at a point x of any field.
pub fn factor_t_at<F: Field>(form: FormChoice, f: &FundamentalFactor, x: &F) -> Result<OpMatrix<F>> {
    let n = form.n;
    let t = F::from_rational(&f.t);
    let pole = || Error::Pole(format!("factor at t = {} evaluated at its pole", f.t));
    let c = match f.sign {
        Sign::Plus => (x.clone() - &t).inv().ok_or_else(pole)?,
        Sign::Minus => -(x.clone() + &t).inv().ok_or_else(pole)?,
    };
    let scale = if f.twisted {
        let num = x.clone() - &t;
        num.clone() * &(num + &F::one()).inv().ok_or_else(pole)?
    } else {
        F::one()
    };
    let d = f.dim(n);
    let gens = factor_generators(form, f);
    Ok((0..n * n)
        .map(|ij| {
            let mut m = lift::<F>(&gens[ij]).scale(&c);
            if ij / n == ij % n {
                m = m.add(&Matrix::identity(d));
            }
            m.scale(&scale)
        })
        .collect())
}

impl ModuleSpec {
    /// T_ij(x) on the whole product, via the coproduct.
    pub fn t_at<F: Field>(&self, x: &F) -> Result<OpMatrix<F>> {
        let form = self.form_choice();
        let mut acc = delta_identity::<F>(self.n, 1);
        for f in &self.factors {
            acc = coproduct(self.n, &acc, &factor_t_at(form, f, x)?);
        }
        Ok(acc)
    }

    /// S_ij(x) = Σ_k T̃_ik(−x) T_kj(x).
    pub fn s_at<F: Field>(&self, x: &F) -> Result<OpMatrix<F>> {
        let form = self.require_form()?;
        let tp = self.t_at(x)?;
        let tm = self.t_at(&-x.clone())?;
        Ok(s_from_t(form, &tm, &tp))
    }
}

/// Σ_k θ_iθ_k A_{k̄ ī} · B_kj.
pub(crate) fn s_from_t<F: Field>(form: FormChoice, tm: &OpMatrix<F>, tp: &OpMatrix<F>) -> OpMatrix<F> {
    let n = form.n;
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = Matrix::zeros(tp[0].rows(), tp[0].cols());
            for k in 0..n {
                let c = F::from_int(form.theta0(i) * form.theta0(k));
                acc = acc.add(&tm[form.bar0(k) * n + form.bar0(i)].mul(&tp[k * n + j]).scale(&c));
            }
            out.push(acc);
        }
    }
    out
}
