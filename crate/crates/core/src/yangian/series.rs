use serde::{Deserialize, Serialize};

use super::spec::{factor_generators, FundamentalFactor, ModuleSpec, Sign};
use crate::qlinalg::{ExactMatrix, Field, Matrix, Rational};
use crate::tensor::FormChoice;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generators {
    /// T_ij^{(r)} of Y(gl_n)
    T,
    /// S_ij^{(r)} of the twisted Yangian
    S,
}

/// Coefficient matrices X_ij^{(r)}, 0 ≤ r ≤ order, of a series action; r = 0
/// is δ_ij·1.
#[derive(Clone, PartialEq)]
pub struct SeriesAction<F> {
    pub n: usize,
    pub dim: usize,
    pub order: usize,
    pub kind: Generators,
    coeffs: Vec<Vec<Matrix<F>>>,
}

impl<F: Field> std::fmt::Debug for SeriesAction<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SeriesAction").field("n", &self.n).field("dim", &self.dim).field("order", &self.order).field("kind", &self.kind).finish()
    }
}

fn series_identity<F: Field>(n: usize, dim: usize, order: usize) -> Vec<Vec<Matrix<F>>> {
    (0..n * n)
        .map(|ij| {
            let mut v = vec![Matrix::zeros(dim, dim); order + 1];
            if ij / n == ij % n {
                v[0] = Matrix::identity(dim);
            }
            v
        })
        .collect()
}

impl<F: Field> SeriesAction<F> {
    pub fn from_coeffs(n: usize, kind: Generators, coeffs: Vec<Vec<Matrix<F>>>) -> Result<Self> {
        if coeffs.len() != n * n || coeffs[0].is_empty() {
            return Err(Error::InvalidShape("series needs n² entries with a constant term".into()));
        }
        let order = coeffs[0].len() - 1;
        let dim = coeffs[0][0].rows();
        for (ij, v) in coeffs.iter().enumerate() {
            if v.len() != order + 1 || v.iter().any(|m| m.rows() != dim || m.cols() != dim) {
                return Err(Error::InvalidShape(format!("series entry {ij} has inconsistent shape")));
            }
            let expect = if ij / n == ij % n { Matrix::identity(dim) } else { Matrix::zeros(dim, dim) };
            if v[0] != expect {
                return Err(Error::InvalidShape(format!("series entry {ij} does not start with δ_ij")));
            }
        }
        Ok(SeriesAction { n, dim, order, kind, coeffs })
    }

    /// 0-based i, j.
    pub fn coeff(&self, i: usize, j: usize, r: usize) -> &Matrix<F> {
        &self.coeffs[i * self.n + j][r]
    }

    pub fn coeffs(&self) -> &[Vec<Matrix<F>>] {
        &self.coeffs
    }

    /// Every coefficient with 1 ≤ r ≤ max_r.
    pub fn generators(&self, max_r: usize) -> Vec<&Matrix<F>> {
        self.coeffs.iter().flat_map(|v| v[1..=max_r.min(self.order)].iter()).collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        SeriesAction { coeffs: self.coeffs.iter().map(|v| v[..=order].to_vec()).collect(), order, ..self.clone() }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> SeriesAction<G> {
        SeriesAction { n: self.n, dim: self.dim, order: self.order, kind: self.kind, coeffs: self.coeffs.iter().map(|v| v.iter().map(|m| m.map(&f)).collect()).collect() }
    }

    /// Coproduct self ⊗ o of two T-series.
    pub fn tensor(&self, o: &SeriesAction<F>) -> SeriesAction<F> {
        let n = self.n;
        let order = self.order.min(o.order);
        let dim = self.dim * o.dim;
        let mut out = series_identity::<F>(n, dim, order);
        for i in 0..n {
            for j in 0..n {
                for r in 1..=order {
                    let mut acc = Matrix::zeros(dim, dim);
                    for k in 0..n {
                        for s in 0..=r {
                            let (a, b) = (self.coeff(i, k, s), o.coeff(k, j, r - s));
                            if !a.is_zero() && !b.is_zero() {
                                acc = acc.add(&a.kron(b));
                            }
                        }
                    }
                    out[i * n + j][r] = acc;
                }
            }
        }
        SeriesAction { n, dim, order, kind: self.kind, coeffs: out }
    }

    /// Multiply every entry by the scalar series Σ_s f_s x^{−s}, f_0 = 1.
    pub fn scalar_twist(&self, f: &[F]) -> SeriesAction<F> {
        let mut out = self.clone();
        for (ij, v) in self.coeffs.iter().enumerate() {
            for r in 1..=self.order {
                let mut acc = v[r].clone();
                for s in 1..=r.min(f.len() - 1) {
                    acc = acc.add(&v[r - s].scale(&f[s]));
                }
                out.coeffs[ij][r] = acc;
            }
        }
        out
    }

    /// Matrix-of-series product self·o, truncated.
    fn series_mul(&self, o: &SeriesAction<F>) -> Vec<Vec<Matrix<F>>> {
        let n = self.n;
        let order = self.order.min(o.order);
        let mut out = vec![vec![Matrix::zeros(self.dim, self.dim); order + 1]; n * n];
        for i in 0..n {
            for j in 0..n {
                for r in 0..=order {
                    let mut acc = Matrix::zeros(self.dim, self.dim);
                    for k in 0..n {
                        for s in 0..=r {
                            let (a, b) = (self.coeff(i, k, s), o.coeff(k, j, r - s));
                            if !a.is_zero() && !b.is_zero() {
                                acc = acc.add(&a.mul(b));
                            }
                        }
                    }
                    out[i * n + j][r] = acc;
                }
            }
        }
        out
    }

    /// S_ij^{(r)} = Σ_k Σ_s (−1)^s T̃_ik^{(s)} T_kj^{(r−s)} from a T-series.
    pub fn s_from_t(&self, form: FormChoice) -> Result<SeriesAction<F>> {
        if self.kind != Generators::T {
            return Err(Error::Precondition("S is built from a T-series".into()));
        }
        let n = self.n;
        let mut tilde = self.clone();
        for i in 0..n {
            for k in 0..n {
                let c = F::from_int(form.theta0(i) * form.theta0(k));
                for s in 0..=self.order {
                    let sg = if s % 2 == 0 { c.clone() } else { -c.clone() };
                    tilde.coeffs[i * n + k][s] = self.coeff(form.bar0(k), form.bar0(i), s).scale(&sg);
                }
            }
        }
        Ok(SeriesAction { kind: Generators::S, coeffs: tilde.series_mul(self), ..self.clone() })
    }

    /// The coefficients of T(x)^{−1}, truncated at the same order.
    pub fn antipode_truncated(&self) -> SeriesAction<F> {
        let n = self.n;
        let mut inv = series_identity::<F>(n, self.dim, self.order);
        for r in 1..=self.order {
            for i in 0..n {
                for j in 0..n {
                    let mut acc = Matrix::zeros(self.dim, self.dim);
                    for k in 0..n {
                        for s in 1..=r {
                            acc = acc.sub(&self.coeff(i, k, s).mul(&inv[k * n + j][r - s]));
                        }
                    }
                    inv[i * n + j][r] = acc;
                }
            }
        }
        SeriesAction { coeffs: inv, ..self.clone() }
    }

    /// Both products with `o` are the identity series up to the order.
    pub fn is_inverse_of(&self, o: &SeriesAction<F>) -> bool {
        let id = series_identity::<F>(self.n, self.dim, self.order.min(o.order));
        self.series_mul(o) == id && o.series_mul(self) == id
    }

    /// The defining relations on coefficients,
    /// [X_ij^{(r+1)}, X_kl^{(s)}] − [X_ij^{(r)}, X_kl^{(s+1)}] = X_kj^{(r)} X_il^{(s)} − X_kj^{(s)} X_il^{(r)},
    /// for all r, s with r+1, s+1 ≤ order.
    pub fn check_rtt(&self) -> bool {
        let n = self.n;
        let comm = |a: &Matrix<F>, b: &Matrix<F>| a.mul(b).sub(&b.mul(a));
        for r in 0..self.order {
            for s in 0..self.order {
                for i in 0..n {
                    for j in 0..n {
                        for k in 0..n {
                            for l in 0..n {
                                let lhs = comm(self.coeff(i, j, r + 1), self.coeff(k, l, s)).sub(&comm(self.coeff(i, j, r), self.coeff(k, l, s + 1)));
                                let rhs = self.coeff(k, j, r).mul(self.coeff(i, l, s)).sub(&self.coeff(k, j, s).mul(self.coeff(i, l, r)));
                                if lhs != rhs {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// Restriction to the invariant subspace spanned by the columns of
    /// `basis`; fails when some coefficient leaves the subspace.
    pub fn restrict(&self, basis: &Matrix<F>) -> Result<SeriesAction<F>> {
        let d = basis.cols();
        if basis.rows() != self.dim {
            return Err(Error::InvalidShape("basis rows differ from the module dimension".into()));
        }
        let (_, pivots) = basis.transpose().rref();
        if pivots.len() != d {
            return Err(Error::InvalidShape("restriction basis is not independent".into()));
        }
        let square = basis.select_rows(&pivots);
        let inv = square.inverse().expect("pivot rows are independent");
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (ij, v) in self.coeffs.iter().enumerate() {
            let mut w = Vec::with_capacity(v.len());
            for (r, m) in v.iter().enumerate() {
                let image = m.mul(basis);
                let small = inv.mul(&image.select_rows(&pivots));
                if basis.mul(&small) != image {
                    return Err(Error::Contradiction(format!("coefficient ({}, {}, {r}) leaves the subspace", ij / self.n, ij % self.n)));
                }
                w.push(small);
            }
            coeffs.push(w);
        }
        Ok(SeriesAction { n: self.n, dim: d, order: self.order, kind: self.kind, coeffs })
    }
}

/// Series of one factor: t^{r−1} M (sign +) or −(−t)^{r−1} N (sign −),
/// times (x−t)/(x−t+1) = 1 − Σ_s (t−1)^{s−1} x^{−s} when twisted.
pub fn factor_series(form: FormChoice, f: &FundamentalFactor, order: usize) -> SeriesAction<Rational> {
    let n = form.n;
    let dim = f.dim(n);
    let gens = factor_generators(form, f);
    let mut coeffs = series_identity::<Rational>(n, dim, order);
    for (ij, g) in gens.iter().enumerate() {
        for r in 1..=order {
            let c = match f.sign {
                Sign::Plus => f.t.pow(r as u32 - 1),
                Sign::Minus => -(-f.t.clone()).pow(r as u32 - 1),
            };
            coeffs[ij][r] = g.scale(&c);
        }
    }
    let s = SeriesAction { n, dim, order, kind: Generators::T, coeffs };
    if f.twisted {
        let tm1 = &f.t - &Rational::one();
        let twist: Vec<Rational> = (0..=order).map(|s| if s == 0 { Rational::one() } else { -tm1.pow(s as u32 - 1) }).collect();
        s.scalar_twist(&twist)
    } else {
        s
    }
}

impl ModuleSpec {
    pub fn t_series(&self, order: usize) -> SeriesAction<Rational> {
        let form = self.form_choice();
        let mut acc = SeriesAction { n: self.n, dim: 1, order, kind: Generators::T, coeffs: series_identity(self.n, 1, order) };
        for f in &self.factors {
            acc = acc.tensor(&factor_series(form, f, order));
        }
        acc
    }

    pub fn s_series(&self, order: usize) -> Result<SeriesAction<Rational>> {
        self.t_series(order).s_from_t(self.require_form()?)
    }

    /// T (gl) or S (sp, so) coefficients, whichever the module's algebra uses.
    pub fn series(&self, kind: Generators, order: usize) -> Result<SeriesAction<Rational>> {
        match kind {
            Generators::T => Ok(self.t_series(order)),
            Generators::S => self.s_series(order),
        }
    }
}

/// Image of T_ij^{(r)} under T_ij(x) ↦ δ_ij + E_ij x^{−1}, on C^n (0-based).
pub fn eval_hom(n: usize, i: usize, j: usize, r: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(n, n);
    if r == 1 {
        m.set(i, j, Rational::one());
    }
    m
}

pub fn eval_series(n: usize, order: usize) -> SeriesAction<Rational> {
    let coeffs = (0..n * n).map(|ij| (0..=order).map(|r| if r == 0 && ij / n == ij % n { ExactMatrix::identity(n) } else { eval_hom(n, ij / n, ij % n, r) }).collect()).collect();
    SeriesAction { n, dim: n, order, kind: Generators::T, coeffs }
}

/// The twisted evaluation S_ij(x) ↦ δ_ij + (E_ij − Ẽ_ij)/(x ± 1/2) (so: +, sp: −)
/// against the S-action of the one-factor module Φ^1_{±1/2}.
pub fn check_twisted_evaluation(form: FormChoice, order: usize) -> Result<bool> {
    let n = form.n;
    let half = Rational::new(form.sign(), 2);
    let coeffs = (0..n * n)
        .map(|ij| {
            let (i, j) = (ij / n, ij % n);
            let e = eval_hom(n, i, j, 1);
            let et = eval_hom(n, form.bar0(j), form.bar0(i), 1).scale(&Rational::from_int(form.theta0(i) * form.theta0(j)));
            let base = e.sub(&et);
            (0..=order).map(|r| if r == 0 { if i == j { ExactMatrix::identity(n) } else { ExactMatrix::zeros(n, n) } } else { base.scale(&(-half.clone()).pow(r as u32 - 1)) }).collect()
        })
        .collect();
    let direct = SeriesAction { n, dim: n, order, kind: Generators::S, coeffs };
    let spec = ModuleSpec::new(n, Some(form.kind), vec![FundamentalFactor::plus(1, half)])?;
    Ok(spec.s_series(order)? == direct)
}

/// Δ(S_ij) = Σ_{kl} S_kl ⊗ T̃_ik(−x) T_lj(x): the S-action of the whole
/// product against the first factor's S tensored with the rest, at `samples`.
pub fn check_coideal(spec: &ModuleSpec, samples: &[Rational]) -> Result<bool> {
    let form = spec.require_form()?;
    let n = spec.n;
    let Some((first, rest)) = spec.factors.split_first() else {
        return Ok(true);
    };
    let head = ModuleSpec::new(n, spec.form, vec![first.clone()])?;
    let tail = ModuleSpec::new(n, spec.form, rest.to_vec())?;
    for x in samples {
        let direct = spec.s_at(x)?;
        let s1 = head.s_at(x)?;
        let tp = tail.t_at(x)?;
        let tm = tail.t_at(&-x.clone())?;
        for i in 0..n {
            for j in 0..n {
                let mut acc = ExactMatrix::zeros(spec.dim(), spec.dim());
                for k in 0..n {
                    for l in 0..n {
                        // T̃_ik(−x) = θ_iθ_k T_{k̄ī}(−x)
                        let c = Rational::from_int(form.theta0(i) * form.theta0(k));
                        let right = tm[form.bar0(k) * n + form.bar0(i)].mul(&tp[l * n + j]).scale(&c);
                        acc = acc.add(&s1[k * n + l].kron(&right));
                    }
                }
                if acc != direct[i * n + j] {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
