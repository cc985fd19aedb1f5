//! The intertwiners B(μ), C(μ) as ordered R-matrix products, their additive
//! forms and eigenvalues on φ, the normalized operators I(μ), J(μ) with exact
//! limits along a one-parameter line, and the D-operators.

mod additive;
mod dops;
mod normalize;

pub use additive::{build_b_additive, build_c_additive};
pub use dops::{check_annihilation, check_lemma_one, check_lemma_two, d_operator_one, d_operator_two, AnnihilationCase};
pub use normalize::{normalize_i, normalize_j, restrict_i, restrict_i_perturbed, restrict_j, restrict_j_perturbed, FusionInput, IntertwinerKind, IntertwinerResult};

use crate::qlinalg::{Field, Poly, RatFunc, Rational};
use crate::rmat::{OperatorProduct, RFactor, RKind};
use crate::tensor::{FormChoice, SegmentShape};
use crate::weights::{Algebra, WeightPair};
use crate::{Error, Result};

/// Everything the product formulas need, over an arbitrary coefficient field.
#[derive(Debug, Clone)]
pub struct FusionPoint<F> {
    pub algebra: Algebra,
    pub n: usize,
    pub shape: SegmentShape,
    /// λ_a + ρ_a
    pub lambda_rho: Vec<F>,
    /// μ_a + ρ_a
    pub mu_rho: Vec<F>,
    /// x_1..x_N
    pub x: Vec<F>,
}

impl<F: Field> FusionPoint<F> {
    fn assemble(algebra: Algebra, n: usize, nu: Vec<usize>, lambda_rho: Vec<F>, mu_rho: Vec<F>) -> Result<Self> {
        let shape = SegmentShape::new(nu)?;
        if shape.nu().iter().any(|&k| k > n) {
            return Err(Error::InvalidShape(format!("segment lengths {:?} exceed n = {n}", shape.nu())));
        }
        let half = F::from_rational(&Rational::new(1, 2));
        let mut x = Vec::with_capacity(shape.total());
        for (a, &k) in shape.nu().iter().enumerate() {
            for i in 1..=k {
                x.push(mu_rho[a].clone() + &half + &F::from_int((k - i) as i64));
            }
        }
        Ok(FusionPoint { algebra, n, shape, lambda_rho, mu_rho, x })
    }

    pub fn m(&self) -> usize {
        self.shape.m()
    }

    pub fn nu(&self) -> &[usize] {
        self.shape.nu()
    }

    pub fn form(&self) -> Result<FormChoice> {
        let kind = self.algebra.form_kind().ok_or_else(|| Error::Precondition("C(μ) needs an sp or so weight".into()))?;
        FormChoice::new(self.n, kind)
    }

    /// x_p (1-based)
    pub fn xp(&self, p: usize) -> &F {
        &self.x[p - 1]
    }
}

impl FusionPoint<Rational> {
    pub fn from_pair(pair: &WeightPair) -> Result<Self> {
        Self::assemble(pair.algebra, pair.n, pair.nu()?, pair.lambda_rho(), pair.mu_rho())
    }
}

/// μ(t) = μ_base + t·d and λ(t) = λ_base + t·d, so ν stays fixed.
#[derive(Debug, Clone, PartialEq)]
pub struct MuLine {
    pub base: WeightPair,
    pub direction: Vec<Rational>,
}

const LINE_PRIME: i64 = 10007;

impl MuLine {
    /// Default direction d_a = 2^{a−1}/10007.
    pub fn new(base: WeightPair) -> Result<Self> {
        let direction = (0..base.m()).map(|a| Rational::new(1 << a, LINE_PRIME)).collect();
        Self::with_direction(base, direction)
    }

    pub fn with_direction(base: WeightPair, direction: Vec<Rational>) -> Result<Self> {
        if direction.len() != base.m() {
            return Err(Error::InvalidShape(format!("direction has {} entries for rank {}", direction.len(), base.m())));
        }
        if !base.is_dominant() {
            return Err(Error::Precondition("the base of a line needs λ+ρ dominant".into()));
        }
        base.nu()?;
        let line = MuLine { base, direction };
        line.certify()?;
        Ok(line)
    }

    /// Every genericity constraint, as a linear polynomial in t, must not be
    /// an integer constant.
    pub fn certify(&self) -> Result<()> {
        let mu = &self.base.mu;
        let d = &self.direction;
        let ok = |c0: Rational, c1: Rational| !c1.is_zero() || !c0.is_integer();
        let m = mu.len();
        let twisted = self.base.algebra.is_twisted();
        for a in 0..m {
            for b in a + 1..m {
                let mut fine = ok(&mu[a] - &mu[b], &d[a] - &d[b]);
                if twisted {
                    fine &= ok(&mu[a] + &mu[b], &d[a] + &d[b]);
                }
                if !fine {
                    return Err(Error::Precondition(format!("direction {d:?} keeps labels {a},{b} non-generic along the line")));
                }
            }
            if twisted && !ok(&mu[a] * &Rational::from_int(2), &d[a] * &Rational::from_int(2)) {
                return Err(Error::Precondition(format!("direction keeps 2μ_{} integral", a + 1)));
            }
        }
        Ok(())
    }

    pub fn point(&self) -> Result<FusionPoint<RatFunc>> {
        let lift = |v: Vec<Rational>| -> Vec<RatFunc> { v.into_iter().zip(&self.direction).map(|(c, d)| RatFunc::from_poly(Poly::linear(c, d.clone()))).collect() };
        FusionPoint::assemble(self.base.algebra, self.base.n, self.base.nu()?, lift(self.base.lambda_rho()), lift(self.base.mu_rho()))
    }

    /// The pair at parameter t.
    pub fn at(&self, t: &Rational) -> Result<WeightPair> {
        let shift = |v: &[Rational]| v.iter().zip(&self.direction).map(|(c, d)| c + &(d * t)).collect();
        WeightPair::new(self.base.algebra, self.base.n, shift(&self.base.lambda), shift(&self.base.mu))
    }
}

/// The pairs (p, q) of B(μ) in product order, left to right.
pub fn b_pairs(shape: &SegmentShape) -> Vec<(usize, usize)> {
    let dp = shape.double_primed();
    let mut out = Vec::new();
    for p in 1..=shape.total() {
        let (a, _) = shape.locate(p);
        for &q in &dp {
            if shape.locate(q).0 > a {
                out.push((p, q));
            }
        }
    }
    out
}

/// B(μ) = ∏→ R_pq(x_q − x_p) over pairs in different segments.
pub fn build_b<F: Field>(pt: &FusionPoint<F>) -> Result<OperatorProduct<F>> {
    build_b_perturbed(pt, None)
}

/// B(μ) with `delta` added to the argument of factor `k` (negative controls).
pub fn build_b_perturbed<F: Field>(pt: &FusionPoint<F>, perturb: Option<(usize, F)>) -> Result<OperatorProduct<F>> {
    let factors = b_pairs(&pt.shape)
        .into_iter()
        .enumerate()
        .map(|(k, (p, q))| {
            let mut arg = pt.xp(q).clone() - pt.xp(p);
            if let Some((j, d)) = &perturb {
                if *j == k {
                    arg += d;
                }
            }
            RFactor::new(RKind::Plain, p, q, arg).map_err(|e| pole_hint(e, "B(μ)"))
        })
        .collect::<Result<Vec<_>>>()?;
    OperatorProduct::new(pt.shape.space(pt.n), factors)
}

/// C(μ) = ∏← R̃_pq(n − x_p − x_q) over lexicographic pairs p < q.
pub fn build_c<F: Field>(pt: &FusionPoint<F>) -> Result<OperatorProduct<F>> {
    build_c_filtered(pt, |_, _| true)
}

/// C(μ) without the factors whose two slots share a segment.
pub fn build_c_cross<F: Field>(pt: &FusionPoint<F>) -> Result<OperatorProduct<F>> {
    let s = pt.shape.clone();
    build_c_filtered(pt, move |p, q| s.locate(p).0 != s.locate(q).0)
}

fn build_c_filtered<F: Field>(pt: &FusionPoint<F>, keep: impl Fn(usize, usize) -> bool) -> Result<OperatorProduct<F>> {
    let form = pt.form()?;
    let nn = F::from_int(pt.n as i64);
    let big_n = pt.shape.total();
    let mut factors = Vec::new();
    for p in (1..=big_n).rev() {
        for q in (p + 1..=big_n).rev() {
            if keep(p, q) {
                let arg = nn.clone() - pt.xp(p) - pt.xp(q);
                factors.push(RFactor::new(RKind::Tilde(form), p, q, arg).map_err(|e| pole_hint(e, "C(μ)"))?);
            }
        }
    }
    OperatorProduct::new(pt.shape.space(pt.n), factors)
}

fn pole_hint(e: Error, what: &str) -> Error {
    match e {
        Error::Pole(s) => Error::Pole(format!("{what}: {s}; evaluate along a MuLine instead")),
        e => e,
    }
}

fn divide<F: Field>(num: F, den: &F, what: impl FnOnce() -> String) -> Result<F> {
    Ok(num * &den.inv().ok_or_else(|| Error::Pole(what()))?)
}

/// Eigenvalue of B(μ) on φ_{ν_1} ⊗ … ⊗ φ_{ν_m}.
pub fn beigen<F: Field>(pt: &FusionPoint<F>) -> Result<F> {
    let nu = pt.nu();
    let mut acc = F::one();
    for a in 0..pt.m() {
        for b in a + 1..pt.m() {
            let c = pt.lambda_rho[a].clone() - &pt.lambda_rho[b];
            let num = c.clone() + &F::from_int(nu[b] as i64);
            let den = if nu[a] <= nu[b] { pt.mu_rho[a].clone() - &pt.mu_rho[b] } else { c };
            acc *= &divide(num, &den, || format!("B eigenvalue factor ({},{})", a + 1, b + 1))?;
        }
    }
    Ok(acc)
}

/// Eigenvalue of C(μ) on φ without the sp diagonal factor.
pub fn ceigen<F: Field>(pt: &FusionPoint<F>) -> Result<F> {
    let nu = pt.nu();
    let mut acc = F::one();
    for a in 0..pt.m() {
        for b in a + 1..pt.m() {
            if nu[a] + nu[b] >= pt.n {
                let num = pt.lambda_rho[a].clone() + &pt.lambda_rho[b];
                let den = pt.mu_rho[a].clone() + &pt.mu_rho[b];
                acc *= &divide(num, &den, || format!("C eigenvalue factor ({},{})", a + 1, b + 1))?;
            }
        }
    }
    Ok(acc)
}

/// The sp diagonal factor; 1 for so.
pub fn deigen<F: Field>(pt: &FusionPoint<F>) -> Result<F> {
    let mut acc = F::one();
    if pt.algebra != Algebra::Sp {
        return Ok(acc);
    }
    for (a, &k) in pt.nu().iter().enumerate() {
        if 2 * k >= pt.n {
            acc *= &divide(pt.lambda_rho[a].clone(), &pt.mu_rho[a], || format!("sp eigenvalue factor {}", a + 1))?;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests;
