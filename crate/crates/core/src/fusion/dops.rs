use super::{build_c, FusionPoint};
use crate::qlinalg::{Field, Rational};
use crate::rmat::{OperatorProduct, RFactor, RKind};
use crate::tensor::{Elementary, FormChoice, LinearOp, SparseVec, TensorSpace, WedgeBasis};
use crate::weights::{Algebra, WeightPair};
use crate::{Error, Result};

/// D(x, p) = ∏←_{j=2..p} ∏←_{i=1..j−1} R̃_ij(i+j−2x−1) on `slots` slots.
pub fn d_operator_one<F: Field>(form: FormChoice, slots: usize, x: &F, p: usize) -> Result<OperatorProduct<F>> {
    let space = TensorSpace::new(form.n, slots);
    let mut factors = Vec::new();
    for j in (2..=p).rev() {
        for i in (1..j).rev() {
            let arg = F::from_int((i + j) as i64 - 1) - &(x.clone() * &F::from_int(2));
            factors.push(RFactor::new(RKind::Tilde(form), i, j, arg)?);
        }
    }
    OperatorProduct::new(space, factors)
}

/// D(x, p, q) = ∏←_{i=1..p} ∏←_{j=1..q−ν1} R̃_{i,ν1+j}(i+j−x−1) on ν1+ν2 slots.
pub fn d_operator_two<F: Field>(form: FormChoice, nu: (usize, usize), x: &F, p: usize, q: usize) -> Result<OperatorProduct<F>> {
    let (nu1, nu2) = nu;
    if q < nu1 || q > nu1 + nu2 || p > nu1 {
        return Err(Error::Precondition(format!("D(x, {p}, {q}) outside the shape ({nu1}, {nu2})")));
    }
    let space = TensorSpace::new(form.n, nu1 + nu2);
    let mut factors = Vec::new();
    for i in (1..=p).rev() {
        for j in (1..=q - nu1).rev() {
            let arg = F::from_int((i + j) as i64 - 1) - x;
            factors.push(RFactor::new(RKind::Tilde(form), i, nu1 + j, arg)?);
        }
    }
    OperatorProduct::new(space, factors)
}

fn samples() -> Vec<Rational> {
    ["7/3", "-5/4", "11/7"].iter().map(|s| s.parse().unwrap()).collect()
}

fn proportional_on(wedge: &WedgeBasis, lhs: &dyn LinearOp<Rational>, rhs: &dyn LinearOp<Rational>, pre: &dyn Fn(&SparseVec<Rational>) -> SparseVec<Rational>, c: &Rational) -> bool {
    (0..wedge.dim()).all(|w| {
        let v = wedge.embed_vec::<Rational>(w);
        pre(&lhs.apply(&v)) == pre(&rhs.apply(&v)).scale(c)
    })
}

/// P̃_{p−1,p} D(x,p) = (x+n/2−p+1)/(x−1) · P̃_{p−1,p} D(x−1,p−2) on Λ^{ν1},
/// for every p = 2..ν1 and a few sample x.
pub fn check_lemma_one(form: FormChoice, nu1: usize) -> Result<bool> {
    let n = form.n;
    let wedge = WedgeBasis::new(n, &[nu1])?;
    let space = wedge.space();
    let half_n = Rational::new(n as i64, 2);
    for x in samples() {
        for p in 2..=nu1 {
            let lhs = d_operator_one(form, nu1, &x, p)?;
            let rhs = d_operator_one(form, nu1, &(&x - &Rational::one()), p - 2)?;
            let c = (&x + &half_n - &Rational::from_int(p as i64 - 1)) / (&x - &Rational::one());
            let pt = |v: &SparseVec<Rational>| Elementary::Ptilde(form).apply_on(&space, p - 1, p, v);
            if !proportional_on(&wedge, &lhs, &rhs, &pt, &c) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// P̃_pq D(x,p,q) = (x+n−p−q+ν1+1)/(x−1) · P̃_pq D(x−1,p−1,q−1) on
/// Λ^{ν1} ⊗ Λ^{ν2}, for every p ≤ ν1 < q and a few sample x.
pub fn check_lemma_two(form: FormChoice, nu: (usize, usize)) -> Result<bool> {
    let n = form.n;
    let wedge = WedgeBasis::new(n, &[nu.0, nu.1])?;
    let space = wedge.space();
    for x in samples() {
        for p in 1..=nu.0 {
            for q in nu.0 + 1..=nu.0 + nu.1 {
                let lhs = d_operator_two(form, nu, &x, p, q)?;
                let rhs = d_operator_two(form, nu, &(&x - &Rational::one()), p - 1, q - 1)?;
                let c = (&x + &Rational::from_int(n as i64 + nu.0 as i64 + 1 - p as i64 - q as i64)) / (&x - &Rational::one());
                let pt = |v: &SparseVec<Rational>| Elementary::Ptilde(form).apply_on(&space, p, q, v);
                if !proportional_on(&wedge, &lhs, &rhs, &pt, &c) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnnihilationCase {
    /// sp, m = 1, 2ν_1 > n: C(μ) kills Λ^{ν_1} when λ_1+ρ_1 = 0.
    One,
    /// m = 2, ν_1+ν_2 > n: Z kills Λ^{ν_1}⊗Λ^{ν_2} when λ_1+λ_2+ρ_1+ρ_2 = 0.
    Two,
}

/// Whether the relevant operator vanishes on the wedge subspace. The weight
/// condition is not enforced, so generic controls report `false`.
pub fn check_annihilation(case: AnnihilationCase, pair: &WeightPair) -> Result<bool> {
    let pt = FusionPoint::from_pair(pair)?;
    let nu = pt.nu().to_vec();
    let n = pt.n;
    let wedge = WedgeBasis::for_shape(n, &pt.shape)?;
    let op: Box<dyn LinearOp<Rational>> = match case {
        AnnihilationCase::One => {
            if pair.algebra != Algebra::Sp || nu.len() != 1 || 2 * nu[0] <= n {
                return Err(Error::Precondition(format!("annihilation case one needs sp, m = 1 and 2ν_1 > n (got {:?}, ν = {nu:?})", pair.algebra)));
            }
            Box::new(build_c(&pt)?)
        }
        AnnihilationCase::Two => {
            if !pair.algebra.is_twisted() || nu.len() != 2 || nu[0] + nu[1] <= n {
                return Err(Error::Precondition(format!("annihilation case two needs sp/so, m = 2 and ν_1+ν_2 > n (got ν = {nu:?})")));
            }
            let x = &pt.lambda_rho[0] + &pt.lambda_rho[1];
            Box::new(d_operator_two(pt.form()?, (nu[0], nu[1]), &x, nu[0], nu[0] + nu[1])?)
        }
    };
    Ok((0..wedge.dim()).all(|w| op.apply(&wedge.embed_vec(w)).is_zero()))
}
