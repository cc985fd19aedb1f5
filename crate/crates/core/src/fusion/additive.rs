use super::FusionPoint;
use crate::qlinalg::Field;
use crate::tensor::{Elementary, LinearOp, SparseVec, TensorSpace};
use crate::{Error, Result};

/// Σ_terms c · ∏ K_pq, the pairs of one term being disjoint.
#[derive(Debug, Clone)]
struct Bracket<F> {
    kind: Elementary,
    terms: Vec<(F, Vec<(usize, usize)>)>,
}

/// Left-to-right product of brackets, rightmost applied first.
#[derive(Debug, Clone)]
pub struct AdditiveProduct<F> {
    space: TensorSpace,
    brackets: Vec<Bracket<F>>,
}

impl<F: Field> AdditiveProduct<F> {
    pub fn term_count(&self) -> usize {
        self.brackets.iter().map(|b| b.terms.len()).sum()
    }
}

impl<F: Field> LinearOp<F> for AdditiveProduct<F> {
    fn space(&self) -> TensorSpace {
        self.space
    }

    fn apply(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut cur = v.clone();
        for br in self.brackets.iter().rev() {
            let mut out = SparseVec::new();
            for (c, pairs) in &br.terms {
                let mut w = cur.clone();
                for &(p, q) in pairs {
                    w = br.kind.apply_on(&self.space, p, q, &w);
                }
                out.axpy(c, &w);
            }
            cur = out;
        }
        cur
    }
}

/// All sets of pairs (i, j), i ∈ left, j ∈ right, with distinct i's and j's.
fn bipartite_matchings(left: &[usize], right: &[usize]) -> Vec<Vec<(usize, usize)>> {
    fn go(left: &[usize], right: &[usize], used: &mut Vec<bool>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some((&i, rest)) = left.split_first() else {
            out.push(cur.clone());
            return;
        };
        go(rest, right, used, cur, out);
        for (k, &j) in right.iter().enumerate() {
            if !used[k] {
                used[k] = true;
                cur.push((i, j));
                go(rest, right, used, cur, out);
                cur.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(left, right, &mut vec![false; right.len()], &mut Vec::new(), &mut out);
    out
}

/// All sets of disjoint unordered pairs inside `set`.
fn partial_matchings(set: &[usize]) -> Vec<Vec<(usize, usize)>> {
    fn go(free: Vec<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some((&i, rest)) = free.split_first() else {
            out.push(cur.clone());
            return;
        };
        go(rest.to_vec(), cur, out);
        for (k, &j) in rest.iter().enumerate() {
            let mut left = rest.to_vec();
            left.remove(k);
            cur.push((i, j));
            go(left, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(set.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// 1/∏_{k=1}^{d} (base·scale − k·scale); poles are reported.
fn falling_coeffs<F: Field>(base: &F, scale: i64, dmax: usize, what: &str) -> Result<Vec<F>> {
    let mut out = vec![F::one()];
    for k in 1..=dmax {
        let den = (base.clone() - &F::from_int(k as i64)) * &F::from_int(scale);
        let inv = den.inv().ok_or_else(|| Error::Pole(format!("{what}: denominator vanishes at d = {k}")))?;
        let next = out[k - 1].clone() * &inv;
        out.push(next);
    }
    Ok(out)
}

fn segment_positions<F>(pt: &FusionPoint<F>, a: usize) -> Vec<usize> {
    (1..=pt.shape.nu()[a - 1]).map(|i| pt.shape.position(a, i)).collect()
}

fn matched_bracket<F: Field>(kind: Elementary, matchings: Vec<Vec<(usize, usize)>>, coeffs: &[F]) -> Bracket<F> {
    Bracket { kind, terms: matchings.into_iter().map(|mt| (coeffs[mt.len()].clone(), mt)).collect() }
}

/// B(μ) as ∏_{a<b} Σ_d Σ_{matchings} ∏_k 1/(λ_a−λ_b+ρ_a−ρ_b+ν_b−k) · ∏ P_ij.
pub fn build_b_additive<F: Field>(pt: &FusionPoint<F>) -> Result<AdditiveProduct<F>> {
    let m = pt.m();
    let mut brackets = Vec::new();
    for a in 1..=m {
        for b in a + 1..=m {
            let (sa, sb) = (segment_positions(pt, a), segment_positions(pt, b));
            let base = pt.lambda_rho[a - 1].clone() - &pt.lambda_rho[b - 1] + &F::from_int(pt.nu()[b - 1] as i64);
            let coeffs = falling_coeffs(&base, 1, sa.len().min(sb.len()), "additive B")?;
            brackets.push(matched_bracket(Elementary::P, bipartite_matchings(&sa, &sb), &coeffs));
        }
    }
    Ok(AdditiveProduct { space: pt.shape.space(pt.n), brackets })
}

/// C(μ) as ∏← over a ≤ b of the P̃-matching brackets.
pub fn build_c_additive<F: Field>(pt: &FusionPoint<F>) -> Result<AdditiveProduct<F>> {
    let form = pt.form()?;
    let kind = Elementary::Ptilde(form);
    let sp = pt.algebra == crate::weights::Algebra::Sp;
    let m = pt.m();
    let mut brackets = Vec::new();
    for a in (1..=m).rev() {
        for b in (a..=m).rev() {
            let sa = segment_positions(pt, a);
            if a == b {
                if sp {
                    let coeffs = falling_coeffs(&pt.lambda_rho[a - 1], 2, sa.len() / 2, "additive C diagonal")?;
                    brackets.push(matched_bracket(kind, partial_matchings(&sa), &coeffs));
                }
                continue;
            }
            let sb = segment_positions(pt, b);
            let base = pt.lambda_rho[a - 1].clone() + &pt.lambda_rho[b - 1];
            let coeffs = falling_coeffs(&base, 1, sa.len().min(sb.len()), "additive C")?;
            brackets.push(matched_bracket(kind, bipartite_matchings(&sa, &sb), &coeffs));
        }
    }
    Ok(AdditiveProduct { space: pt.shape.space(pt.n), brackets })
}
