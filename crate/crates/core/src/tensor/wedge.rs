use super::{LinearOp, SegmentShape, SparseVec, TensorSpace};
use crate::qlinalg::{ExactMatrix, Field, Matrix, Rational};
use crate::{Error, Result};

/// Strictly increasing k-tuples of {0..n−1} in lexicographic order.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// All permutations of 0..k with their signs.
pub fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        let k = used.len();
        if cur.len() == k {
            let mut inv = 0;
            for i in 0..k {
                for j in i + 1..k {
                    if cur[i] > cur[j] {
                        inv += 1;
                    }
                }
            }
            out.push((cur.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for i in 0..k {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

pub fn factorial(k: usize) -> i64 {
    (1..=k as i64).product()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut b = 1usize;
    for i in 0..k {
        b = b * (n - i) / (i + 1);
    }
    b
}

/// Basis of Λ^{ν_1}(C^n) ⊗ … ⊗ Λ^{ν_m}(C^n) inside (C^n)^⊗N.
///
/// Basis vector for increasing tuples (I_1, …, I_m) embeds as the product of
/// the unnormalized antisymmetric sums Σ_σ sgn(σ) e_{i_σ(1)} ⊗ … .
#[derive(Debug, Clone)]
pub struct WedgeBasis {
    n: usize,
    degrees: Vec<usize>,
    tuples: Vec<Vec<Vec<usize>>>,
    perms: Vec<Vec<(Vec<usize>, i64)>>,
    space: TensorSpace,
}

impl WedgeBasis {
    pub fn new(n: usize, degrees: &[usize]) -> Result<Self> {
        if degrees.iter().any(|&k| k > n) {
            return Err(Error::InvalidShape(format!("exterior degrees {degrees:?} exceed n = {n}")));
        }
        Ok(WedgeBasis {
            n,
            degrees: degrees.to_vec(),
            tuples: degrees.iter().map(|&k| increasing_tuples(n, k)).collect(),
            perms: degrees.iter().map(|&k| signed_permutations(k)).collect(),
            space: TensorSpace::new(n, degrees.iter().sum()),
        })
    }

    pub fn for_shape(n: usize, shape: &SegmentShape) -> Result<Self> {
        Self::new(n, shape.nu())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn space(&self) -> TensorSpace {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.tuples.iter().map(|t| t.len()).product()
    }

    /// Per-factor tuple indices of basis element `w` (first factor most significant).
    pub fn factor_indices(&self, mut w: usize) -> Vec<usize> {
        let mut out = vec![0; self.tuples.len()];
        for a in (0..self.tuples.len()).rev() {
            let len = self.tuples[a].len();
            out[a] = w % len;
            w /= len;
        }
        out
    }

    pub fn element(&self, w: usize) -> Vec<&[usize]> {
        self.factor_indices(w).iter().enumerate().map(|(a, &t)| self.tuples[a][t].as_slice()).collect()
    }

    pub fn index_of(&self, factor_idx: &[usize]) -> usize {
        factor_idx.iter().enumerate().fold(0, |acc, (a, &t)| acc * self.tuples[a].len() + t)
    }

    /// Tensor index of the concatenated increasing tuples of `w`.
    pub fn leading_index(&self, w: usize) -> usize {
        let digits: Vec<usize> = self.element(w).into_iter().flatten().copied().collect();
        self.space.index(&digits)
    }

    pub fn embed_vec<F: Field>(&self, w: usize) -> SparseVec<F> {
        let elem = self.element(w);
        let mut partial: Vec<(Vec<usize>, i64)> = vec![(Vec::new(), 1)];
        for (a, tuple) in elem.iter().enumerate() {
            let mut next = Vec::with_capacity(partial.len() * self.perms[a].len());
            for (digits, s) in &partial {
                for (perm, sp) in &self.perms[a] {
                    let mut d = digits.clone();
                    d.extend(perm.iter().map(|&i| tuple[i]));
                    next.push((d, s * sp));
                }
            }
            partial = next;
        }
        let mut v = SparseVec::new();
        for (d, s) in partial {
            v.add_at(self.space.index(&d), &F::from_int(s));
        }
        v
    }

    /// Wedge coordinates of a vector assumed to lie in the subspace.
    pub fn project_vec<F: Field>(&self, v: &SparseVec<F>) -> Vec<F> {
        (0..self.dim()).map(|w| v.get(self.leading_index(w))).collect()
    }

    pub fn embed_coords<F: Field>(&self, c: &[F]) -> SparseVec<F> {
        let mut out = SparseVec::new();
        for (w, x) in c.iter().enumerate() {
            if !x.is_zero() {
                out.axpy(x, &self.embed_vec(w));
            }
        }
        out
    }

    pub fn embed_matrix(&self) -> ExactMatrix {
        let cols: Vec<Vec<Rational>> = (0..self.dim()).map(|w| self.embed_vec::<Rational>(w).to_dense(self.space.dim())).collect();
        Matrix::from_cols(self.space.dim(), &cols)
    }

    pub fn project_matrix(&self) -> ExactMatrix {
        let mut m = Matrix::zeros(self.dim(), self.space.dim());
        for w in 0..self.dim() {
            m.set(w, self.leading_index(w), Rational::one());
        }
        m
    }

    /// φ_{ν_1} ⊗ … ⊗ φ_{ν_m} with φ_k = A_k(e_1 ⊗ … ⊗ e_k).
    pub fn phi_vector(&self) -> SparseVec<Rational> {
        let norm: i64 = self.degrees.iter().map(|&k| factorial(k)).product();
        self.embed_vec::<Rational>(0).scale(&Rational::new(1, norm))
    }

    /// Matrix of `op` from this wedge subspace to `dst`; fails when the image
    /// of some basis vector leaves `dst`.
    pub fn restrict<F: Field>(&self, op: &dyn LinearOp<F>, dst: &WedgeBasis) -> Result<Matrix<F>> {
        let cols = (0..self.dim()).map(|w| self.restrict_column(|v| op.apply(v), dst, w)).collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_cols(dst.dim(), &cols))
    }

    pub fn restrict_column<F: Field>(&self, op: impl Fn(&SparseVec<F>) -> SparseVec<F>, dst: &WedgeBasis, w: usize) -> Result<Vec<F>> {
        let y = op(&self.embed_vec(w));
        let c = dst.project_vec(&y);
        if dst.embed_coords(&c) != y {
            return Err(Error::Contradiction(format!("operator does not preserve the wedge subspace (column {w})")));
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::op_p;

    #[test]
    fn counts() {
        assert_eq!(increasing_tuples(4, 2).len(), 6);
        assert_eq!(signed_permutations(3).iter().map(|p| p.1).sum::<i64>(), 0);
        assert_eq!(binomial(5, 2), 10);
        let w = WedgeBasis::new(3, &[2, 1]).unwrap();
        assert_eq!(w.dim(), 9);
        assert!(WedgeBasis::new(2, &[3]).is_err());
    }

    #[test]
    fn embed_project() {
        for (n, deg) in [(3usize, vec![2, 1]), (2, vec![2]), (4, vec![1, 1]), (4, vec![3, 2])] {
            let w = WedgeBasis::new(n, &deg).unwrap();
            let prod = w.project_matrix().mul(&w.embed_matrix());
            assert_eq!(prod, ExactMatrix::identity(w.dim()));
        }
        let w = WedgeBasis::new(1, &[1, 1]).unwrap();
        assert_eq!(w.embed_matrix(), ExactMatrix::identity(1));
        // (2), n = 2: e1⊗e2 − e2⊗e1
        let w = WedgeBasis::new(2, &[2]).unwrap();
        let v = w.embed_vec::<Rational>(0);
        assert_eq!(v.get(1), Rational::one());
        assert_eq!(v.get(2), -Rational::one());
    }

    #[test]
    fn antisymmetric_under_adjacent_swaps() {
        let w = WedgeBasis::new(4, &[3]).unwrap();
        for b in 0..w.dim() {
            let v = w.embed_vec::<Rational>(b);
            for p in 1..3 {
                let sw = op_p::<Rational>(w.space(), p, p + 1).unwrap();
                assert_eq!(sw.apply(&v), v.scale(&-Rational::one()));
            }
        }
    }

    #[test]
    fn phi_examples() {
        let phi = WedgeBasis::new(3, &[1]).unwrap().phi_vector();
        assert_eq!(phi, SparseVec::basis(0));
        let phi = WedgeBasis::new(2, &[2]).unwrap().phi_vector();
        assert_eq!(phi.get(1), Rational::new(1, 2));
        assert_eq!(phi.get(2), Rational::new(-1, 2));
        let phi = WedgeBasis::new(2, &[1, 1]).unwrap().phi_vector();
        assert_eq!(phi, SparseVec::basis(0));
    }
}
