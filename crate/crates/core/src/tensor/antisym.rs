use super::{signed_permutations, factorial, LinearOp, SlotPermutation, SparseVec, TensorOperator, TensorSpace};
use crate::qlinalg::{Field, Rational};
use crate::rmat::{OperatorProduct, RFactor, RKind};
use crate::Result;

/// (1/k!) Σ_σ sgn(σ) σ on (C^n)^⊗k.
pub fn antisymmetrizer_direct(n: usize, k: usize) -> TensorOperator<Rational> {
    let space = TensorSpace::new(n, k);
    let perms: Vec<(SlotPermutation, i64)> = signed_permutations(k).into_iter().map(|(p, s)| (SlotPermutation::new(space, p.iter().map(|&i| i + 1).collect()), s)).collect();
    let norm = Rational::new(1, factorial(k));
    let cols = (0..space.dim())
        .map(|j| {
            let mut c = SparseVec::new();
            for (p, s) in &perms {
                c.add_at(p.map_index(j), &(Rational::from_int(*s) * &norm));
            }
            c
        })
        .collect();
    TensorOperator::from_columns(space, cols)
}

/// Ordered product of R_ij(j − i) over lexicographic pairs i < j.
pub fn antisymmetrizer_fusion<F: Field>(n: usize, k: usize) -> Result<TensorOperator<F>> {
    let mut factors = Vec::new();
    for i in 1..=k {
        for j in i + 1..=k {
            factors.push(RFactor::new(RKind::Plain, i, j, F::from_int((j - i) as i64))?);
        }
    }
    Ok(OperatorProduct::new(TensorSpace::new(n, k), factors)?.materialize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::op_p;

    #[test]
    fn direct_examples() {
        assert_eq!(antisymmetrizer_direct(3, 1), TensorOperator::identity(TensorSpace::new(3, 1)));
        let a2 = antisymmetrizer_direct(2, 2);
        assert_eq!(a2.entry(1, 1), Rational::new(1, 2));
        assert_eq!(a2.entry(2, 1), Rational::new(-1, 2));
        assert!(antisymmetrizer_direct(2, 3).is_zero());
        let a3 = antisymmetrizer_direct(3, 3);
        assert_eq!(a3.compose(&a3), a3);
    }

    #[test]
    fn fusion_matches_direct() {
        let s = TensorSpace::new(2, 2);
        let r = antisymmetrizer_fusion::<Rational>(2, 2).unwrap();
        assert_eq!(r, TensorOperator::identity(s).sub(&op_p(s, 1, 2).unwrap()));
        assert_eq!(antisymmetrizer_fusion::<Rational>(3, 3).unwrap(), antisymmetrizer_direct(3, 3).scale(&Rational::from_int(6)));
        assert!(antisymmetrizer_fusion::<Rational>(2, 4).unwrap().is_zero());
    }
}
