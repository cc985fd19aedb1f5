use crate::qlinalg::{ExactMatrix, Rational};
use crate::tensor::{increasing_tuples, FormChoice};

fn position_of(tuples: &[Vec<usize>], t: &[usize]) -> usize {
    tuples.binary_search_by(|x| x.as_slice().cmp(t)).expect("tuple is increasing")
}

/// x_i ∂_j on Λ^k(C^n), 0-based i, j.
pub fn creation_annihilation(n: usize, k: usize, i: usize, j: usize) -> ExactMatrix {
    let tuples = increasing_tuples(n, k);
    let mut m = ExactMatrix::zeros(tuples.len(), tuples.len());
    for (col, t) in tuples.iter().enumerate() {
        let Some(pj) = t.iter().position(|&a| a == j) else { continue };
        let mut rest = t.clone();
        rest.remove(pj);
        if rest.contains(&i) {
            continue;
        }
        let below = rest.iter().filter(|&&a| a < i).count();
        let sign = if (pj + below) % 2 == 0 { 1 } else { -1 };
        rest.insert(below, i);
        m.set(position_of(&tuples, &rest), col, Rational::from_int(sign));
    }
    m
}

/// θ_i θ_j x_{j̄} ∂_{ī}, the operator of the sign-flipped factor.
pub fn conjugate_creation_annihilation(form: FormChoice, k: usize, i: usize, j: usize) -> ExactMatrix {
    let c = form.theta0(i) * form.theta0(j);
    creation_annihilation(form.n, k, form.bar0(j), form.bar0(i)).scale(&Rational::from_int(c))
}

/// The complement map Λ^{n−k} → Λ^k:
/// e_I ↦ sgn(I, J) · ∏_{j∈J} θ_j · e_{j̄_1} ∧ … ∧ e_{j̄_k}, J the complement of I.
pub fn complement_map(form: FormChoice, k: usize) -> ExactMatrix {
    let n = form.n;
    let src = increasing_tuples(n, n - k);
    let dst = increasing_tuples(n, k);
    let mut m = ExactMatrix::zeros(dst.len(), src.len());
    for (col, ii) in src.iter().enumerate() {
        let jj: Vec<usize> = (0..n).filter(|a| !ii.contains(a)).collect();
        let mut concat = ii.clone();
        concat.extend(&jj);
        let mut sign = permutation_sign(&concat);
        for &j in &jj {
            sign *= form.theta0(j);
        }
        let barred: Vec<usize> = jj.iter().map(|&j| form.bar0(j)).collect();
        sign *= permutation_sign(&barred);
        let mut sorted = barred;
        sorted.sort_unstable();
        m.set(position_of(&dst, &sorted), col, Rational::from_int(sign));
    }
    m
}

/// Sign of the permutation sorting a sequence of distinct integers.
pub fn permutation_sign(seq: &[usize]) -> i64 {
    let mut inv = 0;
    for a in 0..seq.len() {
        for b in a + 1..seq.len() {
            if seq[a] > seq[b] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_commutators() {
        let n = 4;
        for k in 0..=n {
            for (i, j, a, b) in [(0, 1, 1, 2), (2, 0, 0, 3), (1, 1, 1, 2), (3, 2, 2, 3)] {
                let x = creation_annihilation(n, k, i, j);
                let y = creation_annihilation(n, k, a, b);
                let lhs = x.mul(&y).sub(&y.mul(&x));
                let mut rhs = ExactMatrix::zeros(x.rows(), x.cols());
                if j == a {
                    rhs = rhs.add(&creation_annihilation(n, k, i, b));
                }
                if b == i {
                    rhs = rhs.sub(&creation_annihilation(n, k, a, j));
                }
                assert_eq!(lhs, rhs, "k={k} ({i},{j}) ({a},{b})");
            }
        }
        // occupancy on the top power
        assert_eq!(creation_annihilation(3, 3, 1, 1), ExactMatrix::identity(1));
        assert!(creation_annihilation(3, 3, 0, 1).is_zero());
    }
}
