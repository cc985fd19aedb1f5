use super::{FormChoice, LinearOp, SparseVec, TensorOperator, TensorSpace};
use crate::qlinalg::Field;
use crate::Result;

/// The two-slot operators P, P̄ = Σ E_ij⊗E_ij, P̃ = Σ Ẽ_ij⊗E_ji and
/// P̂ = Σ Ẽ_ij⊗E_ij.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Elementary {
    P,
    Pbar,
    Ptilde(FormChoice),
    Phat(FormChoice),
}

impl Elementary {
    /// Image of e_a ⊗ e_b (0-based) as a list of (a', b', coefficient).
    pub fn local_image(&self, n: usize, a: usize, b: usize) -> Vec<(usize, usize, i64)> {
        match self {
            Elementary::P => vec![(b, a, 1)],
            Elementary::Pbar => {
                if a == b {
                    (0..n).map(|i| (i, i, 1)).collect()
                } else {
                    Vec::new()
                }
            }
            Elementary::Ptilde(f) => {
                // Ẽ_ij e_a ⊗ E_ji e_b forces i = b, ī = a
                if a == f.bar0(b) {
                    let tb = f.theta0(b);
                    (0..n).map(|j| (f.bar0(j), j, tb * f.theta0(j))).collect()
                } else {
                    Vec::new()
                }
            }
            Elementary::Phat(f) => vec![(f.bar0(b), f.bar0(a), f.theta0(f.bar0(a)) * f.theta0(b))],
        }
    }

    /// Apply on slots (p, q) of `space`.
    pub fn apply_on<F: Field>(&self, space: &TensorSpace, p: usize, q: usize, v: &SparseVec<F>) -> SparseVec<F> {
        let mut out = SparseVec::new();
        for (idx, x) in v.iter() {
            let (a, b) = (space.digit(idx, p), space.digit(idx, q));
            for (a2, b2, c) in self.local_image(space.n, a, b) {
                let j = space.with_digit(space.with_digit(idx, p, a2), q, b2);
                match c {
                    1 => out.add_at(j, x),
                    -1 => out.add_at(j, &-x.clone()),
                    _ => out.add_at(j, &(x.clone() * &F::from_int(c))),
                }
            }
        }
        out
    }
}

/// An elementary operator placed on two slots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Placed {
    pub kind: Elementary,
    pub space: TensorSpace,
    pub p: usize,
    pub q: usize,
}

impl Placed {
    pub fn new(kind: Elementary, space: TensorSpace, p: usize, q: usize) -> Result<Self> {
        space.check_pair(p, q)?;
        Ok(Placed { kind, space, p, q })
    }
}

impl<F: Field> LinearOp<F> for Placed {
    fn space(&self) -> TensorSpace {
        self.space
    }
    fn apply(&self, v: &SparseVec<F>) -> SparseVec<F> {
        self.kind.apply_on(&self.space, self.p, self.q, v)
    }
}

pub fn op_p<F: Field>(space: TensorSpace, p: usize, q: usize) -> Result<TensorOperator<F>> {
    Ok(Placed::new(Elementary::P, space, p, q)?.materialize())
}

pub fn op_pbar<F: Field>(space: TensorSpace, p: usize, q: usize) -> Result<TensorOperator<F>> {
    Ok(Placed::new(Elementary::Pbar, space, p, q)?.materialize())
}

pub fn op_ptilde<F: Field>(space: TensorSpace, p: usize, q: usize, form: FormChoice) -> Result<TensorOperator<F>> {
    Ok(Placed::new(Elementary::Ptilde(form), space, p, q)?.materialize())
}

pub fn op_phat<F: Field>(space: TensorSpace, p: usize, q: usize, form: FormChoice) -> Result<TensorOperator<F>> {
    Ok(Placed::new(Elementary::Phat(form), space, p, q)?.materialize())
}
