use crate::qlinalg::Rational;
use crate::tensor::signed_permutations;
use crate::{Error, Result};

const ORBIT_CAP: usize = 6;

/// Element of H_m = S_m ⋉ Z_2^m acting by w(e_a) = s_a e_{σ(a)}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    flips: Vec<bool>,
}

impl SignedPermutation {
    /// `perm[a] = σ(a)` (0-based); `flips[a]` negates the a-th basis vector first.
    pub fn new(perm: Vec<usize>, flips: Vec<bool>) -> Result<Self> {
        let m = perm.len();
        let mut seen = vec![false; m];
        if flips.len() != m || perm.iter().any(|&p| p >= m || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidShape(format!("not a signed permutation: {perm:?} {flips:?}")));
        }
        Ok(SignedPermutation { perm, flips })
    }

    pub fn identity(m: usize) -> Self {
        SignedPermutation { perm: (0..m).collect(), flips: vec![false; m] }
    }

    /// The simple reflection s_c (1-based c < m) or, for c = 0, the flip of the first label.
    pub fn simple(m: usize, c: usize) -> Self {
        let mut w = Self::identity(m);
        if c == 0 {
            w.flips[0] = true;
        } else {
            w.perm.swap(c - 1, c);
        }
        w
    }

    pub fn m(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn flips(&self) -> &[bool] {
        &self.flips
    }

    pub fn has_flips(&self) -> bool {
        self.flips.iter().any(|&f| f)
    }

    /// (wλ)_{σ(a)} = s_a λ_a
    pub fn act(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); v.len()];
        for (a, x) in v.iter().enumerate() {
            out[self.perm[a]] = if self.flips[a] { -x.clone() } else { x.clone() };
        }
        out
    }

    /// self ∘ o
    pub fn compose(&self, o: &SignedPermutation) -> Self {
        let m = self.m();
        let mut perm = vec![0; m];
        let mut flips = vec![false; m];
        for a in 0..m {
            let b = o.perm[a];
            perm[a] = self.perm[b];
            flips[a] = o.flips[a] ^ self.flips[b];
        }
        SignedPermutation { perm, flips }
    }

    /// All of S_m, or all of H_m when `signed`; identity first.
    pub fn enumerate(m: usize, signed: bool) -> Result<Vec<SignedPermutation>> {
        if m > ORBIT_CAP {
            return Err(Error::OrbitTooLarge(m));
        }
        let mut perms: Vec<Vec<usize>> = signed_permutations(m).into_iter().map(|(p, _)| p).collect();
        perms.sort();
        let masks = if signed { 1usize << m } else { 1 };
        let mut out = Vec::with_capacity(perms.len() * masks);
        for mask in 0..masks {
            for p in &perms {
                out.push(SignedPermutation { perm: p.clone(), flips: (0..m).map(|a| mask >> a & 1 == 1).collect() });
            }
        }
        Ok(out)
    }
}
