use serde::{Deserialize, Serialize};

use super::{SlotPermutation, TensorSpace};
use crate::{Error, Result};

/// Consecutive segments of lengths ν_1..ν_m splitting positions 1..N.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SegmentShape {
    nu: Vec<usize>,
}

impl SegmentShape {
    pub fn new(nu: Vec<usize>) -> Result<Self> {
        if nu.iter().any(|&k| k == 0) {
            return Err(Error::InvalidShape(format!("empty segment in {nu:?}")));
        }
        Ok(SegmentShape { nu })
    }

    /// Shape whose segments are all admissible for C^n: 1 ≤ ν_a ≤ n − 1.
    pub fn for_module(nu: Vec<usize>, n: usize) -> Result<Self> {
        if nu.iter().any(|&k| k == 0 || k >= n) {
            return Err(Error::InvalidShape(format!("segment lengths {nu:?} must lie in 1..{}", n.saturating_sub(1))));
        }
        Self::new(nu)
    }

    pub fn nu(&self) -> &[usize] {
        &self.nu
    }

    pub fn m(&self) -> usize {
        self.nu.len()
    }

    pub fn total(&self) -> usize {
        self.nu.iter().sum()
    }

    pub fn space(&self, n: usize) -> TensorSpace {
        TensorSpace::new(n, self.total())
    }

    /// First position of segment `a` minus one (1-based segments).
    pub fn offset(&self, a: usize) -> usize {
        self.nu[..a - 1].iter().sum()
    }

    /// Position ν_1+…+ν_{a−1}+i.
    pub fn position(&self, a: usize, i: usize) -> usize {
        debug_assert!(i >= 1 && i <= self.nu[a - 1]);
        self.offset(a) + i
    }

    /// (a, i) with position(a, i) = p.
    pub fn locate(&self, p: usize) -> (usize, usize) {
        let mut off = 0;
        for (a, &k) in self.nu.iter().enumerate() {
            if p <= off + k {
                return (a + 1, p - off);
            }
            off += k;
        }
        panic!("position {p} beyond shape {:?}", self.nu);
    }

    pub fn reversed(&self) -> Self {
        SegmentShape { nu: self.nu.iter().rev().copied().collect() }
    }

    /// The sequence 1′..N′: segments in reverse order, each kept in order.
    pub fn primed(&self) -> Vec<usize> {
        (1..=self.m()).rev().flat_map(|a| (1..=self.nu[a - 1]).map(move |i| (a, i))).map(|(a, i)| self.position(a, i)).collect()
    }

    /// The sequence 1″..N″: segments in order, each reversed.
    pub fn double_primed(&self) -> Vec<usize> {
        (1..=self.m()).flat_map(|a| (1..=self.nu[a - 1]).rev().map(move |i| (a, i))).map(|(a, i)| self.position(a, i)).collect()
    }

    /// P_ν: reverses the order of the segment blocks.
    pub fn p_nu(&self, n: usize) -> SlotPermutation {
        let seq = self.primed();
        let mut target = vec![0; seq.len()];
        for (s, &src) in seq.iter().enumerate() {
            target[src - 1] = s + 1;
        }
        SlotPermutation::new(self.space(n), target)
    }

    /// Q_ν: exchanges slot p with slot p″.
    pub fn q_nu(&self, n: usize) -> SlotPermutation {
        SlotPermutation::new(self.space(n), self.double_primed())
    }
}
