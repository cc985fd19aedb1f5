use crate::{Error, Result};

/// (C^n)^⊗N with the lexicographic tensor basis; slot 1 is the most
/// significant digit of a basis index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TensorSpace {
    pub n: usize,
    pub slots: usize,
}

impl TensorSpace {
    pub fn new(n: usize, slots: usize) -> Self {
        assert!(n >= 1);
        TensorSpace { n, slots }
    }

    pub fn dim(&self) -> usize {
        self.n.pow(self.slots as u32)
    }

    fn stride(&self, slot: usize) -> usize {
        self.n.pow((self.slots - slot) as u32)
    }

    /// 0-based digit in a 1-based slot.
    pub fn digit(&self, idx: usize, slot: usize) -> usize {
        (idx / self.stride(slot)) % self.n
    }

    pub fn with_digit(&self, idx: usize, slot: usize, d: usize) -> usize {
        let s = self.stride(slot);
        idx - self.digit(idx, slot) * s + d * s
    }

    pub fn digits(&self, idx: usize) -> Vec<usize> {
        (1..=self.slots).map(|s| self.digit(idx, s)).collect()
    }

    pub fn index(&self, digits: &[usize]) -> usize {
        debug_assert_eq!(digits.len(), self.slots);
        digits.iter().fold(0, |acc, &d| acc * self.n + d)
    }

    pub fn check_pair(&self, p: usize, q: usize) -> Result<()> {
        if p == 0 || q == 0 || p > self.slots || q > self.slots || p == q {
            return Err(Error::SlotOutOfRange { p, q, slots: self.slots });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digits_round_trip() {
        let s = TensorSpace::new(3, 4);
        assert_eq!(s.dim(), 81);
        for idx in 0..s.dim() {
            assert_eq!(s.index(&s.digits(idx)), idx);
        }
        assert_eq!(s.digits(5), vec![0, 0, 1, 2]);
        assert_eq!(s.with_digit(5, 1, 2), 59);
        assert!(s.check_pair(1, 5).is_err());
        assert!(s.check_pair(2, 2).is_err());
    }
}
