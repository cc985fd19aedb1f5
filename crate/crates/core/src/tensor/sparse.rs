use std::collections::BTreeMap;

use super::TensorSpace;
use crate::qlinalg::{Field, Matrix};

/// Sparse vector keyed by tensor-basis index; no stored zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct SparseVec<F> {
    entries: BTreeMap<usize, F>,
}

impl<F: Field> Default for SparseVec<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Field> SparseVec<F> {
    pub fn new() -> Self {
        SparseVec { entries: BTreeMap::new() }
    }

    pub fn basis(idx: usize) -> Self {
        let mut v = Self::new();
        v.entries.insert(idx, F::one());
        v
    }

    pub fn from_dense(v: &[F]) -> Self {
        let mut out = Self::new();
        for (i, x) in v.iter().enumerate() {
            if !x.is_zero() {
                out.entries.insert(i, x.clone());
            }
        }
        out
    }

    pub fn to_dense(&self, dim: usize) -> Vec<F> {
        let mut v = vec![F::zero(); dim];
        for (&i, x) in &self.entries {
            v[i] = x.clone();
        }
        v
    }

    pub fn get(&self, idx: usize) -> F {
        self.entries.get(&idx).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &F)> {
        self.entries.iter().map(|(&i, x)| (i, x))
    }

    /// self[idx] += c
    pub fn add_at(&mut self, idx: usize, c: &F) {
        if c.is_zero() {
            return;
        }
        match self.entries.get_mut(&idx) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.entries.remove(&idx);
                }
            }
            None => {
                self.entries.insert(idx, c.clone());
            }
        }
    }

    /// self += c·o
    pub fn axpy(&mut self, c: &F, o: &SparseVec<F>) {
        if c.is_zero() {
            return;
        }
        for (&i, x) in &o.entries {
            self.add_at(i, &(x.clone() * c));
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::new();
        out.axpy(c, self);
        out
    }

    pub fn sub(&self, o: &SparseVec<F>) -> Self {
        let mut out = self.clone();
        out.axpy(&-F::one(), o);
        out
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> SparseVec<G> {
        let mut out = SparseVec::new();
        for (&i, x) in &self.entries {
            out.add_at(i, &f(x));
        }
        out
    }
}

/// Anything that acts linearly on a tensor space.
pub trait LinearOp<F: Field> {
    fn space(&self) -> TensorSpace;
    fn apply(&self, v: &SparseVec<F>) -> SparseVec<F>;

    fn materialize(&self) -> TensorOperator<F> {
        let sp = self.space();
        TensorOperator { space: sp, cols: (0..sp.dim()).map(|j| self.apply(&SparseVec::basis(j))).collect() }
    }
}

/// Explicit sparse operator on a tensor space, stored by columns.
#[derive(Clone, PartialEq, Debug)]
pub struct TensorOperator<F> {
    space: TensorSpace,
    cols: Vec<SparseVec<F>>,
}

impl<F: Field> TensorOperator<F> {
    pub fn identity(space: TensorSpace) -> Self {
        TensorOperator { space, cols: (0..space.dim()).map(SparseVec::basis).collect() }
    }

    pub fn zero(space: TensorSpace) -> Self {
        TensorOperator { space, cols: vec![SparseVec::new(); space.dim()] }
    }

    pub fn from_columns(space: TensorSpace, cols: Vec<SparseVec<F>>) -> Self {
        assert_eq!(cols.len(), space.dim());
        TensorOperator { space, cols }
    }

    pub fn column(&self, j: usize) -> &SparseVec<F> {
        &self.cols[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> F {
        self.cols[j].get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    /// self ∘ o
    pub fn compose(&self, o: &TensorOperator<F>) -> Self {
        assert_eq!(self.space, o.space);
        TensorOperator { space: self.space, cols: o.cols.iter().map(|c| self.apply(c)).collect() }
    }

    pub fn add(&self, o: &TensorOperator<F>) -> Self {
        self.lin(o, &F::one())
    }

    pub fn sub(&self, o: &TensorOperator<F>) -> Self {
        self.lin(o, &-F::one())
    }

    fn lin(&self, o: &TensorOperator<F>, c: &F) -> Self {
        assert_eq!(self.space, o.space);
        let cols = self
            .cols
            .iter()
            .zip(&o.cols)
            .map(|(a, b)| {
                let mut x = a.clone();
                x.axpy(c, b);
                x
            })
            .collect();
        TensorOperator { space: self.space, cols }
    }

    pub fn scale(&self, c: &F) -> Self {
        TensorOperator { space: self.space, cols: self.cols.iter().map(|x| x.scale(c)).collect() }
    }

    pub fn trace(&self) -> F {
        let mut t = F::zero();
        for (j, c) in self.cols.iter().enumerate() {
            t += &c.get(j);
        }
        t
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> TensorOperator<G> {
        TensorOperator { space: self.space, cols: self.cols.iter().map(|c| c.map(&f)).collect() }
    }

    pub fn to_dense(&self) -> Matrix<F> {
        let d = self.space.dim();
        let mut m = Matrix::zeros(d, d);
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c.iter() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    /// Nonzero entries as (row, col, value), row-major order.
    pub fn triples(&self) -> Vec<(usize, usize, F)> {
        let mut out: Vec<_> = self.cols.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |(i, x)| (i, j, x.clone()))).collect();
        out.sort_by_key(|t| (t.0, t.1));
        out
    }
}

impl<F: Field> LinearOp<F> for TensorOperator<F> {
    fn space(&self) -> TensorSpace {
        self.space
    }

    fn apply(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut out = SparseVec::new();
        for (j, x) in v.iter() {
            out.axpy(x, &self.cols[j]);
        }
        out
    }

    fn materialize(&self) -> TensorOperator<F> {
        self.clone()
    }
}

/// Permutation of tensor slots: the factor in input slot `k` moves to output
/// slot `target[k-1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotPermutation {
    space: TensorSpace,
    target: Vec<usize>,
}

impl SlotPermutation {
    pub fn new(space: TensorSpace, target: Vec<usize>) -> Self {
        assert_eq!(target.len(), space.slots);
        let mut seen = vec![false; space.slots];
        for &t in &target {
            assert!(t >= 1 && t <= space.slots && !seen[t - 1], "not a permutation");
            seen[t - 1] = true;
        }
        SlotPermutation { space, target }
    }

    pub fn map_index(&self, idx: usize) -> usize {
        let d = self.space.digits(idx);
        let mut out = vec![0; d.len()];
        for (k, &t) in self.target.iter().enumerate() {
            out[t - 1] = d[k];
        }
        self.space.index(&out)
    }

    pub fn target(&self) -> &[usize] {
        &self.target
    }
}

impl<F: Field> LinearOp<F> for SlotPermutation {
    fn space(&self) -> TensorSpace {
        self.space
    }

    fn apply(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut out = SparseVec::new();
        for (i, x) in v.iter() {
            out.add_at(self.map_index(i), x);
        }
        out
    }
}
