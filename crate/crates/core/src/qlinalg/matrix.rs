use std::fmt;

use super::{Field, Rational};

/// Dense row-major matrix over a field.
#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

pub type ExactMatrix = Matrix<Rational>;

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &F) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_cols(rows: usize, cols: &[Vec<F>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.data[i * m.cols + j] = v.clone();
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut F {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<Matrix<G>, E> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>, E>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, o: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        *out.entry_mut(i, j) += &(a.clone() * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a.clone() * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, o: &Matrix<F>) -> Matrix<F> {
        assert!(self.rows == o.rows && self.cols == o.cols);
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b).collect() }
    }

    pub fn sub(&self, o: &Matrix<F>) -> Matrix<F> {
        assert!(self.rows == o.rows && self.cols == o.cols);
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() - b).collect() }
    }

    pub fn scale(&self, c: &F) -> Matrix<F> {
        self.map(|a| a.clone() * c)
    }

    pub fn trace(&self) -> F {
        let mut t = F::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    /// Kronecker product `self ⊗ o` (first factor most significant).
    pub fn kron(&self, o: &Matrix<F>) -> Matrix<F> {
        let mut out = Self::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = o.get(k, l);
                        if !b.is_zero() {
                            out.set(i * o.rows + k, j * o.cols + l, a.clone() * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Columns `cols` of `self`, in the given order.
    pub fn select_cols(&self, cols: &[usize]) -> Matrix<F> {
        Self::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix<F> {
        Self::from_fn(rows.len(), self.cols, |i, j| self.get(rows[i], j).clone())
    }

    /// Row-reduced echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let piv = F::row_reduce(&mut m);
        (m, piv)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let (r, piv) = self.rref();
        let mut is_piv = vec![false; self.cols];
        for &p in &piv {
            is_piv[p] = true;
        }
        let mut out = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_piv[c]) {
            let mut v = vec![F::zero(); self.cols];
            v[f] = F::one();
            for (row, &p) in piv.iter().enumerate() {
                v[p] = -r.get(row, f).clone();
            }
            out.push(v);
        }
        out
    }

    /// Basis of the column space: the pivot columns of `self`.
    pub fn image_basis(&self) -> Vec<Vec<F>> {
        let piv = self.rref().1;
        piv.iter().map(|&c| self.col(c)).collect()
    }

    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| if j < self.cols { self.get(i, j).clone() } else { b[i].clone() });
        let (r, piv) = aug.rref();
        if piv.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (row, &p) in piv.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix<F>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                F::one()
            } else {
                F::zero()
            }
        });
        let (r, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }
}

/// Plain Gauss–Jordan elimination to reduced row echelon form.
pub(crate) fn gauss_jordan<F: Field>(m: &mut Matrix<F>) -> Vec<usize> {
    let (rows, cols) = (m.rows, m.cols);
    let mut piv = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
        swap_rows(m, r, p);
        let inv = m.get(r, c).inv().unwrap();
        for j in c..cols {
            let v = m.get(r, j).clone() * &inv;
            m.set(r, j, v);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = m.get(i, c).clone();
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                let sub = f.clone() * m.get(r, j);
                *m.entry_mut(i, j) -= &sub;
            }
        }
        piv.push(c);
        r += 1;
    }
    piv
}

fn swap_rows<F>(m: &mut Matrix<F>, a: usize, b: usize) {
    if a != b {
        for j in 0..m.cols {
            m.data.swap(a * m.cols + j, b * m.cols + j);
        }
    }
}

/// Fraction-free (Bareiss) forward elimination on the integer-scaled rows,
/// followed by exact back substitution to reduced row echelon form.
pub(crate) fn bareiss_rref(m: &mut Matrix<Rational>) -> Vec<usize> {
    let (rows, cols) = (m.rows, m.cols);
    // scale each row to integer entries; the row space is unchanged
    for i in 0..rows {
        let mut l = num_bigint::BigInt::from(1);
        for j in 0..cols {
            let d = m.get(i, j).denom();
            l = num_integer::Integer::lcm(&l, &d);
        }
        if l != num_bigint::BigInt::from(1) {
            let s = Rational::from_bigints(l, 1.into());
            for j in 0..cols {
                let v = m.get(i, j) * &s;
                m.set(i, j, v);
            }
        }
    }
    let mut piv = Vec::new();
    let mut prev = Rational::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
        swap_rows(m, r, p);
        let pv = m.get(r, c).clone();
        for i in r + 1..rows {
            let f = m.get(i, c).clone();
            for j in c..cols {
                // exact integer division by the previous pivot
                let v = (&pv * m.get(i, j) - &f * m.get(r, j)) / &prev;
                m.set(i, j, v);
            }
        }
        prev = pv;
        piv.push(c);
        r += 1;
    }
    // back substitution
    for (row, &c) in piv.iter().enumerate().rev() {
        let inv = m.get(row, c).recip().unwrap();
        for j in c..cols {
            let v = m.get(row, j) * &inv;
            m.set(row, j, v);
        }
        for i in 0..row {
            let f = m.get(i, c).clone();
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                let sub = &f * m.get(row, j);
                *m.entry_mut(i, j) -= &sub;
            }
        }
    }
    piv
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Incrementally maintained basis of a subspace, kept fully reduced so that
/// membership tests are a single pass over the stored rows.
#[derive(Clone, Debug)]
pub struct SpanBasis<F> {
    len: usize,
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> SpanBasis<F> {
    pub fn new(len: usize) -> Self {
        SpanBasis { len, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [F]) {
        for (p, row) in &self.rows {
            let f = v[*p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &(f.clone() * r);
                }
            }
        }
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.len);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else { return false };
        let inv = w[p].inv().unwrap();
        for x in w.iter_mut() {
            *x *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            let f = row[p].clone();
            if !f.is_zero() {
                for (x, r) in row.iter_mut().zip(&w) {
                    if !r.is_zero() {
                        *x -= &(f.clone() * r);
                    }
                }
            }
        }
        self.rows.push((p, w));
        true
    }

    pub fn vectors(&self) -> impl Iterator<Item = &Vec<F>> {
        self.rows.iter().map(|(_, r)| r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    #[test]
    fn rank_kernel_image_examples() {
        let a = m(&[&[1, 1], &[1, 1]]);
        assert_eq!(a.rank(), 1);
        assert_eq!(a.kernel_basis(), vec![vec![q(-1), q(1)]]);
        assert_eq!(a.image_basis(), vec![vec![q(1), q(1)]]);
        assert_eq!(ExactMatrix::identity(5).rank(), 5);
        assert!(ExactMatrix::identity(3).kernel_basis().is_empty());
        assert_eq!(ExactMatrix::zeros(3, 4).rank(), 0);
        assert_eq!(a.solve(&[q(1), q(0)]), None);
        let x = a.solve(&[q(2), q(2)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![q(2), q(2)]);
    }

    #[test]
    fn rank_deficient_product() {
        let l = m(&[&[1, 0, 2, 1], &[0, 1, 1, 3], &[2, 1, 0, 0], &[1, 1, 1, 1], &[0, 3, -1, 2], &[5, 0, 1, -1]]);
        let r = m(&[&[1, 2, 0, 1, 0, 3], &[0, 1, 1, 0, 2, 1], &[1, 0, 0, 2, 1, 1], &[0, 0, 3, 1, 1, 0]]);
        let p = l.mul(&r);
        assert_eq!(p.rank(), 4);
        let k = p.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(p.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        let inv = m(&[&[2, 1], &[7, 4]]).inverse().unwrap();
        assert_eq!(inv, m(&[&[4, -1], &[-7, 2]]));
    }

    #[test]
    fn span_basis() {
        let mut s = SpanBasis::new(3);
        assert!(s.insert(&[q(1), q(2), q(3)]));
        assert!(s.insert(&[q(0), q(1), q(1)]));
        assert!(!s.insert(&[q(1), q(3), q(4)]));
        assert!(s.contains(&[q(2), q(5), q(7)]));
        assert_eq!(s.dim(), 2);
    }
}
