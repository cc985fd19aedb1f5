use super::series::Generators;
use super::spec::ModuleSpec;
use crate::qlinalg::{ExactMatrix, Rational};
use crate::rmat::{OperatorProduct, RFactor, RKind};
use crate::tensor::{LinearOp, SegmentShape, SparseVec, TensorSpace, WedgeBasis};
use crate::weights::WeightPair;
use crate::{Error, Result};

/// `count` distinct rationals avoiding every point in `avoid`.
pub fn sample_points(count: usize, avoid: &[Rational]) -> Vec<Rational> {
    let mut out = Vec::with_capacity(count);
    let mut k = 0i64;
    while out.len() < count {
        let x = Rational::new(3 * k + 1, 7) + Rational::new(1, 11);
        let x = if k % 2 == 0 { x } else { -x };
        if !avoid.contains(&x) {
            out.push(x);
        }
        k += 1;
    }
    out
}

struct Frame {
    n: usize,
    big: TensorSpace,
    block: usize,
}

impl Frame {
    fn new(n: usize, slots: usize) -> Self {
        Frame { n, big: TensorSpace::new(n, slots + 1), block: TensorSpace::new(n, slots).dim() }
    }

    fn with_aux(&self, j: usize, v: &SparseVec<Rational>) -> SparseVec<Rational> {
        let mut out = SparseVec::new();
        for (idx, c) in v.iter() {
            out.add_at(j * self.block + idx, c);
        }
        out
    }

    fn split_aux(&self, v: &SparseVec<Rational>) -> Vec<SparseVec<Rational>> {
        let mut parts = vec![SparseVec::new(); self.n];
        for (idx, c) in v.iter() {
            parts[idx / self.block].add_at(idx % self.block, c);
        }
        parts
    }

    fn product(&self, factors: Vec<(RKind, usize, Rational)>) -> Result<OperatorProduct<Rational>> {
        let fs = factors.into_iter().map(|(k, p, a)| RFactor::new(k, 1, p + 1, a)).collect::<Result<Vec<_>>>()?;
        OperatorProduct::new(self.big, fs)
    }
}

/// Wedge coordinates of a vector that must lie in the subspace.
fn coords(w: &WedgeBasis, v: &SparseVec<Rational>) -> Result<Vec<Rational>> {
    let c = w.project_vec(v);
    if w.embed_coords(&c) != *v {
        return Err(Error::Contradiction("an R-matrix product left the wedge subspace".into()));
    }
    Ok(c)
}

/// X′·(1⊗I) = (1⊗I)·X with X = R̄_01(x_1−x)…R̄_0N(x_N−x) and X′ built on
/// x_{1′}…x_{N′}, checked on the wedge subspace at 2N+2 points.
pub fn verify_intertwiner_i(matrix: &ExactMatrix, pair: &WeightPair) -> Result<bool> {
    let nu = pair.nu()?;
    let n = pair.n;
    let shape = SegmentShape::new(nu)?;
    let big_n = shape.total();
    let xs = pair.spectral_points()?;
    let src = WedgeBasis::for_shape(n, &shape)?;
    let dst = WedgeBasis::for_shape(n, &shape.reversed())?;
    if matrix.rows() != dst.dim() || matrix.cols() != src.dim() {
        return Err(Error::InvalidShape("intertwiner matrix does not fit the wedge spaces".into()));
    }
    let primed = shape.primed();
    let frame = Frame::new(n, big_n);
    for x in sample_points(2 * big_n + 2, &xs) {
        let xop = frame.product((1..=big_n).map(|p| (RKind::Bar, p, &xs[p - 1] - &x)).collect())?;
        let xpr = frame.product((1..=big_n).map(|p| (RKind::Bar, p, &xs[primed[p - 1] - 1] - &x)).collect())?;
        for w in 0..src.dim() {
            let image = dst.embed_coords(&matrix.col(w));
            for j in 0..n {
                let lhs = xpr.apply(&frame.with_aux(j, &image));
                let y = xop.apply(&frame.with_aux(j, &src.embed_vec(w)));
                let mut rhs = SparseVec::new();
                for (i, part) in frame.split_aux(&y).iter().enumerate() {
                    let c = matrix.mul_vec(&coords(&src, part)?);
                    rhs.axpy(&Rational::one(), &frame.with_aux(i, &dst.embed_coords(&c)));
                }
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Y″·(1⊗Q_ν J) = (1⊗Q_ν J)·Y with Y the S-action product on x_1…x_N and
/// Y″ the one on x_{1″}…x_{N″}, checked at 4N+2 points.
pub fn verify_intertwiner_j(matrix: &ExactMatrix, pair: &WeightPair) -> Result<bool> {
    let form = pair.form().ok_or_else(|| Error::Precondition("J needs an sp or so pair".into()))?;
    let nu = pair.nu()?;
    let n = pair.n;
    let shape = SegmentShape::new(nu)?;
    let big_n = shape.total();
    let xs = pair.spectral_points()?;
    let wedge = WedgeBasis::for_shape(n, &shape)?;
    if matrix.rows() != wedge.dim() || matrix.cols() != wedge.dim() {
        return Err(Error::InvalidShape("intertwiner matrix does not fit the wedge space".into()));
    }
    let dp = shape.double_primed();
    let qn = shape.q_nu(n);
    let frame = Frame::new(n, big_n);
    let mut avoid = xs.clone();
    avoid.extend(xs.iter().map(|x| -x.clone()));
    let hat = RKind::Hat(form);
    for x in sample_points(4 * big_n + 2, &avoid) {
        let mut y = Vec::new();
        y.extend((1..=big_n).rev().map(|p| (hat, p, &xs[p - 1] + &x)));
        y.extend((1..=big_n).map(|p| (RKind::Bar, p, &xs[p - 1] - &x)));
        let mut ydd = Vec::new();
        ydd.extend((1..=big_n).rev().map(|p| (RKind::Bar, p, &xs[dp[p - 1] - 1] - &x)));
        ydd.extend((1..=big_n).map(|p| (hat, p, &xs[dp[p - 1] - 1] + &x)));
        let (y, ydd) = (frame.product(y)?, frame.product(ydd)?);
        let qj = |c: &[Rational]| qn.apply(&wedge.embed_coords(c));
        for w in 0..wedge.dim() {
            let image = qj(&matrix.col(w));
            for j in 0..n {
                let lhs = ydd.apply(&frame.with_aux(j, &image));
                let out = y.apply(&frame.with_aux(j, &wedge.embed_vec(w)));
                let mut rhs = SparseVec::new();
                for (i, part) in frame.split_aux(&out).iter().enumerate() {
                    let c = matrix.mul_vec(&coords(&wedge, part)?);
                    rhs.axpy(&Rational::one(), &frame.with_aux(i, &qj(&c)));
                }
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// target(x)·M = M·source(x) for every T_ij or S_ij at the given points.
pub fn intertwines_at(matrix: &ExactMatrix, source: &ModuleSpec, target: &ModuleSpec, kind: Generators, samples: &[Rational]) -> Result<bool> {
    for x in samples {
        let (a, b) = match kind {
            Generators::T => (source.t_at(x)?, target.t_at(x)?),
            Generators::S => (source.s_at(x)?, target.s_at(x)?),
        };
        if a.iter().zip(&b).any(|(ma, mb)| mb.mul(matrix) != matrix.mul(ma)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every pole of a module's T(x) and T(−x).
pub fn spec_poles(spec: &ModuleSpec) -> Vec<Rational> {
    let mut out = Vec::new();
    for f in &spec.factors {
        for s in [f.t.clone(), -f.t.clone(), &f.t - &Rational::one(), &Rational::one() - &f.t] {
            out.push(s);
        }
    }
    out
}

