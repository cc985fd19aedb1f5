use super::{beigen, build_b_perturbed, build_c, ceigen, deigen, FusionPoint, MuLine};
use crate::qlinalg::{ExactMatrix, Field, Limit, Matrix, RatFunc, Rational};
use crate::tensor::{LinearOp, WedgeBasis};
use crate::weights::{Algebra, WeightPair};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum IntertwinerKind {
    I,
    J,
}

/// Where to evaluate: directly at a pair, or as the t → 0 limit along a line.
#[derive(Debug, Clone, PartialEq)]
pub enum FusionInput {
    Point(WeightPair),
    Line(MuLine),
}

impl FusionInput {
    pub fn pair(&self) -> &WeightPair {
        match self {
            FusionInput::Point(p) => p,
            FusionInput::Line(l) => &l.base,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IntertwinerResult {
    pub kind: IntertwinerKind,
    pub algebra: Algebra,
    pub n: usize,
    pub nu: Vec<usize>,
    pub target_nu: Vec<usize>,
    pub matrix: ExactMatrix,
    /// The normalizing eigenvalue, a number or a function of t.
    pub scalar: String,
}

impl IntertwinerResult {
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        self.matrix.kernel_basis()
    }

    pub fn image(&self) -> Vec<Vec<Rational>> {
        self.matrix.image_basis()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// P_ν B(μ) restricted to Λ^ν → Λ^{ν reversed}, divided by the eigenvalue on φ.
pub fn restrict_i<F: Field>(pt: &FusionPoint<F>) -> Result<(Matrix<F>, F)> {
    restrict_i_perturbed(pt, None)
}

/// As [`restrict_i`], with `delta` added to the argument of B's factor `k`.
pub fn restrict_i_perturbed<F: Field>(pt: &FusionPoint<F>, perturb: Option<(usize, F)>) -> Result<(Matrix<F>, F)> {
    let src = WedgeBasis::for_shape(pt.n, &pt.shape)?;
    let dst = WedgeBasis::for_shape(pt.n, &pt.shape.reversed())?;
    let b = build_b_perturbed(pt, perturb)?;
    let pn = pt.shape.p_nu(pt.n);
    let cols = (0..src.dim()).map(|w| src.restrict_column(|v| pn.apply(&b.apply(v)), &dst, w)).collect::<Result<Vec<_>>>()?;
    let e = beigen(pt)?;
    let inv = e.inv().ok_or_else(|| Error::Pole("B eigenvalue vanishes".into()))?;
    Ok((Matrix::from_cols(dst.dim(), &cols).scale(&inv), e))
}

/// B(μ) C(μ) restricted to Λ^ν, divided by its eigenvalue on φ.
pub fn restrict_j<F: Field>(pt: &FusionPoint<F>) -> Result<(Matrix<F>, F)> {
    restrict_j_perturbed(pt, None)
}

/// As [`restrict_j`], with B's factor `k` perturbed by `delta`.
pub fn restrict_j_perturbed<F: Field>(pt: &FusionPoint<F>, perturb: Option<(usize, F)>) -> Result<(Matrix<F>, F)> {
    let wedge = WedgeBasis::for_shape(pt.n, &pt.shape)?;
    let bc = build_b_perturbed(pt, perturb)?.then_right(&build_c(pt)?);
    let m = wedge.restrict(&bc, &wedge)?;
    let e = beigen(pt)? * &ceigen(pt)? * &deigen(pt)?;
    let inv = e.inv().ok_or_else(|| Error::Pole("B·C eigenvalue vanishes".into()))?;
    Ok((m.scale(&inv), e))
}

fn limit_matrix(m: &Matrix<RatFunc>) -> Result<ExactMatrix> {
    let zero = Rational::zero();
    m.try_map(|f| match f.limit_at(&zero) {
        Limit::Value(v) => Ok(v),
        Limit::Pole { order } => Err(Error::Regularity { order, at: zero.clone() }),
    })
}

fn evaluate(kind: IntertwinerKind, input: &FusionInput) -> Result<IntertwinerResult> {
    let pair = input.pair();
    let nu = pair.nu()?;
    let (matrix, scalar) = match input {
        FusionInput::Point(p) => {
            let pt = FusionPoint::from_pair(p)?;
            let (m, e) = match kind {
                IntertwinerKind::I => restrict_i(&pt)?,
                IntertwinerKind::J => restrict_j(&pt)?,
            };
            (m, e.to_string())
        }
        FusionInput::Line(l) => {
            let pt = l.point()?;
            let (m, e) = match kind {
                IntertwinerKind::I => restrict_i(&pt)?,
                IntertwinerKind::J => restrict_j(&pt)?,
            };
            (limit_matrix(&m)?, e.to_string())
        }
    };
    let target_nu = match kind {
        IntertwinerKind::I => nu.iter().rev().copied().collect(),
        IntertwinerKind::J => nu.clone(),
    };
    Ok(IntertwinerResult { kind, algebra: pair.algebra, n: pair.n, nu, target_nu, matrix, scalar })
}

/// The normalized I(μ): Λ^ν → Λ^{ν reversed}.
pub fn normalize_i(input: &FusionInput) -> Result<IntertwinerResult> {
    evaluate(IntertwinerKind::I, input)
}

/// The normalized J(μ) on Λ^ν (sp and so only).
pub fn normalize_j(input: &FusionInput) -> Result<IntertwinerResult> {
    if !input.pair().algebra.is_twisted() {
        return Err(Error::Precondition("J(μ) needs an sp or so weight".into()));
    }
    evaluate(IntertwinerKind::J, input)
}
