use super::series::{Generators, SeriesAction};
use super::spec::{FundamentalFactor, ModuleSpec};
use super::verify::{intertwines_at, sample_points, spec_poles};
use super::wedge::complement_map;
use crate::fusion::IntertwinerResult;
use crate::qlinalg::{ExactMatrix, Field, Matrix, QuadExt, Rational, SpanBasis};
use crate::tensor::FormChoice;
use crate::{Error, Result};

/// Image of an intertwiner inside its target module, with the restricted action.
#[derive(Debug, Clone)]
pub struct QuotientModule {
    pub action: SeriesAction<Rational>,
    /// Columns span the image inside the target.
    pub basis: ExactMatrix,
    pub dim_source: usize,
    pub dim_kernel: usize,
}

impl QuotientModule {
    pub fn dim(&self) -> usize {
        self.action.dim
    }
}

/// The target action restricted to the image of `result`, which is
/// isomorphic to the source modulo the kernel.
pub fn quotient_module(result: &IntertwinerResult, target: &ModuleSpec, kind: Generators, order: usize) -> Result<QuotientModule> {
    if target.dim() != result.matrix.rows() {
        return Err(Error::InvalidShape(format!("target has dimension {} but the intertwiner has {} rows", target.dim(), result.matrix.rows())));
    }
    let image = result.image();
    let basis = Matrix::from_cols(result.matrix.rows(), &image);
    let action = target.series(kind, order)?.restrict(&basis)?;
    Ok(QuotientModule { action, basis, dim_source: result.matrix.cols(), dim_kernel: result.matrix.cols() - image.len() })
}

fn flat<F: Field>(m: &Matrix<F>) -> Vec<F> {
    m.data().to_vec()
}

/// Linearly independent members of `gens`.
fn independent<'a, F: Field>(gens: Vec<&'a Matrix<F>>, len: usize) -> Vec<&'a Matrix<F>> {
    let mut span = SpanBasis::new(len);
    gens.into_iter().filter(|g| span.insert(&flat(*g))).collect()
}

/// Dimension of the algebra generated by 1 and the coefficients with r ≤ max_r.
pub fn generated_algebra_dim<F: Field>(action: &SeriesAction<F>, max_r: usize) -> usize {
    let d = action.dim;
    let full = d * d;
    let gens = independent(action.generators(max_r), full);
    let mut span = SpanBasis::new(full);
    let id = Matrix::<F>::identity(d);
    span.insert(&flat(&id));
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for g in &gens {
            let y = x.mul(g);
            if span.insert(&flat(&y)) {
                if span.dim() == full {
                    return full;
                }
                queue.push(y);
            }
        }
    }
    span.dim()
}

/// Default generator depth: r ≤ 2 for Y(gl_n), r ≤ 3 for the twisted Yangians.
pub fn default_depth(kind: Generators) -> usize {
    match kind {
        Generators::T => 2,
        Generators::S => 3,
    }
}

/// Density test: irreducible iff the acting algebra is all of End(V).
pub fn burnside_irreducible<F: Field>(action: &SeriesAction<F>) -> bool {
    action.dim >= 1 && generated_algebra_dim(action, default_depth(action.kind)) == action.dim * action.dim
}

/// Basis of {X : X·A = B·X for every stored coefficient}, X of size dim B × dim A.
pub fn intertwiner_space<F: Field>(a: &SeriesAction<F>, b: &SeriesAction<F>) -> Result<Vec<Matrix<F>>> {
    if a.n != b.n || a.kind != b.kind {
        return Err(Error::Precondition("intertwiners need actions of the same algebra".into()));
    }
    let order = a.order.min(b.order);
    let (da, db) = (a.dim, b.dim);
    let mut basis: Vec<Matrix<F>> = (0..da * db)
        .map(|k| {
            let mut m = Matrix::zeros(db, da);
            m.set(k / da, k % da, F::one());
            m
        })
        .collect();
    for r in 1..=order {
        for ij in 0..a.n * a.n {
            let (ma, mb) = (&a.coeffs()[ij][r], &b.coeffs()[ij][r]);
            let cols: Vec<Vec<F>> = basis.iter().map(|x| flat(&x.mul(ma).sub(&mb.mul(x)))).collect();
            if cols.iter().all(|c| c.iter().all(|v| v.is_zero())) {
                continue;
            }
            let sys = Matrix::from_cols(da * db, &cols);
            let ker = sys.kernel_basis();
            basis = ker
                .iter()
                .map(|c| {
                    let mut acc = Matrix::zeros(db, da);
                    for (coef, x) in c.iter().zip(&basis) {
                        if !coef.is_zero() {
                            acc = acc.add(&x.scale(coef));
                        }
                    }
                    acc
                })
                .collect();
            if basis.is_empty() {
                return Ok(basis);
            }
        }
    }
    Ok(basis)
}

pub fn commutant<F: Field>(a: &SeriesAction<F>) -> Result<Vec<Matrix<F>>> {
    intertwiner_space(a, a)
}

/// Equivalence at the stored truncation: a one-dimensional intertwiner
/// space spanned by an invertible matrix.
pub fn equivalent<F: Field>(a: &SeriesAction<F>, b: &SeriesAction<F>) -> Result<bool> {
    let sp = intertwiner_space(a, b)?;
    Ok(sp.len() == 1 && a.dim == b.dim && sp[0].inverse().is_some())
}

/// The scalar series g with Σ_i tr A_ii(x) = g(x)·Σ_i tr B_ii(x), order by order.
/// If A and B are similar, A ≅ g·B is the only candidate.
pub fn trace_ratio<F: Field>(a: &SeriesAction<F>, b: &SeriesAction<F>) -> Option<Vec<F>> {
    if a.n != b.n || a.dim != b.dim || a.kind != b.kind {
        return None;
    }
    let order = a.order.min(b.order);
    let tau = |x: &SeriesAction<F>, r: usize| (0..x.n).fold(F::zero(), |acc, i| acc + x.coeff(i, i, r).trace());
    let t0 = tau(b, 0).inv()?;
    let mut g = vec![F::one()];
    for r in 1..=order {
        let mut acc = tau(a, r);
        for s in 1..r {
            acc = acc - g[s].clone() * tau(b, r - s);
        }
        acc = acc - tau(b, r);
        g.push(acc * t0.clone());
    }
    Some(g)
}

/// Equivalence after multiplying B by a scalar series, with the series found.
pub fn similar<F: Field>(a: &SeriesAction<F>, b: &SeriesAction<F>) -> Result<Option<Vec<F>>> {
    let Some(g) = trace_ratio(a, b) else { return Ok(None) };
    Ok(equivalent(a, &b.scalar_twist(&g))?.then_some(g))
}

/// One summand of a split module over Q(√s).
#[derive(Clone, Debug)]
pub struct Summand {
    pub delta: i8,
    pub basis: Matrix<QuadExt>,
    pub action: SeriesAction<QuadExt>,
}

/// The two summands of a module whose commutant is two-dimensional,
/// δ = +1 first.
#[derive(Debug, Clone)]
pub struct SplitModule {
    pub radicand: Option<Rational>,
    pub summands: [Summand; 2],
}

fn rref_key(basis: &Matrix<QuadExt>) -> (Vec<usize>, String) {
    let (r, piv) = basis.transpose().rref();
    (piv, format!("{r:?}"))
}

/// Decompose via the eigenspaces of a trace-free commutant element Y0 with
/// Y0² = s·1; the projectors (1 ± Y0/√s)/2 live over Q or Q(√s).
pub fn split_so_even(action: &SeriesAction<Rational>) -> Result<SplitModule> {
    let comm = commutant(action)?;
    if comm.len() != 2 {
        return Err(Error::Contradiction(format!("commutant has dimension {}, expected 2", comm.len())));
    }
    let d = action.dim;
    let id = ExactMatrix::identity(d);
    let y = comm.iter().find(|m| {
        let c = m.get(0, 0).clone();
        **m != id.scale(&c)
    });
    let y = y.ok_or_else(|| Error::Contradiction("commutant consists of scalars".into()))?;
    let y0 = y.sub(&id.scale(&(y.trace() * Rational::new(1, d as i64))));
    let sq = y0.mul(&y0);
    let s = sq.get(0, 0).clone();
    if sq != id.scale(&s) || s.is_zero() {
        return Err(Error::Contradiction("trace-free commutant element does not square to a nonzero scalar".into()));
    }
    let (root, radicand) = match s.sqrt_exact() {
        Some(r) => (QuadExt::rational(r), None),
        None => (QuadExt::sqrt(s.clone()), Some(s.clone())),
    };
    let y0q = y0.map(|x| QuadExt::rational(x.clone()));
    let idq = Matrix::<QuadExt>::identity(d);
    let half = QuadExt::rational(Rational::new(1, 2));
    let scaled = y0q.scale(&root.inv().expect("nonzero root"));
    let lifted = action.map(|x| QuadExt::rational(x.clone()));
    let mut parts = Vec::new();
    for sign in [1i64, -1] {
        let proj = idq.add(&scaled.scale(&QuadExt::rational(Rational::from_int(sign)))).scale(&half);
        let basis = Matrix::from_cols(d, &proj.image_basis());
        let sub = lifted.restrict(&basis)?;
        parts.push((basis, sub));
    }
    let (b, a) = (parts.pop().unwrap(), parts.pop().unwrap());
    let (first, second) = if rref_key(&a.0) <= rref_key(&b.0) { (a, b) } else { (b, a) };
    Ok(SplitModule {
        radicand,
        summands: [Summand { delta: 1, basis: first.0, action: first.1 }, Summand { delta: -1, basis: second.0, action: second.1 }],
    })
}

/// The complement map Λ^{n−k} → Λ^k intertwines Φ̌^{n−k}_{1−t} with Φ^{−k}_t
/// (T-actions), checked at `count` points.
pub fn check_complement_map(form: FormChoice, k: usize, t: &Rational, count: usize) -> Result<bool> {
    let n = form.n;
    let source = ModuleSpec::new(n, Some(form.kind), vec![FundamentalFactor::plus(n - k, &Rational::one() - t).twist()])?;
    let target = ModuleSpec::new(n, Some(form.kind), vec![FundamentalFactor::minus(k, t.clone())])?;
    let mut avoid = spec_poles(&source);
    avoid.extend(spec_poles(&target));
    intertwines_at(&complement_map(form, k), &source, &target, Generators::T, &sample_points(count, &avoid))
}
