//! Serializable reports for the intertwiner, module and orbit pipelines.
//! Scalars are "p/q" strings; polynomials are coefficient lists, constant first.

use serde::Serialize;

use crate::fusion::{normalize_i, normalize_j, FusionInput, IntertwinerKind, IntertwinerResult, MuLine};
use crate::qlinalg::{Poly, Rational};
use crate::suites::sparse_triples;
use crate::weights::{Algebra, WeightPair};
use crate::yangian::{burnside_irreducible, quotient_module, split_so_even, verify_intertwiner_i, verify_intertwiner_j, FundamentalFactor, Generators, ModuleSpec};
use crate::{Error, Result};

#[derive(Debug, Clone, Serialize)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, Rational)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IntertwinerReport {
    pub report: &'static str,
    pub kind: IntertwinerKind,
    pub algebra: Algebra,
    pub n: usize,
    pub lambda: Vec<Rational>,
    pub mu: Vec<Rational>,
    pub nu: Vec<usize>,
    pub target_nu: Vec<usize>,
    /// "point" or "line" (t → 0 limit).
    pub evaluation: &'static str,
    pub dim_source: usize,
    pub dim_target: usize,
    pub rank: usize,
    pub kernel: Vec<Vec<Rational>>,
    pub image: Vec<Vec<Rational>>,
    pub scalar: String,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<SparseMatrix>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SplitReport {
    pub dims: [usize; 2],
    /// s when the summands need Q(√s).
    pub radicand: Option<Rational>,
    pub irreducible: [bool; 2],
    pub intertwiner_dim: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ModuleReport {
    pub report: &'static str,
    pub algebra: Algebra,
    pub n: usize,
    pub spec: Vec<FundamentalFactor>,
    pub generators: Generators,
    pub order: usize,
    pub good: bool,
    pub dim_source: usize,
    pub dim_kernel: usize,
    pub dim_image: usize,
    pub irreducible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split: Option<SplitReport>,
    /// P_1..P_{n−1} for gl, Q_1..Q_{⌊n/2⌋} otherwise.
    pub drinfeld: Vec<Vec<Rational>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitReport {
    pub report: &'static str,
    pub input: WeightPair,
    pub perm: Vec<usize>,
    pub flips: Vec<bool>,
    pub good: WeightPair,
    pub drinfeld: Vec<Vec<Rational>>,
}

pub fn poly_coeffs(p: &Poly) -> Vec<Rational> {
    p.coeffs().to_vec()
}

pub fn drinfeld(pair: &WeightPair) -> Result<Vec<Vec<Rational>>> {
    let polys = if pair.algebra.is_twisted() { pair.drinfeld_q()? } else { pair.drinfeld_p()? };
    Ok(polys.iter().map(poly_coeffs).collect())
}

/// Evaluate at the pair when it is generic (unless `line`), otherwise as the
/// limit along the default line, which needs λ+ρ dominant.
pub fn fusion_input(pair: &WeightPair, line: bool) -> Result<FusionInput> {
    if !line && pair.is_generic() {
        return Ok(FusionInput::Point(pair.clone()));
    }
    if !pair.is_dominant() {
        return Err(Error::Precondition("λ+ρ is not dominant and μ is not generic; the normalized operator is not defined here".into()));
    }
    Ok(FusionInput::Line(MuLine::new(pair.clone())?))
}

pub fn intertwiner(kind: IntertwinerKind, pair: &WeightPair, line: bool, emit_matrix: bool) -> Result<(IntertwinerReport, IntertwinerResult)> {
    let input = fusion_input(pair, line)?;
    let res = match kind {
        IntertwinerKind::I => normalize_i(&input)?,
        IntertwinerKind::J => normalize_j(&input)?,
    };
    let verified = match kind {
        IntertwinerKind::I => verify_intertwiner_i(&res.matrix, pair)?,
        IntertwinerKind::J => verify_intertwiner_j(&res.matrix, pair)?,
    };
    let report = IntertwinerReport {
        report: "intertwiner",
        kind,
        algebra: pair.algebra,
        n: pair.n,
        lambda: pair.lambda.clone(),
        mu: pair.mu.clone(),
        nu: res.nu.clone(),
        target_nu: res.target_nu.clone(),
        evaluation: if matches!(input, FusionInput::Line(_)) { "line" } else { "point" },
        dim_source: res.matrix.cols(),
        dim_target: res.matrix.rows(),
        rank: res.rank(),
        kernel: res.kernel(),
        image: res.image(),
        scalar: res.scalar.clone(),
        verified,
        matrix: emit_matrix.then(|| SparseMatrix { rows: res.matrix.rows(), cols: res.matrix.cols(), entries: sparse_triples(&res.matrix) }),
    };
    Ok((report, res))
}

/// Quotient by the kernel of I (gl) or J (sp, so), its irreducibility, the
/// so-even split when the commutant is two-dimensional, and Drinfeld data.
pub fn module(pair: &WeightPair, line: bool, order: usize) -> Result<ModuleReport> {
    let (kind, generators, target) = if pair.algebra.is_twisted() {
        (IntertwinerKind::J, Generators::S, ModuleSpec::flipped_from_pair(pair)?)
    } else {
        (IntertwinerKind::I, Generators::T, ModuleSpec::reversed_from_pair(pair)?)
    };
    let source = ModuleSpec::from_pair(pair)?;
    let good = pair.is_good()?;
    let (_, res) = intertwiner(kind, pair, line, false)?;
    let quo = quotient_module(&res, &target, generators, order)?;
    let irreducible = burnside_irreducible(&quo.action);
    let split = if !irreducible && pair.algebra == Algebra::So && pair.n % 2 == 0 {
        let s = split_so_even(&quo.action)?;
        let [a, b] = &s.summands;
        Some(SplitReport {
            dims: [a.action.dim, b.action.dim],
            radicand: s.radicand.clone(),
            irreducible: [burnside_irreducible(&a.action), burnside_irreducible(&b.action)],
            intertwiner_dim: crate::yangian::intertwiner_space(&a.action, &b.action)?.len(),
        })
    } else {
        None
    };
    Ok(ModuleReport {
        report: "module",
        algebra: pair.algebra,
        n: pair.n,
        spec: source.factors,
        generators,
        order,
        good,
        dim_source: quo.dim_source,
        dim_kernel: quo.dim_kernel,
        dim_image: quo.dim(),
        irreducible,
        split,
        drinfeld: drinfeld(pair)?,
    })
}

impl ModuleReport {
    /// The quotient is irreducible, or splits into two inequivalent irreducibles.
    pub fn consistent(&self) -> bool {
        self.irreducible || self.split.as_ref().map_or(false, |s| s.irreducible == [true, true] && s.intertwiner_dim == 0)
    }
}

pub fn orbit(pair: &WeightPair) -> Result<OrbitReport> {
    let (w, good) = pair.find_good_in_orbit()?;
    Ok(OrbitReport { report: "orbit", input: pair.clone(), perm: w.perm().to_vec(), flips: w.flips().to_vec(), drinfeld: drinfeld(&good)?, good })
}
