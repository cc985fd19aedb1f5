use super::*;
use crate::qlinalg::{ExactMatrix, Rational};
use crate::tensor::{LinearOp, WedgeBasis};
use crate::weights::{Algebra, WeightPair};

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn qs(v: &[&str]) -> Vec<Rational> {
    v.iter().map(|s| q(s)).collect()
}

const GENERIC: [&str; 3] = ["7/3", "-5/4", "11/7"];

fn generic_pair(algebra: Algebra, n: usize, nu: &[usize], shift: usize) -> WeightPair {
    let mu: Vec<Rational> = (0..nu.len()).map(|a| q(GENERIC[(a + shift) % 3]) + Rational::new(shift as i64, 13)).collect();
    WeightPair::from_nu_shifted_mu(algebra, n, nu, &mu).unwrap()
}

fn restrict_op(pt: &FusionPoint<Rational>, op: &dyn LinearOp<Rational>) -> ExactMatrix {
    let w = WedgeBasis::for_shape(pt.n, &pt.shape).unwrap();
    w.restrict(op, &w).unwrap()
}

#[test]
fn b_single_factor_example() {
    let pair = WeightPair::new(Algebra::Gl, 2, qs(&["4/3", "1"]), qs(&["1/3", "0"])).unwrap();
    let pt = FusionPoint::from_pair(&pair).unwrap();
    let b = build_b(&pt).unwrap();
    assert_eq!(b.len(), 1);
    assert_eq!(b.factors()[0].arg, q("-4/3"));
    let expect = crate::tensor::op_p::<Rational>(pt.shape.space(2), 1, 2).unwrap().scale(&q("3/4")).add(&crate::tensor::TensorOperator::identity(pt.shape.space(2)));
    assert_eq!(b.materialize(), expect);
    assert_eq!(beigen(&pt).unwrap(), q("7/4"));
    let phi = WedgeBasis::for_shape(2, &pt.shape).unwrap().phi_vector();
    assert_eq!(b.apply(&phi), phi.scale(&q("7/4")));
}

#[test]
fn empty_products() {
    let pair = generic_pair(Algebra::Gl, 3, &[2], 0);
    let pt = FusionPoint::from_pair(&pair).unwrap();
    assert!(build_b(&pt).unwrap().is_empty());
    assert_eq!(beigen(&pt).unwrap(), Rational::one());
    let pair = generic_pair(Algebra::So, 3, &[1], 0);
    assert!(build_c(&FusionPoint::from_pair(&pair).unwrap()).unwrap().is_empty());
}

#[test]
fn b_ordering() {
    let s = crate::tensor::SegmentShape::new(vec![2, 2]).unwrap();
    assert_eq!(b_pairs(&s), vec![(1, 4), (1, 3), (2, 4), (2, 3)]);
}

#[test]
fn phi_eigenvectors() {
    for (algebra, n) in [(Algebra::Gl, 2), (Algebra::Gl, 3), (Algebra::So, 3), (Algebra::Sp, 2), (Algebra::Sp, 4)] {
        for nu in [vec![1, 1], vec![2, 1], vec![1, 2], vec![1, 1, 1]] {
            if nu.iter().any(|&k| k >= n) {
                continue;
            }
            let pair = generic_pair(algebra, n, &nu, 1);
            let pt = FusionPoint::from_pair(&pair).unwrap();
            let phi = WedgeBasis::for_shape(n, &pt.shape).unwrap().phi_vector();
            assert_eq!(build_b(&pt).unwrap().apply(&phi), phi.scale(&beigen(&pt).unwrap()), "{algebra:?} {n} {nu:?}");
            if algebra.is_twisted() {
                let e = ceigen(&pt).unwrap() * deigen(&pt).unwrap();
                assert_eq!(build_c(&pt).unwrap().apply(&phi), phi.scale(&e), "{algebra:?} {n} {nu:?}");
            }
        }
    }
}

#[test]
fn additive_forms_agree() {
    for (algebra, n, nu) in [(Algebra::Gl, 3, vec![2, 1]), (Algebra::Sp, 2, vec![1, 1]), (Algebra::So, 2, vec![1, 1]), (Algebra::Sp, 4, vec![2, 1]), (Algebra::So, 3, vec![2, 2])] {
        for shift in 0..2 {
            let pair = generic_pair(algebra, n, &nu, shift);
            let pt = FusionPoint::from_pair(&pair).unwrap();
            assert_eq!(restrict_op(&pt, &build_b(&pt).unwrap()), restrict_op(&pt, &build_b_additive(&pt).unwrap()));
            if algebra.is_twisted() {
                assert_eq!(restrict_op(&pt, &build_c(&pt).unwrap()), restrict_op(&pt, &build_c_additive(&pt).unwrap()), "{algebra:?} {n} {nu:?}");
            }
        }
    }
    // sp, ν1 = 2, n = 2
    let pair = generic_pair(Algebra::Sp, 2, &[2], 0);
    let pt = FusionPoint::from_pair(&pair).unwrap();
    assert_eq!(restrict_op(&pt, &build_c(&pt).unwrap()), restrict_op(&pt, &build_c_additive(&pt).unwrap()));
    let phi = WedgeBasis::for_shape(2, &pt.shape).unwrap().phi_vector();
    assert_eq!(build_c(&pt).unwrap().apply(&phi), phi.scale(&deigen(&pt).unwrap()));
}

#[test]
fn so_skips_same_segment_factors() {
    let pair = generic_pair(Algebra::So, 4, &[2, 3], 0);
    let pt = FusionPoint::from_pair(&pair).unwrap();
    assert_eq!(restrict_op(&pt, &build_c(&pt).unwrap()), restrict_op(&pt, &build_c_cross(&pt).unwrap()));
}

#[test]
fn d_operators_match_c() {
    for shift in 0..3 {
        let pair = generic_pair(Algebra::Sp, 4, &[3], shift);
        let pt = FusionPoint::from_pair(&pair).unwrap();
        let d = d_operator_one(pt.form().unwrap(), 3, &pt.lambda_rho[0], 3).unwrap();
        assert_eq!(d.materialize(), build_c(&pt).unwrap().materialize());
    }
    let form = crate::tensor::FormChoice::new(4, crate::tensor::FormKind::Sp).unwrap();
    assert!(d_operator_one::<Rational>(form, 3, &q("1/3"), 1).unwrap().is_empty());
    let d2 = d_operator_one::<Rational>(form, 3, &q("1/3"), 2).unwrap();
    assert_eq!(d2.factors()[0].arg, q("4/3"));

    // Z is the cross-segment block of C
    for algebra in [Algebra::So, Algebra::Sp] {
        let pair = generic_pair(algebra, 4, &[2, 2], 1);
        let pt = FusionPoint::from_pair(&pair).unwrap();
        let x = pt.lambda_rho[0].clone() + &pt.lambda_rho[1];
        let z = d_operator_two(pt.form().unwrap(), (2, 2), &x, 2, 4).unwrap();
        let cross = build_c_cross(&pt).unwrap();
        assert_eq!(z.materialize(), cross.materialize());
    }
}

#[test]
fn d_operator_lemmas() {
    use crate::tensor::{FormChoice, FormKind};
    for (n, nu1) in [(4, 3), (4, 2), (2, 2), (6, 4)] {
        let form = FormChoice::new(n, FormKind::Sp).unwrap();
        assert!(check_lemma_one(form, nu1).unwrap(), "n={n} ν1={nu1}");
    }
    for (kind, n, nu) in [(FormKind::So, 3, (2, 2)), (FormKind::Sp, 4, (2, 1)), (FormKind::So, 4, (1, 2))] {
        let form = FormChoice::new(n, kind).unwrap();
        assert!(check_lemma_two(form, nu).unwrap(), "{kind:?} n={n} ν={nu:?}");
    }
}

#[test]
fn annihilation() {
    let pair = WeightPair::from_nu_shifted_lambda(Algebra::Sp, 2, &[2], &qs(&["0"])).unwrap();
    assert_eq!(pair.lambda, qs(&["1"]));
    assert!(check_annihilation(AnnihilationCase::One, &pair).unwrap());
    let pair = WeightPair::from_nu_shifted_lambda(Algebra::Sp, 4, &[3], &qs(&["0"])).unwrap();
    assert!(check_annihilation(AnnihilationCase::One, &pair).unwrap());
    let ctrl = WeightPair::from_nu_shifted_lambda(Algebra::Sp, 4, &[3], &qs(&["2/5"])).unwrap();
    assert!(!check_annihilation(AnnihilationCase::One, &ctrl).unwrap());

    let pair = WeightPair::from_nu_shifted_lambda(Algebra::So, 3, &[2, 2], &qs(&["3/7", "-3/7"])).unwrap();
    assert!(check_annihilation(AnnihilationCase::Two, &pair).unwrap());
    let ctrl = WeightPair::from_nu_shifted_lambda(Algebra::So, 3, &[2, 2], &qs(&["3/7", "1/5"])).unwrap();
    assert!(!check_annihilation(AnnihilationCase::Two, &ctrl).unwrap());

    let bad = WeightPair::from_nu_shifted_lambda(Algebra::So, 3, &[1, 1], &qs(&["0", "0"])).unwrap();
    assert!(matches!(check_annihilation(AnnihilationCase::Two, &bad), Err(crate::Error::Precondition(_))));
}

#[test]
fn numeric_pole_points_to_line() {
    // equal shifted μ-labels make x_2 − x_1 vanish
    let pair = WeightPair::from_nu_shifted_mu(Algebra::Gl, 2, &[1, 1], &qs(&["0", "0"])).unwrap();
    let err = normalize_i(&FusionInput::Point(pair)).unwrap_err();
    assert!(matches!(err, crate::Error::Pole(ref s) if s.contains("MuLine")), "{err}");
}

#[test]
fn normalized_i_on_line() {
    // λ+ρ = (c, c): the limit kills the antisymmetric line
    let pair = WeightPair::from_nu_shifted_lambda(Algebra::Gl, 2, &[1, 1], &qs(&["1/3", "1/3"])).unwrap();
    let line = MuLine::new(pair).unwrap();
    let res = normalize_i(&FusionInput::Line(line)).unwrap();
    assert_eq!(res.kernel().len(), 0);
    assert_eq!(res.matrix, ExactMatrix::identity(4));

    let pair = WeightPair::from_nu_shifted_lambda(Algebra::Gl, 2, &[1, 1], &qs(&["4/3", "1/3"])).unwrap();
    let res = normalize_i(&FusionInput::Line(MuLine::new(pair).unwrap())).unwrap();
    let k = res.kernel();
    assert_eq!(k.len(), 1);
    assert!(k[0][0].is_zero() && k[0][3].is_zero() && k[0][1] == -k[0][2].clone());
    assert_eq!(res.rank(), 3);

    // generic: invertible, φ ↦ φ
    let pair = generic_pair(Algebra::Gl, 3, &[2, 1], 0);
    let res = normalize_i(&FusionInput::Point(pair)).unwrap();
    assert_eq!(res.rank(), 9);
    assert_eq!(res.matrix.col(0)[0], Rational::one());
}

#[test]
fn normalized_j_on_line() {
    let pair = WeightPair::from_nu_shifted_lambda(Algebra::Sp, 2, &[2], &qs(&["0"])).unwrap();
    let res = normalize_j(&FusionInput::Line(MuLine::new(pair).unwrap())).unwrap();
    assert!(!res.matrix.is_zero());
    assert_eq!(res.kernel().len() + res.rank(), 1);

    let pair = WeightPair::from_nu_shifted_lambda(Algebra::So, 3, &[2, 2], &qs(&["0", "-1"])).unwrap();
    let res = normalize_j(&FusionInput::Line(MuLine::new(pair).unwrap())).unwrap();
    let phi = WedgeBasis::new(3, &[2, 2]).unwrap();
    let phi = phi.project_vec(&phi.phi_vector());
    assert_eq!(res.matrix.mul_vec(&phi), phi);
    assert!(normalize_j(&FusionInput::Point(generic_pair(Algebra::Gl, 3, &[1, 1], 0))).is_err());
}

#[test]
fn line_certification() {
    let pair = WeightPair::from_nu_shifted_lambda(Algebra::So, 3, &[1, 1], &qs(&["0", "-1"])).unwrap();
    assert!(MuLine::new(pair.clone()).is_ok());
    assert!(MuLine::with_direction(pair.clone(), qs(&["1", "1"])).is_err());
    assert!(MuLine::with_direction(pair, qs(&["0", "0"])).is_err());
}
