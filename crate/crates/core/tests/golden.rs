//! Worked values checked against oracles written out by hand here, not
//! against the library's own exhibit tables.

use std::f64::consts::PI;

use neutro_core::operators::{conjunct, disjunct, implicate, negate, setwise};
use neutro_core::{
    analytic_volume, estimate_family_volume, hesitancy, neutrosophify, nm_mul, nn_pow, normalize_elementwise,
    offset_degree, paradox_check, refusal, sup_transform, validate, ConceptMapping, Error, FamilySpec, LabeledSet,
    NeutroMatrix, Nn, OperatorSystem, Pair, SetOp, Triplet,
};
use num_rational::Rational64;

fn t(a: f64, b: f64, c: f64) -> Triplet {
    Triplet::new(a, b, c).unwrap()
}

fn a_n() -> LabeledSet {
    LabeledSet::from_rows([("x1", [0.8, 0.3, 0.5]), ("x2", [0.9, 0.2, 0.6])], FamilySpec::ns()).unwrap()
}

fn b_n() -> LabeledSet {
    LabeledSet::from_rows([("x1", [0.2, 0.1, 0.3]), ("x2", [0.6, 0.2, 0.1])], FamilySpec::ns()).unwrap()
}

fn assert_close(got: [f64; 3], want: [f64; 3], tol: f64) {
    for (g, w) in got.iter().zip(want) {
        assert!((g - w).abs() <= tol, "got {got:?}, want {want:?}");
    }
}

// oracle: divide each raw component by the sum of the column maxima
fn oracle_sup(rows: &[[f64; 3]]) -> Vec<[f64; 3]> {
    let col = |k: usize| rows.iter().map(|r| r[k]).fold(f64::MIN, f64::max);
    let d = col(0) + col(1) + col(2);
    rows.iter().map(|r| [r[0] / d, r[1] / d, r[2] / d]).collect()
}

#[test]
fn sup_transform_matches_hand_division() {
    for (set, raw) in [
        (a_n(), [[0.8, 0.3, 0.5], [0.9, 0.2, 0.6]]),
        (b_n(), [[0.2, 0.1, 0.3], [0.6, 0.2, 0.1]]),
    ] {
        let out = sup_transform(&set).unwrap();
        for (got, want) in out.set.components().iter().zip(oracle_sup(&raw)) {
            assert_close(got.to_array(), want, 1e-15);
        }
        for (r, want) in out.refusals.iter().zip(oracle_sup(&raw)) {
            assert!((r.get() - (1.0 - want.iter().sum::<f64>())).abs() < 1e-15);
        }
    }
}

#[test]
fn sup_transform_printed_sets() {
    let a = sup_transform(&a_n()).unwrap();
    assert!((a.denominator - 1.8).abs() < 1e-12);
    assert_close(a.set.components()[0].to_array(), [0.44, 0.17, 0.28], 0.01);
    assert_close(a.set.components()[1].to_array(), [0.50, 0.11, 0.33], 0.01);
    let b = sup_transform(&b_n()).unwrap();
    assert!((b.denominator - 1.1).abs() < 1e-12);
    assert_close(b.set.components()[0].to_array(), [0.18, 0.09, 0.27], 0.01);
    assert_close(b.set.components()[1].to_array(), [0.55, 0.18, 0.09], 0.01);
}

#[test]
fn ns_set_operations() {
    let ns = OperatorSystem::ns();
    let c = setwise(&a_n(), &b_n(), SetOp::And, &ns).unwrap();
    assert_close(c.components()[0].to_array(), [0.2, 0.3, 0.5], 0.0);
    assert_close(c.components()[1].to_array(), [0.6, 0.2, 0.6], 0.0);
    let d = setwise(&a_n(), &b_n(), SetOp::Or, &ns).unwrap();
    assert_close(d.components()[0].to_array(), [0.8, 0.1, 0.3], 0.0);
    assert_close(d.components()[1].to_array(), [0.9, 0.2, 0.1], 0.0);
}

#[test]
fn sum_one_operands_under_both_systems() {
    let (a, b) = (t(0.3, 0.6, 0.1), t(0.4, 0.1, 0.5));
    let ifs = OperatorSystem::ifs();
    let ns = OperatorSystem::ns();
    let tol = 1e-9;
    assert_close(negate(&a, &ifs).unwrap().to_array(), [0.1, 0.6, 0.3], tol);
    assert_close(conjunct(&a, &b, &ifs).unwrap().to_array(), [0.3, 0.2, 0.5], tol);
    assert_close(disjunct(&a, &b, &ifs).unwrap().to_array(), [0.4, 0.5, 0.1], tol);
    assert_close(implicate(&a, &b, &ifs).unwrap().to_array(), [0.4, 0.3, 0.3], tol);
    assert_close(negate(&a, &ns).unwrap().to_array(), [0.1, 0.4, 0.3], tol);
    assert_close(conjunct(&a, &b, &ns).unwrap().to_array(), [0.3, 0.6, 0.5], tol);
    assert_close(disjunct(&a, &b, &ns).unwrap().to_array(), [0.4, 0.1, 0.1], tol);
    assert_close(implicate(&a, &b, &ns).unwrap().to_array(), [0.4, 0.1, 0.3], tol);
}

#[test]
fn elementwise_normalization() {
    let a = normalize_elementwise(&a_n()).unwrap();
    // 0.8 / 1.6, 0.3 / 1.6, 0.5 / 1.6
    assert_close(a.components()[0].to_array(), [0.5, 0.1875, 0.3125], 1e-15);
    assert_close(a.components()[1].to_array(), [0.9 / 1.7, 0.2 / 1.7, 0.6 / 1.7], 1e-15);
}

#[test]
fn pythagorean_bound_and_hesitancy() {
    let bound = (1.0f64 - 0.81).sqrt();
    assert!((bound - 0.19f64.sqrt()).abs() < 1e-15);
    assert!(validate(Pair::new(0.9, bound).unwrap(), &FamilySpec::pyfs()).unwrap().valid);
    let h = hesitancy(&Pair::new(0.9, 0.2).unwrap(), &FamilySpec::pyfs()).unwrap();
    assert!((h.get() - 0.15f64.sqrt()).abs() < 1e-12);
    assert!((h.get() - 0.39).abs() < 0.01);
}

#[test]
fn spherical_square_sum() {
    let r = validate(t(0.9, 0.4, 0.5), &FamilySpec::sfs()).unwrap();
    assert!((r.constraint_value - (0.81 + 0.16 + 0.25)).abs() < 1e-12);
    assert!(!r.valid);
    assert!(validate(t(0.9, 0.4, 0.5), &FamilySpec::ns()).unwrap().valid);
}

#[test]
fn spherical_refusal_is_root_of_residual() {
    let r = refusal(&t(0.5, 0.5, 0.5), &FamilySpec::sfs()).unwrap();
    assert!((r.get() - 0.25f64.sqrt()).abs() < 1e-12);
}

#[test]
fn all_ones_paradox() {
    let r = paradox_check(&t(1.0, 1.0, 1.0)).unwrap();
    assert!(r.ns_valid && !r.iifs_valid);
    assert_eq!(r.normalized.unwrap().to_array(), [1.0 / 3.0; 3]);
}

#[test]
fn volumes_match_closed_forms() {
    // positive octant of the unit ball is pi/6 of the cube; the simplex is 1/6
    assert!((analytic_volume(&FamilySpec::sfs()) - PI / 6.0).abs() < 1e-12);
    assert!((analytic_volume(&FamilySpec::nhsfs(1.0).unwrap()) - 1.0 / 6.0).abs() < 1e-12);
    assert!((analytic_volume(&FamilySpec::pyfs()) - PI / 4.0).abs() < 1e-12);
    assert!((analytic_volume(&FamilySpec::iifs()) - 1.0 / 6.0).abs() < 1e-12);

    let e = estimate_family_volume(&FamilySpec::sfs(), 100_000, 42).unwrap();
    let sigma = (PI / 6.0 * (1.0 - PI / 6.0) / 100_000.0).sqrt();
    assert!((e.estimate - PI / 6.0).abs() < 3.0 * sigma);
}

#[test]
fn neutrosophication_fractions() {
    let m = ConceptMapping::new(&["cold"], &["medium"], &["hot"]);
    let p = neutrosophify(&[("cold", 30.0), ("medium", 20.0), ("hot", 50.0)], &m).unwrap();
    assert_close(p.to_array(), [0.3, 0.2, 0.5], 1e-15);
}

#[test]
fn worked_hours() {
    let got: Vec<f64> = [30.0, 40.0, 45.0, 0.0, -20.0].iter().map(|h| offset_degree(*h, 40.0).unwrap()).collect();
    assert_eq!(got, [0.75, 1.0, 1.125, 0.0, -0.5]);
    assert!(matches!(offset_degree(1.0, 0.0), Err(Error::Usage(_)) | Err(Error::Degenerate(_))));
}

#[test]
fn neutrosophic_numbers() {
    let x: Nn = "2+I".parse().unwrap();
    let y: Nn = "-1+4I".parse().unwrap();
    // (2 + I)(-1 + 4I) = -2 + (8 - 1 + 4) I
    assert_eq!((x * y).to_string(), "-2+11I");
    assert_eq!(nn_pow(&Nn::indeterminacy(), 7).unwrap(), Nn::indeterminacy());
    let inv = nn_pow(&x, -1).unwrap();
    assert_eq!(x * inv, Nn::real(Rational64::from_integer(1)));
}

#[test]
fn matrix_square() {
    let m = NeutroMatrix::parse_grid("1 2+I -5\n0 1/3 I\n-1+4I 6 5I\n").unwrap();
    let sq = nm_mul(&m, &m).unwrap();
    // row 1 . column 1: 1*1 + (2+I)*0 + (-5)(-1+4I) = 6 - 20I
    assert_eq!(sq.get(0, 0).unwrap().to_string(), "6-20I");
}
