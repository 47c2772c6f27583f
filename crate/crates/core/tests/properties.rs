use std::f64::consts::FRAC_PI_2;

use neutro_core::operators::{conjunct, disjunct, negate};
use neutro_core::{
    coarsen, embed_into_ns, n_ways, neutrosophify, nm_add, nm_mul, nn_add, nn_mul, offset_degree, refine,
    refined_hesitancy, three_ways, validate, validate_refined, ConceptMapping, Decision3, FamilySpec, NeutroMatrix,
    Nn, OperatorSystem, Pair, RefinedComponents, RefinedFamilySpec, RefinedKind, Triplet, EPS,
};
use num_rational::Rational64;
use proptest::prelude::*;

fn unit() -> impl Strategy<Value = f64> {
    0.0..=1.0f64
}

fn ns_triplet() -> impl Strategy<Value = Triplet> {
    (unit(), unit(), unit()).prop_map(|(t, i, f)| Triplet::new(t, i, f).unwrap())
}

fn ifs_triplet() -> impl Strategy<Value = Triplet> {
    (unit(), unit()).prop_map(|(t, u)| {
        let f = (1.0 - t) * u;
        Triplet::new(t, 1.0 - t - f, f).unwrap()
    })
}

fn pyfs_pair() -> impl Strategy<Value = Pair> {
    (unit(), 0.0..=FRAC_PI_2).prop_map(|(r, th)| Pair::new(r * th.cos(), r * th.sin()).unwrap())
}

fn sfs_triplet() -> impl Strategy<Value = Triplet> {
    (unit(), 0.0..=FRAC_PI_2, 0.0..=FRAC_PI_2).prop_map(|(r, a, b)| {
        Triplet::new(r * a.cos() * b.sin(), r * a.sin() * b.sin(), r * b.cos()).unwrap()
    })
}

fn rational() -> impl Strategy<Value = Rational64> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational64::new(n, d))
}

fn nn() -> impl Strategy<Value = Nn> {
    (rational(), rational()).prop_map(|(a, b)| Nn::new(a, b))
}

fn int_matrix() -> impl Strategy<Value = NeutroMatrix> {
    proptest::collection::vec((-6i64..=6, -6i64..=6), 9).prop_map(|v| {
        let cells: Vec<Nn> = v.into_iter().map(|(a, b)| Nn::new(a.into(), b.into())).collect();
        NeutroMatrix::from_rows(cells.chunks(3).map(<[Nn]>::to_vec).collect()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ns_negation_is_an_involution(x in ns_triplet()) {
        let ns = OperatorSystem::ns();
        let back = negate(&negate(&x, &ns).unwrap(), &ns).unwrap();
        prop_assert!(back.approx_eq(&x, 1e-15));
    }

    #[test]
    fn ifs_negation_is_an_involution(x in ifs_triplet()) {
        let ifs = OperatorSystem::ifs();
        let back = negate(&negate(&x, &ifs).unwrap(), &ifs).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn ns_de_morgan(a in ns_triplet(), b in ns_triplet()) {
        let ns = OperatorSystem::ns();
        let n = |x: &Triplet| negate(x, &ns).unwrap();
        let lhs = n(&conjunct(&a, &b, &ns).unwrap());
        let rhs = disjunct(&n(&a), &n(&b), &ns).unwrap();
        prop_assert!(lhs.approx_eq(&rhs, 1e-15));
        let lhs = n(&disjunct(&a, &b, &ns).unwrap());
        let rhs = conjunct(&n(&a), &n(&b), &ns).unwrap();
        prop_assert!(lhs.approx_eq(&rhs, 1e-15));
    }

    #[test]
    fn ifs_operators_stay_on_the_simplex(a in ifs_triplet(), b in ifs_triplet()) {
        let ifs = OperatorSystem::ifs();
        for r in [conjunct(&a, &b, &ifs).unwrap(), disjunct(&a, &b, &ifs).unwrap()] {
            prop_assert!((r.sum() - 1.0).abs() <= 1e-9);
        }
    }

    #[test]
    fn ns_min_max_operators_are_associative(a in ns_triplet(), b in ns_triplet(), c in ns_triplet()) {
        let ns = OperatorSystem::ns();
        let l = conjunct(&conjunct(&a, &b, &ns).unwrap(), &c, &ns).unwrap();
        let r = conjunct(&a, &conjunct(&b, &c, &ns).unwrap(), &ns).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn pyfs_embeds_into_ns_on_the_simplex(p in pyfs_pair()) {
        let e = embed_into_ns(p, &FamilySpec::pyfs()).unwrap();
        prop_assert!(validate(e, &FamilySpec::ns()).unwrap().valid);
        prop_assert!((e.sum() - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn sfs_embeds_into_ns(x in sfs_triplet()) {
        let e = embed_into_ns(x, &FamilySpec::sfs()).unwrap();
        prop_assert!(validate(e, &FamilySpec::ns()).unwrap().valid);
    }

    #[test]
    fn qrofs_embeds_into_ns(q in 1.0..8.0f64, t in unit(), u in unit()) {
        let f = (1.0 - t.powf(q)).max(0.0).powf(1.0 / q) * u;
        let fam = FamilySpec::qrofs(q).unwrap();
        let p = Pair::new(t, f).unwrap();
        prop_assume!(validate(p, &fam).unwrap().valid);
        let e = embed_into_ns(p, &fam).unwrap();
        prop_assert!(validate(e, &FamilySpec::ns()).unwrap().valid);
    }

    #[test]
    fn nhsfs_validity_is_monotone_in_exponent(x in ns_triplet(), n in 1.0..6.0f64, dn in 0.0..6.0f64) {
        let lo = validate(x, &FamilySpec::nhsfs(n).unwrap()).unwrap();
        let hi = validate(x, &FamilySpec::nhsfs(n + dn).unwrap()).unwrap();
        prop_assert!(hi.constraint_value <= lo.constraint_value + 1e-12);
        if lo.valid {
            prop_assert!(hi.valid);
        }
    }

    #[test]
    fn coarsen_inverts_refine(x in ns_triplet(), p in 1usize..5, r in 1usize..5, s in 1usize..5) {
        let c = refine(&x, (p, r, s), None).unwrap();
        let back = coarsen(&c).unwrap();
        prop_assert!(back.approx_eq(&x, EPS));
    }

    #[test]
    fn zeroing_a_sub_degree_keeps_validity(x in ns_triplet(), k in 0usize..4) {
        let fam = RefinedFamilySpec::new(RefinedKind::Riifs);
        let scaled = Triplet::new(x.t() / 3.0, x.i() / 3.0, x.f() / 3.0).unwrap();
        let mut c = refine(&scaled, (2, 1, 1), None).unwrap();
        prop_assume!(validate_refined(&c, &fam).unwrap().valid);
        let slot = match k { 0 | 1 => &mut c.ts[k], 2 => &mut c.is[0], _ => &mut c.fs[0] };
        *slot = neutro_core::SubDegree::point(0.0).unwrap();
        prop_assert!(validate_refined(&c, &fam).unwrap().valid);
    }

    #[test]
    fn degenerate_rpyfs_matches_pyfs(p in pyfs_pair()) {
        let c = RefinedComponents::scalar(&[p.t()], &[], &[p.f()]).unwrap();
        let fam = RefinedFamilySpec::new(RefinedKind::RPyFs);
        let refined = refined_hesitancy(&c, &fam).unwrap();
        let plain = neutro_core::hesitancy(&p, &FamilySpec::pyfs()).unwrap();
        prop_assert_eq!(refined, plain);
    }

    #[test]
    fn rns_with_zero_extra_slot_agrees_with_ns(x in ns_triplet()) {
        let c = RefinedComponents::scalar(&[x.t(), 0.0], &[x.i()], &[x.f()]).unwrap();
        let refined = validate_refined(&c, &RefinedFamilySpec::new(RefinedKind::Rns)).unwrap();
        prop_assert_eq!(refined.valid, validate(x, &FamilySpec::ns()).unwrap().valid);
    }

    #[test]
    fn nn_ring_laws(x in nn(), y in nn(), z in nn()) {
        prop_assert_eq!(nn_add(&x, &y), nn_add(&y, &x));
        prop_assert_eq!(nn_mul(&x, &y), nn_mul(&y, &x));
        prop_assert_eq!(nn_add(&nn_add(&x, &y), &z), nn_add(&x, &nn_add(&y, &z)));
        prop_assert_eq!(nn_mul(&nn_mul(&x, &y), &z), nn_mul(&x, &nn_mul(&y, &z)));
        prop_assert_eq!(nn_mul(&x, &nn_add(&y, &z)), nn_add(&nn_mul(&x, &y), &nn_mul(&x, &z)));
    }

    #[test]
    fn real_times_i_scales_the_coefficient(c in rational()) {
        let i = Nn::indeterminacy();
        prop_assert_eq!(nn_mul(&Nn::real(c), &i), Nn::new(0.into(), c));
        prop_assert_eq!(nn_mul(&i, &i), i);
    }

    #[test]
    fn nm_mul_is_associative(a in int_matrix(), b in int_matrix(), c in int_matrix()) {
        let l = nm_mul(&nm_mul(&a, &b).unwrap(), &c).unwrap();
        let r = nm_mul(&a, &nm_mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn nm_mul_distributes(a in int_matrix(), b in int_matrix(), c in int_matrix()) {
        let l = nm_mul(&a, &nm_add(&b, &c).unwrap()).unwrap();
        let r = nm_add(&nm_mul(&a, &b).unwrap(), &nm_mul(&a, &c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn grid_round_trip(a in int_matrix()) {
        let text = a.to_grid();
        let back = NeutroMatrix::parse_grid(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_grid(), text);
    }

    #[test]
    fn three_ways_labels_every_element_once(scores in proptest::collection::vec(-1.0..2.0f64, 1..40), a in 0.0..1.0f64, gap in 0.001..1.0f64) {
        let out = three_ways(&scores, a, a - gap).unwrap();
        prop_assert_eq!(out.labels.len(), scores.len());
        prop_assert!((out.partition.sum() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn n_ways_with_merged_middle_matches_three_ways(scores in proptest::collection::vec(0.0..1.0f64, 1..40), c0 in 0.05..0.3f64, c1 in 0.35..0.6f64, c2 in 0.65..0.95f64) {
        prop_assume!(scores.iter().all(|s| *s != c0 && *s != c2));
        let n = n_ways(&scores, &[c0, c1, c2], (2, 1, 1)).unwrap();
        let t = three_ways(&scores, c2, c0).unwrap();
        for (l, d) in n.labels.iter().zip(&t.labels) {
            let merged = match (l.group, l.level) {
                (Decision3::Accept, 1) => Decision3::Accept,
                (Decision3::Reject, _) => Decision3::Reject,
                _ => Decision3::Noncommit,
            };
            prop_assert_eq!(merged, *d);
        }
    }

    #[test]
    fn offset_degree_is_linear(a in -100.0..100.0f64, k in -10i32..10, norm in 1.0..80.0f64) {
        let k = f64::from(k);
        let lhs = offset_degree(k * a, norm).unwrap();
        let rhs = k * offset_degree(a, norm).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs.abs()));
    }

    #[test]
    fn neutrosophify_is_scale_invariant(x in 0.1..10.0f64, y in 0.1..10.0f64, z in 0.1..10.0f64, k in 0.01..100.0f64) {
        let m = ConceptMapping::new(&["a"], &["b"], &["c"]);
        let p = neutrosophify(&[("a", x), ("b", y), ("c", z)], &m).unwrap().to_array();
        let q = neutrosophify(&[("a", k * x), ("b", k * y), ("c", k * z)], &m).unwrap().to_array();
        for (u, v) in p.iter().zip(q) {
            prop_assert!((u - v).abs() <= 1e-12);
        }
    }
}
