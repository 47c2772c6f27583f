//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::f64::consts::{FRAC_PI_2, PI};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use neutro_core::operators::{conjunct, disjunct, implicate, negate, setwise};
use neutro_core::{
    coarsen, divergence_report, embed_into_ns, estimate_family_volume, hesitancy, nm_mul, nn_add, nn_mul,
    normalize_elementwise, offset_degree, paradox_check, refine, sup_transform, validate, validate_offset,
    FamilySpec, LabeledSet, NeutroMatrix, Nn, OffsetBounds, OffsetClass, OperatorSystem, OverflowReading, Pair,
    SetOp, Triplet, EXHIBITS,
};
use num_rational::Rational64;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn t(a: f64, b: f64, c: f64) -> Triplet {
    Triplet::new(a, b, c).unwrap()
}

fn close(got: &Triplet, want: [f64; 3], tol: f64) -> bool {
    got.to_array().iter().zip(want).all(|(g, w)| (g - w).abs() <= tol)
}

fn set_close(label: &str, got: &LabeledSet, want: &[[f64; 3]], tol: f64) -> Outcome {
    ensure!(got.len() == want.len(), "{label}: {} elements", got.len());
    for ((name, x), w) in got.iter().zip(want) {
        ensure!(close(x, *w, tol), "{label} {name}: got {:?}, want {w:?}", x.to_array());
    }
    Ok(())
}

fn within(label: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    f()?;
    let took = start.elapsed();
    ensure!(took < limit, "{label} took {took:?}, limit {limit:?}");
    Ok(())
}

fn sets() -> (LabeledSet, LabeledSet) {
    let ns = FamilySpec::ns();
    (
        LabeledSet::from_rows([("x1", [0.8, 0.3, 0.5]), ("x2", [0.9, 0.2, 0.6])], ns).unwrap(),
        LabeledSet::from_rows([("x1", [0.2, 0.1, 0.3]), ("x2", [0.6, 0.2, 0.1])], ns).unwrap(),
    )
}

fn sum_one_operators() -> Outcome {
    within("operators", Duration::from_secs(1), || {
        let (a, b) = (t(0.3, 0.6, 0.1), t(0.4, 0.1, 0.5));
        let cases = [
            ("IFS", OperatorSystem::ifs(), [[0.1, 0.6, 0.3], [0.5, 0.1, 0.4], [0.3, 0.2, 0.5], [0.4, 0.5, 0.1], [0.4, 0.3, 0.3]]),
            ("NS", OperatorSystem::ns(), [[0.1, 0.4, 0.3], [0.5, 0.9, 0.4], [0.3, 0.6, 0.5], [0.4, 0.1, 0.1], [0.4, 0.1, 0.3]]),
        ];
        for (name, sys, want) in cases {
            let got = [
                negate(&a, &sys).unwrap(),
                negate(&b, &sys).unwrap(),
                conjunct(&a, &b, &sys).unwrap(),
                disjunct(&a, &b, &sys).unwrap(),
                implicate(&a, &b, &sys).unwrap(),
            ];
            for (g, w) in got.iter().zip(want) {
                ensure!(close(g, w, 1e-9), "{name}: got {:?}, want {w:?}", g.to_array());
            }
        }
        Ok(())
    })
}

fn transform_divergence() -> Outcome {
    within("transform divergence", Duration::from_secs(1), || {
        let tol = 0.01;
        let (a_n, b_n) = sets();
        let ns = OperatorSystem::ns();
        let max_i = OperatorSystem::iifs_max_i().with_overflow(OverflowReading::PrintedNumerator);
        let min_i = OperatorSystem::iifs_min_i();
        let a = sup_transform(&a_n).map_err(|e| e.to_string())?.set;
        let b = sup_transform(&b_n).map_err(|e| e.to_string())?.set;
        set_close("A_IIFS", &a, &[[0.44, 0.17, 0.28], [0.50, 0.11, 0.33]], tol)?;
        set_close("B_IIFS", &b, &[[0.18, 0.09, 0.27], [0.55, 0.18, 0.09]], tol)?;

        let c_n = setwise(&a_n, &b_n, SetOp::And, &ns).unwrap();
        let d_n = setwise(&a_n, &b_n, SetOp::Or, &ns).unwrap();
        let c_iifs = setwise(&a, &b, SetOp::And, &max_i).unwrap();
        let c_iifs2 = setwise(&a, &b, SetOp::And, &min_i).unwrap();
        let d_iifs = setwise(&a, &b, SetOp::Or, &max_i).unwrap();
        let c_t = sup_transform(&c_n).unwrap().set;
        let d_t = sup_transform(&d_n).unwrap().set;
        set_close("C_N", &c_n, &[[0.2, 0.3, 0.5], [0.6, 0.2, 0.6]], tol)?;
        set_close("D_N", &d_n, &[[0.8, 0.1, 0.3], [0.9, 0.2, 0.1]], tol)?;
        set_close("C_IIFS", &c_iifs, &[[0.18, 0.17, 0.28], [0.495, 0.109, 0.326]], tol)?;
        set_close("C_IIFS2", &c_iifs2, &[[0.18, 0.09, 0.28], [0.50, 0.11, 0.33]], tol)?;
        set_close("D_IIFS", &d_iifs, &[[0.44, 0.09, 0.27], [0.55, 0.11, 0.09]], tol)?;
        set_close("C_IIFS(t)", &c_t, &[[0.13, 0.20, 0.33], [0.40, 0.13, 0.40]], tol)?;
        set_close("D_IIFS(t)", &d_t, &[[0.57, 0.07, 0.21], [0.64, 0.14, 0.07]], tol)?;

        let differ = |x: &LabeledSet, y: &LabeledSet| divergence_report(x, y, tol).unwrap().differ;
        ensure!(differ(&c_n, &c_iifs), "C_N vs C_IIFS did not diverge");
        ensure!(differ(&d_n, &d_iifs), "D_N vs D_IIFS did not diverge");
        ensure!(differ(&c_t, &c_iifs), "C_IIFS(t) vs C_IIFS did not diverge");
        Ok(())
    })
}

fn normalization_divergence() -> Outcome {
    let tol = 0.01;
    let (a_n, b_n) = sets();
    let a = normalize_elementwise(&a_n).unwrap();
    let b = normalize_elementwise(&b_n).unwrap();
    set_close("A_IFS", &a, &[[0.50, 0.19, 0.31], [0.53, 0.12, 0.35]], tol)?;
    set_close("B_IFS", &b, &[[0.33, 0.17, 0.50], [0.67, 0.22, 0.11]], tol)?;
    let (ax, bx) = (a.components()[0], b.components()[0]);
    let (ifs, ns) = (OperatorSystem::ifs(), OperatorSystem::ns());
    let cases = [
        ("x1 and, NS", conjunct(&ax, &bx, &ns).unwrap(), [0.33, 0.19, 0.50]),
        ("x1 and, IFS", conjunct(&ax, &bx, &ifs).unwrap(), [0.33, 0.17, 0.50]),
        ("x1 or, NS", disjunct(&ax, &bx, &ns).unwrap(), [0.50, 0.17, 0.31]),
        ("x1 or, IFS", disjunct(&ax, &bx, &ifs).unwrap(), [0.50, 0.19, 0.31]),
    ];
    for (name, got, want) in &cases {
        ensure!(close(got, *want, tol), "{name}: got {:?}, want {want:?}", got.to_array());
    }
    Ok(())
}

fn bound_witnesses() -> Outcome {
    let bound = (1.0f64 - 0.81).sqrt();
    ensure!((bound - 0.44).abs() <= 0.01, "PyFS bound {bound}");
    ensure!(validate(Pair::new(0.9, bound).unwrap(), &FamilySpec::pyfs()).unwrap().valid, "bound rejected");
    ensure!(!validate(Pair::new(0.9, bound + 0.01).unwrap(), &FamilySpec::pyfs()).unwrap().valid, "past bound accepted");
    let h = hesitancy(&Pair::new(0.9, 0.2).unwrap(), &FamilySpec::pyfs()).unwrap().get();
    ensure!((h - 0.15f64.sqrt()).abs() < 1e-9 && (h - 0.39).abs() <= 0.01, "hesitancy {h}");

    let x = t(0.9, 0.4, 0.5);
    ensure!(validate(x, &FamilySpec::ns()).unwrap().valid, "(0.9, 0.4, 0.5) not NS");
    let s = validate(x, &FamilySpec::sfs()).unwrap();
    ensure!(!s.valid && (s.constraint_value - 1.22).abs() <= 1e-9, "SFS report {s:?}");

    for q in [1.0, 2.0, 5.0] {
        let fam = FamilySpec::qrofs(q).unwrap();
        for f in [0.1, 0.5, 1.0] {
            ensure!(!validate(Pair::new(1.0, f).unwrap(), &fam).unwrap().valid, "q = {q}: (1, {f}) accepted");
        }
    }
    Ok(())
}

fn paradox() -> Outcome {
    let r = paradox_check(&t(1.0, 1.0, 1.0)).map_err(|e| e.to_string())?;
    ensure!(r.ns_valid, "(1, 1, 1) rejected by NS");
    ensure!(!r.iifs_valid, "(1, 1, 1) accepted by IIFS");
    let n = r.normalized.ok_or("no normalization")?;
    ensure!(n.to_array() == [1.0 / 3.0; 3], "normalized {:?}", n.to_array());
    Ok(())
}

fn run_property<S: Strategy>(name: &str, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Outcome {
    let mut runner = TestRunner::new(Config { cases: 1000, failure_persistence: None, ..Config::default() });
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn unit() -> std::ops::RangeInclusive<f64> {
    0.0..=1.0
}

fn ns_triplet() -> impl Strategy<Value = Triplet> {
    (unit(), unit(), unit()).prop_map(|(a, b, c)| t(a, b, c))
}

fn ifs_triplet() -> impl Strategy<Value = Triplet> {
    (unit(), unit()).prop_map(|(a, u)| {
        let f = (1.0 - a) * u;
        t(a, 1.0 - a - f, f)
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

fn properties() -> Outcome {
    let ns = OperatorSystem::ns();
    let ifs = OperatorSystem::ifs();

    run_property("NS negation involution", ns_triplet(), |x| {
        let back = negate(&negate(&x, &ns).unwrap(), &ns).unwrap();
        prop_assert!(back.approx_eq(&x, 1e-12));
        Ok(())
    })?;
    run_property("IFS negation involution", ifs_triplet(), |x| {
        prop_assert_eq!(negate(&negate(&x, &ifs).unwrap(), &ifs).unwrap(), x);
        Ok(())
    })?;
    run_property("NS De Morgan", (ns_triplet(), ns_triplet()), |(a, b)| {
        let n = |x: &Triplet| negate(x, &ns).unwrap();
        prop_assert!(n(&conjunct(&a, &b, &ns).unwrap()).approx_eq(&disjunct(&n(&a), &n(&b), &ns).unwrap(), 1e-12));
        prop_assert!(n(&disjunct(&a, &b, &ns).unwrap()).approx_eq(&conjunct(&n(&a), &n(&b), &ns).unwrap(), 1e-12));
        Ok(())
    })?;
    run_property("IFS closure", (ifs_triplet(), ifs_triplet()), |(a, b)| {
        for r in [conjunct(&a, &b, &ifs).unwrap(), disjunct(&a, &b, &ifs).unwrap(), negate(&a, &ifs).unwrap()] {
            prop_assert!((r.sum() - 1.0).abs() <= 1e-9);
        }
        Ok(())
    })?;
    run_property("PyFS embedding", (unit(), 0.0..=FRAC_PI_2), |(r, th)| {
        let p = Pair::new(r * th.cos(), r * th.sin()).unwrap();
        prop_assume!(validate(p, &FamilySpec::pyfs()).unwrap().valid);
        let e = embed_into_ns(p, &FamilySpec::pyfs()).unwrap();
        prop_assert!(validate(e, &FamilySpec::ns()).unwrap().valid);
        prop_assert!((e.sum() - 1.0).abs() <= 1e-9);
        Ok(())
    })?;
    run_property("SFS embedding", ns_triplet(), |x| {
        prop_assume!(validate(x, &FamilySpec::sfs()).unwrap().valid);
        prop_assert!(validate(embed_into_ns(x, &FamilySpec::sfs()).unwrap(), &FamilySpec::ns()).unwrap().valid);
        Ok(())
    })?;
    run_property("QROFS embedding", (1.0..8.0f64, unit(), unit()), |(q, a, u)| {
        let fam = FamilySpec::qrofs(q).unwrap();
        let p = Pair::new(a, (1.0 - a.powf(q)).max(0.0).powf(1.0 / q) * u).unwrap();
        prop_assume!(validate(p, &fam).unwrap().valid);
        prop_assert!(validate(embed_into_ns(p, &fam).unwrap(), &FamilySpec::ns()).unwrap().valid);
        Ok(())
    })?;
    run_property("NHSFS monotone in n", (ns_triplet(), 1.0..6.0f64, 0.0..6.0f64), |(x, n, dn)| {
        let lo = validate(x, &FamilySpec::nhsfs(n).unwrap()).unwrap();
        let hi = validate(x, &FamilySpec::nhsfs(n + dn).unwrap()).unwrap();
        prop_assert!(!lo.valid || hi.valid);
        Ok(())
    })?;
    run_property("coarsen after refine", (ns_triplet(), 1usize..5, 1usize..5, 1usize..5), |(x, p, r, s)| {
        let back = coarsen(&refine(&x, (p, r, s), None).unwrap()).unwrap();
        prop_assert!(back.approx_eq(&x, 1e-9));
        Ok(())
    })?;
    run_property("nn ring laws", (nn(), nn(), nn()), |(x, y, z)| {
        prop_assert_eq!(nn_add(&x, &y), nn_add(&y, &x));
        prop_assert_eq!(nn_mul(&x, &y), nn_mul(&y, &x));
        prop_assert_eq!(nn_add(&nn_add(&x, &y), &z), nn_add(&x, &nn_add(&y, &z)));
        prop_assert_eq!(nn_mul(&nn_mul(&x, &y), &z), nn_mul(&x, &nn_mul(&y, &z)));
        prop_assert_eq!(nn_mul(&x, &nn_add(&y, &z)), nn_add(&nn_mul(&x, &y), &nn_mul(&x, &z)));
        Ok(())
    })?;
    run_property("nm_mul associativity", (int_matrix(), int_matrix(), int_matrix()), |(a, b, c)| {
        let l = nm_mul(&nm_mul(&a, &b).unwrap(), &c).unwrap();
        let r = nm_mul(&a, &nm_mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
        Ok(())
    })
}

fn volumes() -> Outcome {
    within("volumes", Duration::from_secs(5), || {
        let n = 100_000;
        for (fam, exact) in [(FamilySpec::sfs(), PI / 6.0), (FamilySpec::nhsfs(1.0).unwrap(), 1.0 / 6.0)] {
            let e = estimate_family_volume(&fam, n, 42).unwrap();
            let sigma = (exact * (1.0 - exact) / n as f64).sqrt();
            ensure!((e.estimate - exact).abs() <= 3.0 * sigma, "{fam}: {} vs {exact}", e.estimate);
            let again = estimate_family_volume(&fam, n, 42).unwrap();
            ensure!(again.estimate == e.estimate, "{fam}: not deterministic");
        }
        Ok(())
    })
}

fn offset_hours() -> Outcome {
    let bounds = OffsetBounds::new(-1.0, 2.0).unwrap();
    let cases = [
        (30.0, 0.75, OffsetClass::Standard),
        (40.0, 1.0, OffsetClass::Standard),
        (45.0, 1.125, OffsetClass::Overset),
        (0.0, 0.0, OffsetClass::Standard),
        (-20.0, -0.5, OffsetClass::Underset),
    ];
    for (hours, degree, class) in cases {
        let d = offset_degree(hours, 40.0).map_err(|e| e.to_string())?;
        ensure!(d == degree, "{hours} h: degree {d}");
        let got = validate_offset([d, 0.0, 0.0], &bounds).class;
        ensure!(got == class, "{hours} h: class {got}");
    }
    Ok(())
}

fn demo_all() -> Outcome {
    within("demo --all", Duration::from_secs(10), || {
        let out = Command::new(env!("CARGO_BIN_EXE_neutro"))
            .args(["demo", "--all", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())?;
        ensure!(out.status.success(), "exit status {:?}", out.status.code());
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
        let names: Vec<&str> = v["outputs"].as_array().ok_or("no outputs")?.iter().filter_map(|r| r["name"].as_str()).collect();
        for want in [
            "sum-one-operators",
            "transform-divergence",
            "normalization-divergence",
            "pythagorean-bound",
            "pythagorean-square-sum",
            "spherical-witness",
            "qrung-witness",
            "paradox",
            "neutrosophication",
        ] {
            ensure!(names.contains(&want), "exhibit {want} not run");
        }
        ensure!(names.len() == EXHIBITS.len(), "ran {} of {} exhibits", names.len(), EXHIBITS.len());
        Ok(())
    })
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("sum-one operands under IFS and NS", sum_one_operators),
        ("sup-transform divergence", transform_divergence),
        ("normalization divergence", normalization_divergence),
        ("family bound witnesses", bound_witnesses),
        ("(1, 1, 1) paradox", paradox),
        ("property suites", properties),
        ("Monte-Carlo volumes", volumes),
        ("offset degrees from worked hours", offset_hours),
        ("demo --all", demo_all),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".to_string()));
        match result {
            Ok(()) => println!("criterion {}: PASS  {name}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
