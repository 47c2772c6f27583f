//! Reproducible worked examples. Each exhibit recomputes a result from its
//! raw inputs and compares it with a stored golden value.

use serde::{Deserialize, Serialize};

use crate::decision::{neutrosophify, offset_degree, validate_offset, ConceptMapping, OffsetBounds, OffsetClass};
use crate::error::{Error, Result};
use crate::families::{hesitancy, validate, FamilySpec, InclusionClaim};
use crate::indeterminacy::{adjacency_validate, nm_mul, AdjacencyKind, NeutroMatrix};
use crate::operators::{self, setwise, OperatorSystem, OverflowReading, SetOp};
use crate::transforms::{divergence_report, normalize_elementwise, paradox_check, sup_transform, LabeledSet};
use crate::value::{Pair, Triplet, PRINTED_TOL};

/// Exact decimals compare at this tolerance.
const EXACT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Observed {
    Values(Vec<f64>),
    Flag(bool),
    Label(String),
}

impl Observed {
    fn matches(&self, other: &Observed, tol: f64) -> bool {
        match (self, other) {
            (Observed::Values(a), Observed::Values(b)) => {
                a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
            }
            (Observed::Flag(a), Observed::Flag(b)) => a == b,
            (Observed::Label(a), Observed::Label(b)) => a == b,
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    pub expected: Observed,
    pub actual: Observed,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExhibitReport {
    pub name: String,
    pub title: String,
    pub checks: Vec<Check>,
}

impl Check {
    /// Re-evaluates a numeric check at a different tolerance.
    pub fn recheck(&mut self, tol: f64) {
        if let Observed::Values(_) = self.expected {
            self.tolerance = tol;
            self.passed = self.expected.matches(&self.actual, tol);
        }
    }
}

impl ExhibitReport {
    /// Applies `tol` to every check that compares against two-decimal
    /// printed values.
    pub fn with_printed_tolerance(mut self, tol: f64) -> Self {
        for c in &mut self.checks {
            if c.tolerance == PRINTED_TOL {
                c.recheck(tol);
            }
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

struct Recorder {
    checks: Vec<Check>,
    tol: f64,
}

impl Recorder {
    fn new(tol: f64) -> Self {
        Recorder { checks: Vec::new(), tol }
    }

    fn push(&mut self, label: impl Into<String>, expected: Observed, actual: Observed, tol: f64) {
        let passed = expected.matches(&actual, tol);
        self.checks.push(Check { label: label.into(), expected, actual, tolerance: tol, passed });
    }

    fn values(&mut self, label: impl Into<String>, expected: &[f64], actual: &[f64]) {
        let tol = self.tol;
        self.push(label, Observed::Values(expected.to_vec()), Observed::Values(actual.to_vec()), tol);
    }

    fn triplet(&mut self, label: impl Into<String>, expected: [f64; 3], actual: &Triplet) {
        self.values(label, &expected, &actual.to_array());
    }

    fn set(&mut self, label: &str, expected: &[[f64; 3]], actual: &LabeledSet) {
        for (k, (name, x)) in actual.iter().enumerate() {
            let want = expected.get(k).copied().unwrap_or([f64::NAN; 3]);
            self.triplet(format!("{label} {name}"), want, x);
        }
    }

    fn flag(&mut self, label: impl Into<String>, expected: bool, actual: bool) {
        self.push(label, Observed::Flag(expected), Observed::Flag(actual), 0.0);
    }

    fn label(&mut self, label: impl Into<String>, expected: &str, actual: String) {
        self.push(label, Observed::Label(expected.to_string()), Observed::Label(actual), 0.0);
    }

    fn finish(self, name: &str, title: &str) -> ExhibitReport {
        ExhibitReport { name: name.to_string(), title: title.to_string(), checks: self.checks }
    }
}

/// Exhibit names accepted by [`run_exhibit`], in run order.
pub const EXHIBITS: &[&str] = &[
    "sum-one-operators",
    "transform-divergence",
    "normalization-divergence",
    "pythagorean-bound",
    "pythagorean-square-sum",
    "spherical-witness",
    "qrung-witness",
    "paradox",
    "neutrosophication",
    "offset-hours",
    "matrix",
    "graph",
];

pub fn run_exhibit(name: &str) -> Result<ExhibitReport> {
    match name {
        "sum-one-operators" => sum_one_operators(),
        "transform-divergence" => transform_divergence(),
        "normalization-divergence" => normalization_divergence(),
        "pythagorean-bound" => pythagorean_bound(),
        "pythagorean-square-sum" => pythagorean_square_sum(),
        "spherical-witness" => spherical_witness(),
        "qrung-witness" => qrung_witness(),
        "paradox" => paradox(),
        "neutrosophication" => neutrosophication(),
        "offset-hours" => offset_hours(),
        "matrix" => matrix(),
        "graph" => graph(),
        other => Err(Error::usage(format!(
            "unknown exhibit '{other}'; expected one of: {}",
            EXHIBITS.join(", ")
        ))),
    }
}

pub fn run_all() -> Result<Vec<ExhibitReport>> {
    EXHIBITS.iter().map(|n| run_exhibit(n)).collect()
}

fn t(t: f64, i: f64, f: f64) -> Triplet {
    Triplet::new(t, i, f).expect("exhibit constants are in [0, 1]")
}

fn sum_one_operators() -> Result<ExhibitReport> {
    let a = t(0.3, 0.6, 0.1);
    let b = t(0.4, 0.1, 0.5);
    let mut rec = Recorder::new(EXACT_TOL);
    let golden = [
        ("IFS", OperatorSystem::ifs(), [[0.1, 0.6, 0.3], [0.5, 0.1, 0.4], [0.3, 0.2, 0.5], [0.4, 0.5, 0.1], [0.4, 0.3, 0.3]]),
        ("NS", OperatorSystem::ns(), [[0.1, 0.4, 0.3], [0.5, 0.9, 0.4], [0.3, 0.6, 0.5], [0.4, 0.1, 0.1], [0.4, 0.1, 0.3]]),
    ];
    for (sys_name, sys, want) in golden {
        rec.triplet(format!("{sys_name} not a"), want[0], &operators::negate(&a, &sys)?);
        rec.triplet(format!("{sys_name} not b"), want[1], &operators::negate(&b, &sys)?);
        rec.triplet(format!("{sys_name} a and b"), want[2], &operators::conjunct(&a, &b, &sys)?);
        rec.triplet(format!("{sys_name} a or b"), want[3], &operators::disjunct(&a, &b, &sys)?);
        rec.triplet(format!("{sys_name} a implies b"), want[4], &operators::implicate(&a, &b, &sys)?);
    }
    Ok(rec.finish("sum-one-operators", "IFS vs NS operators on operands summing to 1"))
}

/// `A_N` and `B_N`, the neutrosophic sets used by the divergence exhibits.
pub fn sample_sets() -> Result<(LabeledSet, LabeledSet)> {
    let ns = FamilySpec::ns();
    let a = LabeledSet::from_rows([("x1", [0.8, 0.3, 0.5]), ("x2", [0.9, 0.2, 0.6])], ns)?;
    let b = LabeledSet::from_rows([("x1", [0.2, 0.1, 0.3]), ("x2", [0.6, 0.2, 0.1])], ns)?;
    Ok((a, b))
}

fn transform_divergence() -> Result<ExhibitReport> {
    let (a_n, b_n) = sample_sets()?;
    let mut rec = Recorder::new(PRINTED_TOL);
    let ns = OperatorSystem::ns();
    let max_i = OperatorSystem::iifs_max_i().with_overflow(OverflowReading::PrintedNumerator);
    let min_i = OperatorSystem::iifs_min_i();

    let a_t = sup_transform(&a_n)?;
    let b_t = sup_transform(&b_n)?;
    rec.values("A denominator", &[1.8], &[a_t.denominator]);
    rec.values("B denominator", &[1.1], &[b_t.denominator]);
    rec.set("A_IIFS", &[[0.44, 0.17, 0.28], [0.50, 0.11, 0.33]], &a_t.set);
    rec.set("B_IIFS", &[[0.18, 0.09, 0.27], [0.55, 0.18, 0.09]], &b_t.set);
    let refusals: Vec<f64> = a_t.refusals.iter().chain(&b_t.refusals).map(|r| r.get()).collect();
    rec.values("refusals A x1, A x2, B x1, B x2", &[0.11, 0.06, 0.46, 0.18], &refusals);

    let c_n = setwise(&a_n, &b_n, SetOp::And, &ns)?;
    let c_iifs = setwise(&a_t.set, &b_t.set, SetOp::And, &max_i)?;
    let c_iifs2 = setwise(&a_t.set, &b_t.set, SetOp::And, &min_i)?;
    let c_t = sup_transform(&c_n)?;
    rec.set("C_N", &[[0.2, 0.3, 0.5], [0.6, 0.2, 0.6]], &c_n);
    rec.set("C_IIFS", &[[0.18, 0.17, 0.28], [0.495, 0.109, 0.326]], &c_iifs);
    rec.set("C_IIFS2", &[[0.18, 0.09, 0.28], [0.50, 0.11, 0.33]], &c_iifs2);
    rec.values("C_N denominator", &[1.5], &[c_t.denominator]);
    rec.set("C_IIFS(t)", &[[0.13, 0.20, 0.33], [0.40, 0.13, 0.40]], &c_t.set);

    let d_n = setwise(&a_n, &b_n, SetOp::Or, &ns)?;
    let d_iifs = setwise(&a_t.set, &b_t.set, SetOp::Or, &max_i)?;
    let d_t = sup_transform(&d_n)?;
    rec.set("D_N", &[[0.8, 0.1, 0.3], [0.9, 0.2, 0.1]], &d_n);
    rec.set("D_IIFS", &[[0.44, 0.09, 0.27], [0.55, 0.11, 0.09]], &d_iifs);
    rec.values("D_N denominator", &[1.4], &[d_t.denominator]);
    rec.set("D_IIFS(t)", &[[0.57, 0.07, 0.21], [0.64, 0.14, 0.07]], &d_t.set);

    let differ = |x: &LabeledSet, y: &LabeledSet| divergence_report(x, y, PRINTED_TOL).map(|r| r.differ);
    rec.flag("C_N differs from C_IIFS", true, differ(&c_n, &c_iifs)?);
    rec.flag("C_N differs from C_IIFS2", true, differ(&c_n, &c_iifs2)?);
    rec.flag("C_IIFS differs from C_IIFS2", true, differ(&c_iifs, &c_iifs2)?);
    rec.flag("D_N differs from D_IIFS", true, differ(&d_n, &d_iifs)?);
    rec.flag("C_IIFS(t) differs from C_IIFS", true, differ(&c_t.set, &c_iifs)?);
    rec.flag("D_IIFS(t) differs from D_IIFS", true, differ(&d_t.set, &d_iifs)?);
    Ok(rec.finish("transform-divergence", "sup-transform then IIFS operators vs NS operators"))
}

fn normalization_divergence() -> Result<ExhibitReport> {
    let (a_n, b_n) = sample_sets()?;
    let mut rec = Recorder::new(PRINTED_TOL);
    let a = normalize_elementwise(&a_n)?;
    let b = normalize_elementwise(&b_n)?;
    rec.set("A_IFS", &[[0.50, 0.19, 0.31], [0.53, 0.12, 0.35]], &a);
    rec.set("B_IFS", &[[0.33, 0.17, 0.50], [0.67, 0.22, 0.11]], &b);

    let ifs = OperatorSystem::ifs();
    let ns = OperatorSystem::ns();
    let and_ifs = setwise(&a, &b, SetOp::And, &ifs)?;
    let or_ifs = setwise(&a, &b, SetOp::Or, &ifs)?;
    rec.set("A_IFS and B_IFS (IFS)", &[[0.33, 0.17, 0.50], [0.53, 0.12, 0.35]], &and_ifs);
    rec.set("A_IFS or B_IFS (IFS)", &[[0.50, 0.19, 0.31], [0.67, 0.22, 0.11]], &or_ifs);

    let (ax, bx) = (a.components()[0], b.components()[0]);
    rec.triplet("x1 and (NS)", [0.33, 0.19, 0.50], &operators::conjunct(&ax, &bx, &ns)?);
    rec.triplet("x1 and (IFS)", [0.33, 0.17, 0.50], &operators::conjunct(&ax, &bx, &ifs)?);
    rec.triplet("x1 or (NS)", [0.50, 0.17, 0.31], &operators::disjunct(&ax, &bx, &ns)?);
    rec.triplet("x1 or (IFS)", [0.50, 0.19, 0.31], &operators::disjunct(&ax, &bx, &ifs)?);
    let and_ns = setwise(&a, &b, SetOp::And, &ns)?;
    let or_ns = setwise(&a, &b, SetOp::Or, &ns)?;
    rec.flag("NS and differs from IFS and", true, divergence_report(&and_ns, &and_ifs, PRINTED_TOL)?.differ);
    rec.flag("NS or differs from IFS or", true, divergence_report(&or_ns, &or_ifs, PRINTED_TOL)?.differ);
    Ok(rec.finish("normalization-divergence", "elementwise normalization then IFS vs NS operators"))
}

fn pythagorean_bound() -> Result<ExhibitReport> {
    let mut rec = Recorder::new(PRINTED_TOL);
    let f_max = (1.0f64 - 0.9 * 0.9).sqrt();
    rec.values("largest F with T = 0.9", &[0.44], &[f_max]);
    let at_bound = validate(Pair::new(0.9, f_max)?, &FamilySpec::pyfs())?;
    let past_bound = validate(Pair::new(0.9, f_max + 0.01)?, &FamilySpec::pyfs())?;
    rec.flag("(0.9, bound) is PyFS", true, at_bound.valid);
    rec.flag("(0.9, bound + 0.01) is PyFS", false, past_bound.valid);
    rec.flag("(0.9, 1.0, 1.0) is NS", true, validate(t(0.9, 1.0, 1.0), &FamilySpec::ns())?.valid);
    let h = hesitancy(&Pair::new(0.9, 0.2)?, &FamilySpec::pyfs())?;
    rec.values("hesitancy of (0.9, 0.2)", &[0.39], &[h.get()]);
    Ok(rec.finish("pythagorean-bound", "T fixes an upper bound on F in PyFS"))
}

fn pythagorean_square_sum() -> Result<ExhibitReport> {
    let mut rec = Recorder::new(EXACT_TOL);
    let r = validate(Pair::new(0.9, 0.8)?, &FamilySpec::pyfs())?;
    rec.values("0.9^2 + 0.8^2", &[1.45], &[r.constraint_value]);
    rec.flag("(0.9, 0.8) is PyFS", false, r.valid);
    Ok(rec.finish("pythagorean-square-sum", "F = 0.8 is unreachable once T = 0.9"))
}

fn spherical_witness() -> Result<ExhibitReport> {
    let mut rec = Recorder::new(EXACT_TOL);
    let (ns, sfs) = InclusionClaim::NsNotSfs.check()?;
    rec.flag("(0.9, 0.4, 0.5) is NS", true, ns.valid);
    rec.flag("(0.9, 0.4, 0.5) is SFS", false, sfs.valid);
    rec.values("sum of squares", &[1.22], &[sfs.constraint_value]);
    Ok(rec.finish("spherical-witness", "an NS triplet outside SFS"))
}

fn qrung_witness() -> Result<ExhibitReport> {
    let mut rec = Recorder::new(EXACT_TOL);
    for q in [1.0, 2.0, 5.0] {
        let (ns, tgt) = InclusionClaim::NsNotQrofs { q }.check()?;
        rec.flag(format!("(1, 0.5, 0.5) is NS, q = {q}"), true, ns.valid);
        rec.flag(format!("(1, 0.5) is {q}-ROFS"), false, tgt.valid);
        let mirrored = validate(Pair::new(0.5, 1.0)?, &FamilySpec::qrofs(q)?)?;
        rec.flag(format!("(0.5, 1) is {q}-ROFS"), false, mirrored.valid);
    }
    Ok(rec.finish("qrung-witness", "T = 1 with F > 0 is NS but never q-ROFS"))
}

fn paradox() -> Result<ExhibitReport> {
    let mut rec = Recorder::new(0.0);
    let r = paradox_check(&t(1.0, 1.0, 1.0))?;
    rec.flag("(1, 1, 1) is NS", true, r.ns_valid);
    rec.flag("(1, 1, 1) is IIFS", false, r.iifs_valid);
    let third = 1.0 / 3.0;
    let normalized = r.normalized.map(|x| x.to_array().to_vec()).unwrap_or_default();
    rec.values("normalized", &[third, third, third], &normalized);
    rec.flag("normalized is still the paradox", false, r.normalized_is_paradox);
    Ok(rec.finish("paradox", "(1, 1, 1) cannot be represented once normalized"))
}

fn neutrosophication() -> Result<ExhibitReport> {
    let mut rec = Recorder::new(EXACT_TOL);
    let areas = [("cold", 30.0), ("medium", 20.0), ("hot", 50.0)];
    let p = neutrosophify(&areas, &ConceptMapping::new(&["cold"], &["medium"], &["hot"]))?;
    rec.values("M", &[0.3, 0.2, 0.5], &p.to_array());
    Ok(rec.finish("neutrosophication", "country M split into cold / medium / hot areas"))
}

fn offset_hours() -> Result<ExhibitReport> {
    let mut rec = Recorder::new(0.0);
    let people = [("Helen", 30.0, 0.75), ("John", 40.0, 1.0), ("George", 45.0, 1.125), ("Jane", 0.0, 0.0), ("Richard", -20.0, -0.5)];
    let bounds = OffsetBounds::new(-1.0, 2.0)?;
    for (name, hours, want) in people {
        let d = offset_degree(hours, 40.0)?;
        rec.values(format!("{name} degree"), &[want], &[d]);
        let class = validate_offset([d, 0.0, 0.0], &bounds).class;
        let want_class = if want > 1.0 {
            OffsetClass::Overset
        } else if want < 0.0 {
            OffsetClass::Underset
        } else {
            OffsetClass::Standard
        };
        rec.label(format!("{name} class"), &want_class.to_string(), class.to_string());
    }
    Ok(rec.finish("offset-hours", "membership by worked hours out of 40"))
}

pub const SAMPLE_MATRIX: &str = "1 2+I -5\n0 1/3 I\n-1+4I 6 5I\n";
pub const SAMPLE_GRAPH: &str = "0 1 I 0 I\n1 0 I 0 0\nI I 0 1 1\n0 0 1 0 1\nI 0 1 1 0\n";
pub const SAMPLE_COGNITIVE_MAP: &str =
    "0 I -1 1 1 0 0\nI 0 I 0 0 0 0\n-1 I 0 0 I 0 0\n1 0 0 0 0 0 0\n1 0 0 0 0 0 0\n0 0 0 0 I 0 -1\n-1 0 0 0 0 0 0\n";

fn matrix() -> Result<ExhibitReport> {
    let mut rec = Recorder::new(0.0);
    let m = NeutroMatrix::parse_grid(SAMPLE_MATRIX)?;
    rec.label("grid round trip", SAMPLE_MATRIX, m.to_grid());
    let id = NeutroMatrix::identity(3)?;
    rec.label("M x Id", SAMPLE_MATRIX, nm_mul(&m, &id)?.to_grid());
    let i = NeutroMatrix::parse_grid("I")?;
    rec.label("[I] x [I]", "I\n", nm_mul(&i, &i)?.to_grid());
    let a = NeutroMatrix::parse_grid("1 I\n0 1")?;
    let b = NeutroMatrix::parse_grid("1 0\nI 1")?;
    rec.label("[[1, I], [0, 1]] x [[1, 0], [I, 1]]", "1+I I\nI 1\n", nm_mul(&a, &b)?.to_grid());
    Ok(rec.finish("matrix", "matrix over a + bI with I^2 = I"))
}

fn graph() -> Result<ExhibitReport> {
    let mut rec = Recorder::new(0.0);
    let g = NeutroMatrix::parse_grid(SAMPLE_GRAPH)?;
    let rep = adjacency_validate(&g, AdjacencyKind::Graph)?;
    rec.values("indeterminate edges", &[6.0], &[rep.indeterminate as f64]);
    rec.flag("graph symmetric", true, rep.symmetric);
    rec.label("graph round trip", SAMPLE_GRAPH, g.to_grid());
    let m = NeutroMatrix::parse_grid(SAMPLE_COGNITIVE_MAP)?;
    rec.flag("cognitive map valid", true, adjacency_validate(&m, AdjacencyKind::CognitiveMap).is_ok());
    rec.label("cognitive map round trip", SAMPLE_COGNITIVE_MAP, m.to_grid());
    let path = crate::indeterminacy::path_influence(&[t(0.3, 0.6, 0.1), t(0.4, 0.1, 0.5)])?;
    rec.push(
        "path A -> B -> C",
        Observed::Values(vec![0.3, 0.6, 0.5]),
        Observed::Values(path.to_array().to_vec()),
        EXACT_TOL,
    );
    Ok(rec.finish("graph", "neutrosophic graph and cognitive map adjacency"))
}
