//! Set families as validity predicates over components.
//!
//! Each family is a bound on a (powered) sum of components:
//!
//! | family | arity   | constraint                     |
//! |--------|---------|--------------------------------|
//! | FS     | pair    | `T <= 1` (F is ignored)        |
//! | IFS    | pair    | `T + F <= 1`, `I = 1 - T - F`  |
//! | IIFS   | triplet | `T + I + F <= 1`               |
//! | NS     | triplet | `T + I + F <= 3`               |
//! | PyFS   | pair    | `T^2 + F^2 <= 1`               |
//! | QROFS  | pair    | `T^q + F^q <= 1`, `q >= 1`     |
//! | SFS    | triplet | `T^2 + I^2 + F^2 <= 1`         |
//! | NHSFS  | triplet | `T^n + I^n + F^n <= 1`, `n>=1` |
//! | SNS    | triplet | `T^2 + I^2 + F^2 <= 3`, components in `[0, sqrt 3]` |
//! | NHSNS  | triplet | `T^n + I^n + F^n <= 3`, components in `[0, 3^(1/n)]` |
//!
//! Interval-valued components are checked through their suprema.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use statrs::function::gamma::gamma;

use crate::error::{Error, Result};
use crate::value::{IntervalPair, IntervalTriplet, Pair, Triplet, UnitValue, EPS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    #[serde(rename = "FS")]
    Fs,
    #[serde(rename = "IFS")]
    Ifs,
    #[serde(rename = "IIFS")]
    Iifs,
    #[serde(rename = "NS")]
    Ns,
    #[serde(rename = "PyFS")]
    PyFs,
    #[serde(rename = "QROFS")]
    Qrofs,
    #[serde(rename = "SFS")]
    Sfs,
    #[serde(rename = "NHSFS")]
    Nhsfs,
    #[serde(rename = "SNS")]
    Sns,
    #[serde(rename = "NHSNS")]
    Nhsns,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 10] = [
        FamilyKind::Fs,
        FamilyKind::Ifs,
        FamilyKind::Iifs,
        FamilyKind::Ns,
        FamilyKind::PyFs,
        FamilyKind::Qrofs,
        FamilyKind::Sfs,
        FamilyKind::Nhsfs,
        FamilyKind::Sns,
        FamilyKind::Nhsns,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Fs => "FS",
            FamilyKind::Ifs => "IFS",
            FamilyKind::Iifs => "IIFS",
            FamilyKind::Ns => "NS",
            FamilyKind::PyFs => "PyFS",
            FamilyKind::Qrofs => "QROFS",
            FamilyKind::Sfs => "SFS",
            FamilyKind::Nhsfs => "NHSFS",
            FamilyKind::Sns => "SNS",
            FamilyKind::Nhsns => "NHSNS",
        }
    }

    /// Families whose elements carry only `(T, F)`.
    pub fn is_pair(self) -> bool {
        matches!(
            self,
            FamilyKind::Fs | FamilyKind::Ifs | FamilyKind::PyFs | FamilyKind::Qrofs
        )
    }

    pub fn takes_exponent(self) -> bool {
        matches!(self, FamilyKind::Qrofs | FamilyKind::Nhsfs | FamilyKind::Nhsns)
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_uppercase();
        Ok(match norm.as_str() {
            "FS" => FamilyKind::Fs,
            "IFS" => FamilyKind::Ifs,
            "IIFS" | "PFS" | "TFS" | "PICTURE" => FamilyKind::Iifs,
            "NS" => FamilyKind::Ns,
            "PYFS" | "AIFS2" => FamilyKind::PyFs,
            "QROFS" => FamilyKind::Qrofs,
            "SFS" => FamilyKind::Sfs,
            "NHSFS" => FamilyKind::Nhsfs,
            "SNS" => FamilyKind::Sns,
            "NHSNS" => FamilyKind::Nhsns,
            _ => return Err(Error::usage(format!("unknown family '{s}'"))),
        })
    }
}

/// A family plus its exponent (`q` for QROFS, `n` for NHSFS / NHSNS).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawFamilySpec", into = "RawFamilySpec")]
pub struct FamilySpec {
    kind: FamilyKind,
    exponent: f64,
}

#[derive(Serialize, Deserialize)]
struct RawFamilySpec {
    kind: FamilyKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    exponent: Option<f64>,
}

impl TryFrom<RawFamilySpec> for FamilySpec {
    type Error = Error;

    fn try_from(raw: RawFamilySpec) -> Result<Self> {
        match raw.exponent {
            Some(e) => FamilySpec::with_exponent(raw.kind, e),
            None => FamilySpec::new(raw.kind),
        }
    }
}

impl From<FamilySpec> for RawFamilySpec {
    fn from(spec: FamilySpec) -> Self {
        RawFamilySpec {
            kind: spec.kind,
            exponent: spec.kind.takes_exponent().then_some(spec.exponent),
        }
    }
}

impl FamilySpec {
    /// A family without a free exponent. QROFS / NHSFS / NHSNS default to 2.
    pub fn new(kind: FamilyKind) -> Result<Self> {
        Ok(FamilySpec { kind, exponent: kind_default_power(kind) })
    }

    pub fn with_exponent(kind: FamilyKind, exponent: f64) -> Result<Self> {
        if !kind.takes_exponent() {
            return Ok(FamilySpec { kind, exponent: kind_default_power(kind) });
        }
        if !(exponent.is_finite() && exponent >= 1.0) {
            return Err(Error::usage(format!(
                "{kind} exponent must be a real >= 1, got {exponent}"
            )));
        }
        Ok(FamilySpec { kind, exponent })
    }

    pub fn ns() -> Self {
        FamilySpec { kind: FamilyKind::Ns, exponent: 1.0 }
    }

    pub fn ifs() -> Self {
        FamilySpec { kind: FamilyKind::Ifs, exponent: 1.0 }
    }

    pub fn iifs() -> Self {
        FamilySpec { kind: FamilyKind::Iifs, exponent: 1.0 }
    }

    pub fn pyfs() -> Self {
        FamilySpec { kind: FamilyKind::PyFs, exponent: 2.0 }
    }

    pub fn sfs() -> Self {
        FamilySpec { kind: FamilyKind::Sfs, exponent: 2.0 }
    }

    pub fn qrofs(q: f64) -> Result<Self> {
        FamilySpec::with_exponent(FamilyKind::Qrofs, q)
    }

    pub fn nhsfs(n: f64) -> Result<Self> {
        FamilySpec::with_exponent(FamilyKind::Nhsfs, n)
    }

    pub fn nhsns(n: f64) -> Result<Self> {
        FamilySpec::with_exponent(FamilyKind::Nhsns, n)
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    /// Power applied to each component inside the constraint sum.
    pub fn power(&self) -> f64 {
        self.exponent
    }

    /// Right-hand side of the constraint.
    pub fn bound(&self) -> f64 {
        match self.kind {
            FamilyKind::Ns | FamilyKind::Sns | FamilyKind::Nhsns => 3.0,
            _ => 1.0,
        }
    }

    /// Largest admissible single component.
    pub fn component_max(&self) -> f64 {
        match self.kind {
            FamilyKind::Sns => 3f64.sqrt(),
            FamilyKind::Nhsns => 3f64.powf(1.0 / self.exponent),
            _ => 1.0,
        }
    }
}

fn kind_default_power(kind: FamilyKind) -> f64 {
    match kind {
        FamilyKind::PyFs
        | FamilyKind::Sfs
        | FamilyKind::Sns
        | FamilyKind::Qrofs
        | FamilyKind::Nhsfs
        | FamilyKind::Nhsns => 2.0,
        _ => 1.0,
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kind.takes_exponent() {
            write!(f, "{}(exponent={})", self.kind, self.exponent)
        } else {
            write!(f, "{}", self.kind)
        }
    }
}

/// Anything `validate` accepts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Components {
    Pair(Pair),
    Triplet(Triplet),
    IntervalPair(IntervalPair),
    IntervalTriplet(IntervalTriplet),
    /// Raw `(T, I, F)` for SNS / NHSNS whose components may exceed 1.
    Extended([f64; 3]),
}

impl From<Pair> for Components {
    fn from(p: Pair) -> Self {
        Components::Pair(p)
    }
}

impl From<Triplet> for Components {
    fn from(t: Triplet) -> Self {
        Components::Triplet(t)
    }
}

impl From<IntervalPair> for Components {
    fn from(p: IntervalPair) -> Self {
        Components::IntervalPair(p)
    }
}

impl From<IntervalTriplet> for Components {
    fn from(t: IntervalTriplet) -> Self {
        Components::IntervalTriplet(t)
    }
}

impl Components {
    /// Builds components from a plain slice: 2 values make a pair, 3 a triplet.
    pub fn from_slice(values: &[f64]) -> Result<Self> {
        match *values {
            [t, f] => Ok(Components::Pair(Pair::new(t, f)?)),
            [t, i, f] => Ok(Components::Triplet(Triplet::new(t, i, f)?)),
            _ => Err(Error::usage(format!(
                "expected 2 or 3 components, got {}",
                values.len()
            ))),
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            Components::Pair(_) | Components::IntervalPair(_) => 2,
            _ => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    /// Evaluated left-hand side, e.g. `T^2 + I^2 + F^2`.
    pub constraint_value: f64,
    pub bound: f64,
    pub diagnostics: String,
}

impl ValidationReport {
    pub(crate) fn from_sum(label: &str, value: f64, bound: f64) -> Self {
        let valid = value <= bound + EPS;
        let rel = if valid { "<=" } else { ">" };
        ValidationReport {
            valid,
            constraint_value: value,
            bound,
            diagnostics: format!("{label} = {value} {rel} {bound}"),
        }
    }
}

enum Shape {
    Pair([f64; 2]),
    Triplet([f64; 3]),
}

fn shape_for(components: &Components, family: &FamilySpec) -> Result<Shape> {
    let kind = family.kind;
    let mismatch = || {
        let want = if kind.is_pair() { "a (T, F) pair" } else { "a (T, I, F) triplet" };
        Error::usage(format!(
            "{kind} expects {want}, got {} components",
            components.arity()
        ))
    };
    match components {
        Components::Pair(p) if kind.is_pair() => Ok(Shape::Pair([p.t(), p.f()])),
        Components::IntervalPair(p) if kind.is_pair() => {
            Ok(Shape::Pair([p.t.sup(), p.f.sup()]))
        }
        Components::Triplet(t) if !kind.is_pair() || kind == FamilyKind::Ifs => {
            Ok(Shape::Triplet(t.to_array()))
        }
        Components::IntervalTriplet(t) if !kind.is_pair() || kind == FamilyKind::Ifs => {
            Ok(Shape::Triplet(t.sups().to_array()))
        }
        Components::Extended(v) if matches!(kind, FamilyKind::Sns | FamilyKind::Nhsns) => {
            let hi = family.component_max();
            for &x in v {
                if !(0.0..=hi + EPS).contains(&x) {
                    return Err(Error::OutOfRange { value: x, lo: 0.0, hi });
                }
            }
            Ok(Shape::Triplet(*v))
        }
        Components::Extended(_) => Err(Error::usage(format!(
            "extended-range components are only meaningful for SNS / NHSNS, not {kind}"
        ))),
        _ => Err(mismatch()),
    }
}

fn power_sum(values: &[f64], p: f64) -> f64 {
    if p == 1.0 {
        values.iter().sum()
    } else if p == 2.0 {
        values.iter().map(|v| v * v).sum()
    } else {
        values.iter().map(|v| v.powf(p)).sum()
    }
}

fn power_label(kind: FamilyKind, p: f64, triplet: bool) -> String {
    let comps: &[&str] = if triplet { &["T", "I", "F"] } else { &["T", "F"] };
    if kind == FamilyKind::Fs {
        return "T".to_string();
    }
    comps
        .iter()
        .map(|c| if p == 1.0 { c.to_string() } else { format!("{c}^{p}") })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Evaluates the family constraint on `components`.
///
/// IFS accepts a triplet only when its indeterminacy equals `1 - T - F`
/// within [`EPS`], so a triplet summing to 1 is valid both as IFS and NS.
pub fn validate(components: impl Into<Components>, family: &FamilySpec) -> Result<ValidationReport> {
    let components = components.into();
    let kind = family.kind;
    let p = family.power();
    let report = match shape_for(&components, family)? {
        Shape::Pair([t, f]) => {
            let value = if kind == FamilyKind::Fs { t } else { power_sum(&[t, f], p) };
            ValidationReport::from_sum(&power_label(kind, p, false), value, family.bound())
        }
        Shape::Triplet([t, i, f]) if kind == FamilyKind::Ifs => {
            let mut report = ValidationReport::from_sum("T + F", t + f, 1.0);
            let derived = 1.0 - t - f;
            if (i - derived).abs() > EPS {
                report.valid = false;
                report.diagnostics = format!(
                    "{}; indeterminacy {i} differs from derived 1 - T - F = {derived}",
                    report.diagnostics
                );
            }
            report
        }
        Shape::Triplet(v) => {
            ValidationReport::from_sum(&power_label(kind, p, true), power_sum(&v, p), family.bound())
        }
    };
    Ok(report)
}

pub(crate) fn require_valid(components: impl Into<Components>, family: &FamilySpec) -> Result<()> {
    let report = validate(components, family)?;
    if report.valid {
        Ok(())
    } else {
        Err(Error::Constraint {
            family: family.to_string(),
            value: report.constraint_value,
            bound: report.bound,
        })
    }
}

/// Residual `(1 - T^p - F^p)^(1/p)` clamped against rounding below zero.
fn residual_root(values: &[f64], p: f64) -> Result<UnitValue> {
    let rest = (1.0 - power_sum(values, p)).max(0.0);
    let root = if p == 1.0 {
        rest
    } else if p == 2.0 {
        rest.sqrt()
    } else {
        rest.powf(1.0 / p)
    };
    UnitValue::from_computed(root)
}

/// Hesitancy degree of a pair: IFS `1 - T - F`, PyFS `sqrt(1 - T^2 - F^2)`,
/// QROFS `(1 - T^q - F^q)^(1/q)`.
pub fn hesitancy(pair: &Pair, family: &FamilySpec) -> Result<UnitValue> {
    match family.kind {
        FamilyKind::Ifs | FamilyKind::PyFs | FamilyKind::Qrofs => {
            require_valid(*pair, family)?;
            residual_root(&[pair.t(), pair.f()], family.power())
        }
        other => Err(Error::usage(format!("hesitancy is not defined for {other}"))),
    }
}

/// Refusal degree of a triplet: IIFS `1 - T - I - F`, SFS
/// `sqrt(1 - T^2 - I^2 - F^2)`, NHSFS `(1 - T^n - I^n - F^n)^(1/n)`.
///
/// The NHSFS form is printed in the literature with a square root over the
/// n-th power sum; the n-th root is used here so that n = 2 reproduces SFS
/// and the residual stays in the same units as the components.
pub fn refusal(triplet: &Triplet, family: &FamilySpec) -> Result<UnitValue> {
    match family.kind {
        FamilyKind::Iifs | FamilyKind::Sfs | FamilyKind::Nhsfs => {
            require_valid(*triplet, family)?;
            residual_root(&triplet.to_array(), family.power())
        }
        other => Err(Error::usage(format!("refusal is not defined for {other}"))),
    }
}

/// Maps components of a narrower family onto an NS triplet.
///
/// * PyFS `(T, F)` becomes `(T^2, 1 - T^2 - F^2, F^2)`, summing to 1.
/// * QROFS `(T, F)` becomes `(T^q, 1 - T^q - F^q, F^q)`.
/// * SFS / NHSFS `(T, I, F)` become `(T^n, I^n, F^n)`.
/// * IFS pairs gain their derived indeterminacy; IIFS / NS pass through.
pub fn embed_into_ns(components: impl Into<Components>, from: &FamilySpec) -> Result<Triplet> {
    let components = components.into();
    require_valid(components, from)?;
    let p = from.power();
    let pw = |x: f64| if p == 2.0 { x * x } else { x.powf(p) };
    match (from.kind, shape_for(&components, from)?) {
        (FamilyKind::PyFs | FamilyKind::Qrofs | FamilyKind::Ifs, Shape::Pair([t, f])) => {
            let (tp, fp) = (pw(t), pw(f));
            Triplet::from_computed(tp, (1.0 - tp - fp).max(0.0), fp)
        }
        (FamilyKind::Sfs | FamilyKind::Nhsfs, Shape::Triplet([t, i, f])) => {
            Triplet::from_computed(pw(t), pw(i), pw(f))
        }
        (FamilyKind::Iifs | FamilyKind::Ns | FamilyKind::Ifs, Shape::Triplet([t, i, f])) => {
            Triplet::new(t, i, f)
        }
        (kind, _) => Err(Error::usage(format!("no embedding into NS is defined for {kind}"))),
    }
}

/// Strict-inclusion claims witnessed by [`find_counterexample`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum InclusionClaim {
    NsNotSfs,
    NsNotQrofs { q: f64 },
    NsNotNhsfs { n: f64 },
    NsNotIifs,
}

impl InclusionClaim {
    pub fn target(&self) -> Result<FamilySpec> {
        match *self {
            InclusionClaim::NsNotSfs => Ok(FamilySpec::sfs()),
            InclusionClaim::NsNotQrofs { q } => FamilySpec::qrofs(q),
            InclusionClaim::NsNotNhsfs { n } => FamilySpec::nhsfs(n),
            InclusionClaim::NsNotIifs => Ok(FamilySpec::iifs()),
        }
    }

    /// Validates the witness under NS and under the target family.
    pub fn check(&self) -> Result<(ValidationReport, ValidationReport)> {
        let target = self.target()?;
        let w = find_counterexample(*self);
        let ns = validate(w, &FamilySpec::ns())?;
        let tgt = if target.kind().is_pair() {
            validate(w.to_pair(), &target)?
        } else {
            validate(w, &target)?
        };
        Ok((ns, tgt))
    }
}

/// Canonical witnesses (fixed constants):
///
/// * `NsNotSfs`: `(0.9, 0.4, 0.5)`, squares sum to 1.22.
/// * `NsNotQrofs`: `(1, 0.5, 0.5)`, `1 + 0.5^q > 1` for every finite q.
/// * `NsNotNhsfs`: `(1, 0.5, 0.5)`, same argument with `T = 1`, `I > 0`.
/// * `NsNotIifs`: the paradox `(1, 1, 1)`.
///
/// For QROFS the target check uses `(T, F)` of the witness.
pub fn find_counterexample(claim: InclusionClaim) -> Triplet {
    let (t, i, f) = match claim {
        InclusionClaim::NsNotSfs => (0.9, 0.4, 0.5),
        InclusionClaim::NsNotQrofs { .. } | InclusionClaim::NsNotNhsfs { .. } => (1.0, 0.5, 0.5),
        InclusionClaim::NsNotIifs => (1.0, 1.0, 1.0),
    };
    Triplet::new(t, i, f).expect("witness constants are in [0, 1]")
}

/// Region of the unit `(t, i, f)` cube relative to the plane `t + i + f = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CubeRegion {
    /// Sum below 1: incomplete information.
    Incomplete,
    /// Sum equal to 1: the intuitionistic triangle.
    Complete,
    /// Sum above 1: paraconsistent information.
    Paraconsistent,
}

pub const DEFAULT_CUBE_TOL: f64 = 1e-9;

pub fn classify_cube_region(triplet: &Triplet, tol: f64) -> CubeRegion {
    let s = triplet.sum();
    if s < 1.0 - tol {
        CubeRegion::Incomplete
    } else if s > 1.0 + tol {
        CubeRegion::Paraconsistent
    } else {
        CubeRegion::Complete
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VolumeEstimate {
    pub family: FamilySpec,
    pub samples: u64,
    pub seed: u64,
    pub estimate: f64,
    pub std_error: f64,
    /// Closed-form fraction of the sampling box, when one exists.
    pub analytic: Option<f64>,
}

impl VolumeEstimate {
    /// `(estimate - analytic) / std_error`; `None` without a closed form
    /// or when the standard error vanishes.
    pub fn z_score(&self) -> Option<f64> {
        let a = self.analytic?;
        (self.std_error > 0.0).then(|| (self.estimate - a) / self.std_error)
    }
}

/// Fraction of the sampling box `[0, c]^d` admitted by the family, where `d`
/// is the family's arity and `c` its component range. Positive-orthant
/// superball volume `Γ(1+1/p)^d / Γ(1+d/p)`, scale-free.
pub fn analytic_volume(family: &FamilySpec) -> f64 {
    match family.kind {
        FamilyKind::Ns | FamilyKind::Fs => 1.0,
        kind => {
            let p = family.power();
            let d = if kind.is_pair() { 2.0 } else { 3.0 };
            gamma(1.0 + 1.0 / p).powf(d) / gamma(1.0 + d / p)
        }
    }
}

/// Monte-Carlo estimate of the fraction of the sampling box satisfying the
/// family constraint. Pair families sample the unit square, triplet families
/// the cube `[0, component_max]^3`. Sequential ChaCha8 stream, so the result
/// depends only on `(family, samples, seed)`.
pub fn estimate_family_volume(family: &FamilySpec, samples: u64, seed: u64) -> Result<VolumeEstimate> {
    if samples == 0 {
        return Err(Error::usage("samples must be >= 1"));
    }
    let kind = family.kind;
    let p = family.power();
    let bound = family.bound();
    let side = family.component_max();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits: u64 = 0;
    for _ in 0..samples {
        let inside = if kind.is_pair() {
            let t: f64 = rng.random();
            let f: f64 = rng.random();
            if kind == FamilyKind::Fs {
                true
            } else {
                power_sum(&[t, f], p) <= bound
            }
        } else {
            let v: [f64; 3] = [
                side * rng.random::<f64>(),
                side * rng.random::<f64>(),
                side * rng.random::<f64>(),
            ];
            power_sum(&v, p) <= bound
        };
        hits += inside as u64;
    }
    let n = samples as f64;
    let est = hits as f64 / n;
    Ok(VolumeEstimate {
        family: *family,
        samples,
        seed,
        estimate: est,
        std_error: (est * (1.0 - est) / n).sqrt(),
        analytic: Some(analytic_volume(family)),
    })
}
