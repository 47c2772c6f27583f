//! Negation, intersection, union and implication for the intuitionistic
//! fuzzy, neutrosophic and two inconsistent-intuitionistic conventions.
//!
//! All four systems share one t-norm / t-conorm pair. What differs is how
//! the indeterminacy slot is aggregated:
//!
//! * NS treats `I` like `F`: conjunction takes the t-conorm, union the t-norm.
//! * IFS never reads `I`; it is recomputed as `1 - T - F`.
//! * IIFS (max on I) may overflow `T + I + F <= 1` and is then rescaled.
//! * IIFS (min on I) uses the t-norm on `I` in conjunction and cannot overflow.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{require_valid, FamilySpec};
use crate::transforms::LabeledSet;
use crate::value::{IntervalTriplet, Triplet, EPS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum TNorm {
    #[default]
    Min,
    Product,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum TConorm {
    #[default]
    Max,
    ProbSum,
}

impl TNorm {
    #[inline]
    pub fn apply(self, a: f64, b: f64) -> f64 {
        match self {
            TNorm::Min => a.min(b),
            TNorm::Product => a * b,
        }
    }
}

impl TConorm {
    #[inline]
    pub fn apply(self, a: f64, b: f64) -> f64 {
        match self {
            TConorm::Max => a.max(b),
            TConorm::ProbSum => a + b - a * b,
        }
    }
}

/// Fuzzy AND / OR used inside every operator. Defaults to min / max.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct NormPair {
    pub tnorm: TNorm,
    pub tconorm: TConorm,
}

impl NormPair {
    pub const MIN_MAX: NormPair = NormPair { tnorm: TNorm::Min, tconorm: TConorm::Max };
    pub const PRODUCT: NormPair = NormPair { tnorm: TNorm::Product, tconorm: TConorm::ProbSum };

    #[inline]
    pub fn and(&self, a: f64, b: f64) -> f64 {
        self.tnorm.apply(a, b)
    }

    #[inline]
    pub fn or(&self, a: f64, b: f64) -> f64 {
        self.tconorm.apply(a, b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SystemKind {
    #[serde(rename = "IFS")]
    Ifs,
    #[serde(rename = "NS")]
    Ns,
    /// min / max / max conjunction with overflow rescaling.
    #[serde(rename = "IIFS_MaxI")]
    IifsMaxI,
    /// min / min / max conjunction, as used for picture fuzzy sets.
    #[serde(rename = "IIFS_MinI")]
    IifsMinI,
}

impl std::str::FromStr for SystemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "ifs" => Ok(SystemKind::Ifs),
            "ns" => Ok(SystemKind::Ns),
            "iifsmaxi" | "iifs" => Ok(SystemKind::IifsMaxI),
            "iifsmini" | "iifs2" => Ok(SystemKind::IifsMinI),
            _ => Err(Error::usage(format!("unknown operator system '{s}'"))),
        }
    }
}

/// Which triple the IIFS (max on I) conjunction rescales when its output
/// sum exceeds 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum OverflowReading {
    /// Divide the operator output `(T∧, I∨, F∨)` by its own sum.
    #[default]
    OperatorOutput,
    /// Divide `(T∧, I∧, F∨)` by the sum of the overflowing output, e.g.
    /// `(0.50, 0.11, 0.33) / (0.50 + 0.18 + 0.33)`.
    PrintedNumerator,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorSystem {
    pub kind: SystemKind,
    pub norms: NormPair,
    #[serde(default)]
    pub overflow: OverflowReading,
}

impl OperatorSystem {
    pub fn new(kind: SystemKind) -> Self {
        OperatorSystem { kind, norms: NormPair::MIN_MAX, overflow: OverflowReading::default() }
    }

    pub fn ns() -> Self {
        Self::new(SystemKind::Ns)
    }

    pub fn ifs() -> Self {
        Self::new(SystemKind::Ifs)
    }

    pub fn iifs_max_i() -> Self {
        Self::new(SystemKind::IifsMaxI)
    }

    pub fn iifs_min_i() -> Self {
        Self::new(SystemKind::IifsMinI)
    }

    pub fn with_norms(mut self, norms: NormPair) -> Self {
        self.norms = norms;
        self
    }

    pub fn with_overflow(mut self, overflow: OverflowReading) -> Self {
        self.overflow = overflow;
        self
    }

    /// The family operands must belong to.
    pub fn family(&self) -> FamilySpec {
        match self.kind {
            SystemKind::Ifs => FamilySpec::ifs(),
            SystemKind::Ns => FamilySpec::ns(),
            SystemKind::IifsMaxI | SystemKind::IifsMinI => FamilySpec::iifs(),
        }
    }
}

fn check(a: &Triplet, sys: &OperatorSystem) -> Result<()> {
    require_valid(*a, &sys.family())
}

/// IFS / IIFS: `(f, i, t)`. NS: `(f, 1 - i, t)`.
pub fn negate(a: &Triplet, sys: &OperatorSystem) -> Result<Triplet> {
    check(a, sys)?;
    let i = match sys.kind {
        SystemKind::Ns => 1.0 - a.i(),
        _ => a.i(),
    };
    Triplet::new(a.f(), i, a.t())
}

pub fn conjunct(a: &Triplet, b: &Triplet, sys: &OperatorSystem) -> Result<Triplet> {
    check(a, sys)?;
    check(b, sys)?;
    let n = &sys.norms;
    let t = n.and(a.t(), b.t());
    let f = n.or(a.f(), b.f());
    match sys.kind {
        SystemKind::Ns => Triplet::from_computed(t, n.or(a.i(), b.i()), f),
        SystemKind::Ifs => Triplet::from_computed(t, (1.0 - t - f).max(0.0), f),
        SystemKind::IifsMinI => Triplet::from_computed(t, n.and(a.i(), b.i()), f),
        SystemKind::IifsMaxI => {
            let i = n.or(a.i(), b.i());
            let sum = t + i + f;
            if sum <= 1.0 + EPS {
                return Triplet::from_computed(t, i, f);
            }
            let numerator_i = match sys.overflow {
                OverflowReading::OperatorOutput => i,
                OverflowReading::PrintedNumerator => n.and(a.i(), b.i()),
            };
            Triplet::from_computed(t / sum, numerator_i / sum, f / sum)
        }
    }
}

pub fn disjunct(a: &Triplet, b: &Triplet, sys: &OperatorSystem) -> Result<Triplet> {
    check(a, sys)?;
    check(b, sys)?;
    let n = &sys.norms;
    let t = n.or(a.t(), b.t());
    let f = n.and(a.f(), b.f());
    match sys.kind {
        SystemKind::Ifs => Triplet::from_computed(t, (1.0 - t - f).max(0.0), f),
        _ => Triplet::from_computed(t, n.and(a.i(), b.i()), f),
    }
}

/// `¬a ∨ b` within the same system.
pub fn implicate(a: &Triplet, b: &Triplet, sys: &OperatorSystem) -> Result<Triplet> {
    disjunct(&negate(a, sys)?, b, sys)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SetOp {
    And,
    Or,
    Implies,
}

impl std::str::FromStr for SetOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "and" | "intersection" | "conjunct" => Ok(SetOp::And),
            "or" | "union" | "disjunct" => Ok(SetOp::Or),
            "implies" | "implication" | "implicate" => Ok(SetOp::Implies),
            _ => Err(Error::usage(format!("unknown set operation '{s}'"))),
        }
    }
}

pub fn apply(op: SetOp, a: &Triplet, b: &Triplet, sys: &OperatorSystem) -> Result<Triplet> {
    match op {
        SetOp::And => conjunct(a, b, sys),
        SetOp::Or => disjunct(a, b, sys),
        SetOp::Implies => implicate(a, b, sys),
    }
}

/// Elementwise binary operation over two sets on the same universe.
pub fn setwise(a: &LabeledSet, b: &LabeledSet, op: SetOp, sys: &OperatorSystem) -> Result<LabeledSet> {
    if a.universe() != b.universe() {
        return Err(Error::usage(format!(
            "universe mismatch: {:?} vs {:?}",
            a.universe(),
            b.universe()
        )));
    }
    let components = a
        .components()
        .iter()
        .zip(b.components())
        .map(|(x, y)| apply(op, x, y, sys))
        .collect::<Result<Vec<_>>>()?;
    LabeledSet::new(a.universe().to_vec(), components, sys.family())
}

/// Elementwise negation of a set.
pub fn negate_set(a: &LabeledSet, sys: &OperatorSystem) -> Result<LabeledSet> {
    let components = a
        .components()
        .iter()
        .map(|x| negate(x, sys))
        .collect::<Result<Vec<_>>>()?;
    LabeledSet::new(a.universe().to_vec(), components, sys.family())
}

fn check_interval_ns(a: &IntervalTriplet) -> Result<()> {
    require_valid(*a, &FamilySpec::ns())
}

/// Interval NS negation: `(F, 1 - I, T)` with `1 - [lo, hi] = [1 - hi, 1 - lo]`.
pub fn ns_negate_interval(a: &IntervalTriplet) -> Result<IntervalTriplet> {
    check_interval_ns(a)?;
    Ok(IntervalTriplet::new(a.f, a.i.complement(), a.t))
}

/// Interval NS conjunction; the norms are monotone so they act endpoint-wise.
pub fn ns_conjunct_interval(a: &IntervalTriplet, b: &IntervalTriplet, norms: &NormPair) -> Result<IntervalTriplet> {
    check_interval_ns(a)?;
    check_interval_ns(b)?;
    Ok(IntervalTriplet::new(
        a.t.zip_with(&b.t, |x, y| norms.and(x, y)),
        a.i.zip_with(&b.i, |x, y| norms.or(x, y)),
        a.f.zip_with(&b.f, |x, y| norms.or(x, y)),
    ))
}

pub fn ns_disjunct_interval(a: &IntervalTriplet, b: &IntervalTriplet, norms: &NormPair) -> Result<IntervalTriplet> {
    check_interval_ns(a)?;
    check_interval_ns(b)?;
    Ok(IntervalTriplet::new(
        a.t.zip_with(&b.t, |x, y| norms.or(x, y)),
        a.i.zip_with(&b.i, |x, y| norms.and(x, y)),
        a.f.zip_with(&b.f, |x, y| norms.and(x, y)),
    ))
}
