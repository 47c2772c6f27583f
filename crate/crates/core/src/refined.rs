//! Refined families: `T`, `I` and `F` split into sub-degrees
//! `T1..Tp; I1..Ir; F1..Fs`, with a family-specific bound on their
//! (powered) sum.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::ValidationReport;
use crate::value::{IntervalValue, Triplet, UnitValue, EPS};

/// A sub-degree: closed interval `[lo, hi]` with `0 <= lo <= hi`.
///
/// The upper range depends on the family (1 for most, `m^(1/n)` for
/// refined n-hyperspherical neutrosophic), so it is checked at validation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SubDegree {
    lo: f64,
    hi: f64,
}

impl SubDegree {
    pub fn point(v: f64) -> Result<Self> {
        SubDegree::interval(v, v)
    }

    pub fn interval(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) || lo < 0.0 || lo > hi {
            return Err(Error::usage(format!("invalid sub-degree [{lo}, {hi}]")));
        }
        Ok(SubDegree { lo, hi })
    }

    pub fn inf(&self) -> f64 {
        self.lo
    }

    pub fn sup(&self) -> f64 {
        self.hi
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }
}

impl From<UnitValue> for SubDegree {
    fn from(v: UnitValue) -> Self {
        SubDegree { lo: v.get(), hi: v.get() }
    }
}

impl From<IntervalValue> for SubDegree {
    fn from(v: IntervalValue) -> Self {
        SubDegree { lo: v.lo(), hi: v.hi() }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct RefinedComponents {
    pub ts: Vec<SubDegree>,
    pub is: Vec<SubDegree>,
    pub fs: Vec<SubDegree>,
}

impl RefinedComponents {
    /// Scalar sub-degrees.
    pub fn scalar(ts: &[f64], is: &[f64], fs: &[f64]) -> Result<Self> {
        let conv = |v: &[f64]| v.iter().map(|&x| SubDegree::point(x)).collect::<Result<Vec<_>>>();
        Ok(RefinedComponents { ts: conv(ts)?, is: conv(is)?, fs: conv(fs)? })
    }

    /// `(p, r, s)`.
    pub fn arities(&self) -> (usize, usize, usize) {
        (self.ts.len(), self.is.len(), self.fs.len())
    }

    fn all(&self) -> impl Iterator<Item = &SubDegree> {
        self.ts.iter().chain(&self.is).chain(&self.fs)
    }

    pub fn is_scalar(&self) -> bool {
        self.all().all(SubDegree::is_degenerate)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RefinedKind {
    #[serde(rename = "RFS")]
    Rfs,
    #[serde(rename = "RIFS")]
    Rifs,
    /// Also refined picture / ternary fuzzy.
    #[serde(rename = "RIIFS")]
    Riifs,
    #[serde(rename = "RNS")]
    Rns,
    #[serde(rename = "RPyFS")]
    RPyFs,
    #[serde(rename = "RSFS")]
    Rsfs,
    #[serde(rename = "RQROFS")]
    Rqrofs,
    #[serde(rename = "RNHSNS")]
    Rnhsns,
}

impl RefinedKind {
    pub fn name(self) -> &'static str {
        match self {
            RefinedKind::Rfs => "RFS",
            RefinedKind::Rifs => "RIFS",
            RefinedKind::Riifs => "RIIFS",
            RefinedKind::Rns => "RNS",
            RefinedKind::RPyFs => "RPyFS",
            RefinedKind::Rsfs => "RSFS",
            RefinedKind::Rqrofs => "RQROFS",
            RefinedKind::Rnhsns => "RNHSNS",
        }
    }

    pub fn takes_exponent(self) -> bool {
        matches!(self, RefinedKind::Rqrofs | RefinedKind::Rnhsns)
    }

    /// Families without an indeterminacy slot (`r = 0`).
    fn pair_like(self) -> bool {
        matches!(self, RefinedKind::Rifs | RefinedKind::RPyFs | RefinedKind::Rqrofs)
    }

    /// Smallest `p + r + s` for a proper refinement.
    fn refinement_threshold(self) -> usize {
        match self {
            RefinedKind::Rfs => 2,
            RefinedKind::Rifs | RefinedKind::RPyFs | RefinedKind::Rqrofs => 3,
            _ => 4,
        }
    }
}

impl fmt::Display for RefinedKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RefinedKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_uppercase();
        Ok(match norm.as_str() {
            "RFS" => RefinedKind::Rfs,
            "RIFS" => RefinedKind::Rifs,
            "RIIFS" | "RPFS" | "RTFS" => RefinedKind::Riifs,
            "RNS" => RefinedKind::Rns,
            "RPYFS" => RefinedKind::RPyFs,
            "RSFS" => RefinedKind::Rsfs,
            "RQROFS" => RefinedKind::Rqrofs,
            "RNHSNS" => RefinedKind::Rnhsns,
            _ => return Err(Error::usage(format!("unknown refined family '{s}'"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RefinedFamilySpec {
    kind: RefinedKind,
    exponent: f64,
}

impl RefinedFamilySpec {
    pub fn new(kind: RefinedKind) -> Self {
        let exponent = match kind {
            RefinedKind::RPyFs | RefinedKind::Rsfs | RefinedKind::Rqrofs | RefinedKind::Rnhsns => 2.0,
            _ => 1.0,
        };
        RefinedFamilySpec { kind, exponent }
    }

    pub fn with_exponent(kind: RefinedKind, exponent: f64) -> Result<Self> {
        if !kind.takes_exponent() {
            return Ok(Self::new(kind));
        }
        if !(exponent.is_finite() && exponent >= 1.0) {
            return Err(Error::usage(format!("{kind} exponent must be >= 1, got {exponent}")));
        }
        Ok(RefinedFamilySpec { kind, exponent })
    }

    pub fn kind(&self) -> RefinedKind {
        self.kind
    }

    pub fn power(&self) -> f64 {
        self.exponent
    }
}

impl fmt::Display for RefinedFamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kind.takes_exponent() {
            write!(f, "{}(exponent={})", self.kind, self.exponent)
        } else {
            write!(f, "{}", self.kind)
        }
    }
}

fn check_arity(c: &RefinedComponents, fam: &RefinedFamilySpec) -> Result<()> {
    let (p, r, s) = c.arities();
    let kind = fam.kind;
    let ok = match kind {
        RefinedKind::Rfs => p >= 1 && r == 0 && s == 0,
        k if k.pair_like() => p >= 1 && r == 0 && s >= 1,
        _ => p >= 1 && r >= 1 && s >= 1,
    };
    if !ok {
        return Err(Error::usage(format!(
            "{kind} does not accept arities (p, r, s) = ({p}, {r}, {s})"
        )));
    }
    Ok(())
}

/// `(bound, component range)` for the family at these arities.
fn bound_and_range(c: &RefinedComponents, fam: &RefinedFamilySpec) -> (f64, f64) {
    let (p, r, s) = c.arities();
    let m = (p + r + s) as f64;
    match fam.kind {
        RefinedKind::Rns => (m, 1.0),
        RefinedKind::Rnhsns => (m, m.powf(1.0 / fam.exponent)),
        _ => (1.0, 1.0),
    }
}

fn pow(x: f64, p: f64) -> f64 {
    if p == 1.0 {
        x
    } else if p == 2.0 {
        x * x
    } else {
        x.powf(p)
    }
}

fn power_sum(c: &RefinedComponents, p: f64, pick: fn(&SubDegree) -> f64) -> f64 {
    c.all().map(|d| pow(pick(d), p)).sum()
}

/// Checks arity and evaluates the refined constraint on suprema.
///
/// Arities below the refinement threshold (e.g. `p = s = 1` for RPyFS) are
/// accepted as the degenerate, unrefined case and flagged in diagnostics.
pub fn validate_refined(c: &RefinedComponents, fam: &RefinedFamilySpec) -> Result<ValidationReport> {
    check_arity(c, fam)?;
    let (bound, range) = bound_and_range(c, fam);
    for d in c.all() {
        if d.sup() > range + EPS {
            return Err(Error::OutOfRange { value: d.sup(), lo: 0.0, hi: range });
        }
    }
    let p = fam.power();
    let label = if p == 1.0 { "sum of sub-degrees".to_string() } else { format!("sum of sub-degrees^{p}") };
    let mut report = ValidationReport::from_sum(&label, power_sum(c, p, SubDegree::sup), bound);
    let (pp, r, s) = c.arities();
    if pp + r + s < fam.kind.refinement_threshold() {
        report.diagnostics.push_str(&format!(
            "; degenerate refinement (p + r + s = {} < {}) coincides with the unrefined family",
            pp + r + s,
            fam.kind.refinement_threshold()
        ));
    }
    Ok(report)
}

fn require_valid_refined(c: &RefinedComponents, fam: &RefinedFamilySpec) -> Result<()> {
    let report = validate_refined(c, fam)?;
    if report.valid {
        Ok(())
    } else {
        Err(Error::Constraint {
            family: fam.to_string(),
            value: report.constraint_value,
            bound: report.bound,
        })
    }
}

fn root(x: f64, p: f64) -> f64 {
    let x = x.max(0.0);
    if p == 1.0 {
        x
    } else if p == 2.0 {
        x.sqrt()
    } else {
        x.powf(1.0 / p)
    }
}

/// RPyFS `sqrt(1 - ΣT_j^2 - ΣF_l^2)`; RQROFS `(1 - ΣT_j^q - ΣF_l^q)^(1/q)`.
pub fn refined_hesitancy(c: &RefinedComponents, fam: &RefinedFamilySpec) -> Result<UnitValue> {
    match fam.kind {
        RefinedKind::RPyFs | RefinedKind::Rqrofs => {
            require_valid_refined(c, fam)?;
            let p = fam.power();
            UnitValue::from_computed(root(1.0 - power_sum(c, p, SubDegree::sup), p))
        }
        other => Err(Error::usage(format!("refined hesitancy is not defined for {other}"))),
    }
}

/// RSFS `sqrt(1 - Σ squares)`; RIIFS `[1, 1] - ΣT - ΣI - ΣF`.
///
/// Interval inputs give an interval: the low end uses suprema, the high end
/// infima. Scalar inputs give a degenerate interval.
pub fn refined_refusal(c: &RefinedComponents, fam: &RefinedFamilySpec) -> Result<IntervalValue> {
    let p = match fam.kind {
        RefinedKind::Rsfs => 2.0,
        RefinedKind::Riifs => 1.0,
        other => return Err(Error::usage(format!("refined refusal is not defined for {other}"))),
    };
    require_valid_refined(c, fam)?;
    let lo = UnitValue::from_computed(root(1.0 - power_sum(c, p, SubDegree::sup), p))?;
    let hi = UnitValue::from_computed(root(1.0 - power_sum(c, p, SubDegree::inf), p))?;
    IntervalValue::new(lo.get(), hi.get())
}

/// Per-slot weights used by [`refine`]; each slot's weights sum to 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RefineWeights {
    pub t: Vec<f64>,
    pub i: Vec<f64>,
    pub f: Vec<f64>,
}

impl RefineWeights {
    pub fn equal(p: usize, r: usize, s: usize) -> Self {
        let eq = |n: usize| vec![1.0 / n as f64; n];
        RefineWeights { t: eq(p), i: eq(r), f: eq(s) }
    }
}

fn split(total: f64, weights: &[f64], slot: &str) -> Result<Vec<SubDegree>> {
    if weights.is_empty() {
        if total != 0.0 {
            return Err(Error::usage(format!(
                "cannot refine nonzero {slot} = {total} into zero sub-degrees"
            )));
        }
        return Ok(Vec::new());
    }
    if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
        return Err(Error::usage(format!("{slot} weights must be nonnegative: {weights:?}")));
    }
    let wsum: f64 = weights.iter().sum();
    if (wsum - 1.0).abs() > EPS {
        return Err(Error::usage(format!("{slot} weights sum to {wsum}, expected 1")));
    }
    let n = weights.len();
    let mut parts: Vec<f64> = weights[..n - 1].iter().map(|w| total * w).collect();
    let used: f64 = parts.iter().sum();
    // last share absorbs rounding so the parts add back up to `total`
    parts.push((total - used).max(0.0));
    parts.into_iter().map(SubDegree::point).collect()
}

/// Distributes each component of `t` across `(p, r, s)` sub-degrees.
/// `None` splits equally.
pub fn refine(t: &Triplet, arities: (usize, usize, usize), weights: Option<&RefineWeights>) -> Result<RefinedComponents> {
    let (p, r, s) = arities;
    let owned;
    let w = match weights {
        Some(w) => w,
        None => {
            owned = RefineWeights::equal(p, r, s);
            &owned
        }
    };
    if (w.t.len(), w.i.len(), w.f.len()) != arities {
        return Err(Error::usage(format!(
            "weights have shape ({}, {}, {}) but arities are ({p}, {r}, {s})",
            w.t.len(),
            w.i.len(),
            w.f.len()
        )));
    }
    Ok(RefinedComponents {
        ts: split(t.t(), &w.t, "T")?,
        is: split(t.i(), &w.i, "I")?,
        fs: split(t.f(), &w.f, "F")?,
    })
}

/// Sums each slot's sub-degrees (suprema for interval sub-degrees).
pub fn coarsen(c: &RefinedComponents) -> Result<Triplet> {
    let sum = |v: &[SubDegree]| v.iter().map(SubDegree::sup).sum::<f64>();
    Triplet::from_computed(sum(&c.ts), sum(&c.is), sum(&c.fs))
}
