//! Tri-partitions of a universe: neutrosophication of labeled areas,
//! threshold-based three-way and n-way decisions, and degrees outside
//! `[0, 1]` (over/under/off-sets).

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::value::{UnitValue, EPS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dependence {
    /// Fractions are shares of one whole and sum to 1.
    SumToOne,
    /// Independent fractions, sum up to 3.
    Free,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Partition3 {
    pub accept: UnitValue,
    pub noncommit: UnitValue,
    pub reject: UnitValue,
    pub dependence: Dependence,
}

impl Partition3 {
    pub fn new(accept: f64, noncommit: f64, reject: f64, dependence: Dependence) -> Result<Self> {
        let p = Partition3 {
            accept: UnitValue::new(accept)?,
            noncommit: UnitValue::new(noncommit)?,
            reject: UnitValue::new(reject)?,
            dependence,
        };
        if dependence == Dependence::SumToOne && (p.sum() - 1.0).abs() > EPS {
            return Err(Error::Constraint {
                family: "sum-to-one partition".to_string(),
                value: p.sum(),
                bound: 1.0,
            });
        }
        Ok(p)
    }

    pub fn sum(&self) -> f64 {
        self.accept.get() + self.noncommit.get() + self.reject.get()
    }

    pub fn to_array(&self) -> [f64; 3] {
        [self.accept.get(), self.noncommit.get(), self.reject.get()]
    }
}

impl fmt::Display for Partition3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.accept, self.noncommit, self.reject)
    }
}

/// Which area labels count as `A`, `neutA` and `antiA`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConceptMapping {
    pub a: Vec<String>,
    pub neut_a: Vec<String>,
    pub anti_a: Vec<String>,
}

impl ConceptMapping {
    pub fn new(a: &[&str], neut_a: &[&str], anti_a: &[&str]) -> Self {
        let v = |xs: &[&str]| xs.iter().map(|x| x.to_string()).collect();
        ConceptMapping { a: v(a), neut_a: v(neut_a), anti_a: v(anti_a) }
    }
}

/// Converts area sizes into `(A, neutA, antiA)` fractions of the total.
///
/// Tagged `SumToOne` when each area belongs to exactly one group, otherwise
/// `Free`.
pub fn neutrosophify(areas: &[(&str, f64)], mapping: &ConceptMapping) -> Result<Partition3> {
    let mut seen = HashSet::new();
    for &(label, size) in areas {
        if !(size.is_finite() && size >= 0.0) {
            return Err(Error::usage(format!("area '{label}' has invalid size {size}")));
        }
        if !seen.insert(label) {
            return Err(Error::usage(format!("duplicate area '{label}'")));
        }
    }
    for label in mapping.a.iter().chain(&mapping.neut_a).chain(&mapping.anti_a) {
        if !seen.contains(label.as_str()) {
            return Err(Error::usage(format!("mapping names unknown area '{label}'")));
        }
    }
    let total: f64 = areas.iter().map(|(_, s)| s).sum();
    if total <= 0.0 {
        return Err(Error::Degenerate("total area is zero".to_string()));
    }
    let share = |group: &[String]| {
        areas
            .iter()
            .filter(|(l, _)| group.iter().any(|g| g == l))
            .map(|(_, s)| s)
            .sum::<f64>()
            / total
    };
    let exact = areas.iter().all(|(l, _)| {
        [&mapping.a, &mapping.neut_a, &mapping.anti_a]
            .iter()
            .filter(|g| g.iter().any(|x| x == l))
            .count()
            == 1
    });
    let dependence = if exact { Dependence::SumToOne } else { Dependence::Free };
    let (a, n, r) = (share(&mapping.a), share(&mapping.neut_a), share(&mapping.anti_a));
    // shares of an exact cover add to 1 up to rounding
    Partition3::new(a.min(1.0), n.min(1.0), r.min(1.0), dependence)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Decision3 {
    Accept,
    Noncommit,
    Reject,
}

impl fmt::Display for Decision3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision3::Accept => "Accept",
            Decision3::Noncommit => "Noncommit",
            Decision3::Reject => "Reject",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThreeWayOutcome {
    pub labels: Vec<Decision3>,
    pub partition: Partition3,
}

fn check_scores(scores: &[f64]) -> Result<()> {
    if scores.is_empty() {
        return Err(Error::usage("no scores to partition"));
    }
    if let Some(s) = scores.iter().find(|s| s.is_nan()) {
        return Err(Error::usage(format!("score {s} is not a number")));
    }
    Ok(())
}

/// `score >= alpha` accepts, `score <= beta` rejects, anything between is
/// noncommitted.
pub fn three_ways(scores: &[f64], alpha: f64, beta: f64) -> Result<ThreeWayOutcome> {
    if !(alpha > beta) {
        return Err(Error::usage(format!("need alpha > beta, got alpha={alpha}, beta={beta}")));
    }
    check_scores(scores)?;
    let labels: Vec<Decision3> = scores
        .iter()
        .map(|&s| {
            if s >= alpha {
                Decision3::Accept
            } else if s <= beta {
                Decision3::Reject
            } else {
                Decision3::Noncommit
            }
        })
        .collect();
    let n = labels.len();
    let count = |d| labels.iter().filter(|&&l| l == d).count();
    let (a, nc, r) = (count(Decision3::Accept), count(Decision3::Noncommit), count(Decision3::Reject));
    let nf = n as f64;
    // reject share is the remainder so the fractions add to exactly 1
    let partition = Partition3 {
        accept: UnitValue::new(a as f64 / nf)?,
        noncommit: UnitValue::new(nc as f64 / nf)?,
        reject: UnitValue::new(if r == 0 { 0.0 } else { (1.0 - a as f64 / nf - nc as f64 / nf).max(0.0) })?,
        dependence: Dependence::SumToOne,
    };
    Ok(ThreeWayOutcome { labels, partition })
}

/// One graded band. Level 1 is the band furthest from the middle of the
/// score axis for accept and reject, and the band nearest to accept for
/// noncommit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Level {
    pub group: Decision3,
    pub level: usize,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.group, self.level)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartitionN {
    /// Index 0 is level 1.
    pub accept_levels: Vec<f64>,
    pub noncommit_levels: Vec<f64>,
    pub reject_levels: Vec<f64>,
}

impl PartitionN {
    pub fn arities(&self) -> (usize, usize, usize) {
        (self.accept_levels.len(), self.noncommit_levels.len(), self.reject_levels.len())
    }

    pub fn fraction(&self, level: Level) -> Option<f64> {
        let v = match level.group {
            Decision3::Accept => &self.accept_levels,
            Decision3::Noncommit => &self.noncommit_levels,
            Decision3::Reject => &self.reject_levels,
        };
        level.level.checked_sub(1).and_then(|k| v.get(k)).copied()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NWayOutcome {
    pub labels: Vec<Level>,
    pub partition: PartitionN,
}

/// Bands from low to high: `s` reject, `r` noncommit, `p` accept.
/// A score equal to a cut falls in the band above it.
pub fn n_ways(scores: &[f64], cuts: &[f64], arities: (usize, usize, usize)) -> Result<NWayOutcome> {
    let (p, r, s) = arities;
    let n = p + r + s;
    if p == 0 || r == 0 || s == 0 || n < 4 {
        return Err(Error::usage(format!(
            "n-way decision needs p, r, s >= 1 and p + r + s >= 4, got ({p}, {r}, {s})"
        )));
    }
    if cuts.len() != n - 1 {
        return Err(Error::usage(format!("expected {} cut points, got {}", n - 1, cuts.len())));
    }
    if cuts.iter().any(|c| !c.is_finite()) || cuts.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::usage(format!("cut points must be finite and strictly ascending: {cuts:?}")));
    }
    check_scores(scores)?;
    let band_level = |band: usize| {
        if band < s {
            Level { group: Decision3::Reject, level: band + 1 }
        } else if band < s + r {
            Level { group: Decision3::Noncommit, level: s + r - band }
        } else {
            Level { group: Decision3::Accept, level: n - band }
        }
    };
    let labels: Vec<Level> = scores
        .iter()
        .map(|&x| band_level(cuts.iter().filter(|&&c| c <= x).count()))
        .collect();
    let total = scores.len() as f64;
    let frac = |group, k: usize| {
        labels.iter().filter(|l| l.group == group && l.level == k).count() as f64 / total
    };
    let partition = PartitionN {
        accept_levels: (1..=p).map(|k| frac(Decision3::Accept, k)).collect(),
        noncommit_levels: (1..=r).map(|k| frac(Decision3::Noncommit, k)).collect(),
        reject_levels: (1..=s).map(|k| frac(Decision3::Reject, k)).collect(),
    };
    Ok(NWayOutcome { labels, partition })
}

/// `amount / norm`; may leave `[0, 1]`.
pub fn offset_degree(amount: f64, norm: f64) -> Result<f64> {
    if !(norm > 0.0 && norm.is_finite()) {
        return Err(Error::usage(format!("norm must be positive, got {norm}")));
    }
    if !amount.is_finite() {
        return Err(Error::usage(format!("amount must be finite, got {amount}")));
    }
    Ok(amount / norm)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OffsetBounds {
    under: f64,
    over: f64,
}

impl OffsetBounds {
    pub fn new(under: f64, over: f64) -> Result<Self> {
        if !(under <= 0.0 && over >= 1.0 && under.is_finite() && over.is_finite()) {
            return Err(Error::usage(format!("need under <= 0 <= 1 <= over, got ({under}, {over})")));
        }
        Ok(OffsetBounds { under, over })
    }

    pub fn under(&self) -> f64 {
        self.under
    }

    pub fn over(&self) -> f64 {
        self.over
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OffsetClass {
    /// All components in `[0, 1]`.
    Standard,
    /// Some component above 1, none below 0.
    Overset,
    /// Some component below 0, none above 1.
    Underset,
    /// Components on both sides.
    Offset,
}

impl fmt::Display for OffsetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OffsetReport {
    pub valid: bool,
    pub class: OffsetClass,
    pub diagnostics: String,
}

pub fn classify_offset(values: &[f64]) -> OffsetClass {
    let over = values.iter().any(|&v| v > 1.0);
    let under = values.iter().any(|&v| v < 0.0);
    match (over, under) {
        (false, false) => OffsetClass::Standard,
        (true, false) => OffsetClass::Overset,
        (false, true) => OffsetClass::Underset,
        (true, true) => OffsetClass::Offset,
    }
}

/// Checks each component against `[under, over]` and classifies it.
pub fn validate_offset(t: [f64; 3], bounds: &OffsetBounds) -> OffsetReport {
    let outside: Vec<String> = ["T", "I", "F"]
        .iter()
        .zip(t)
        .filter(|(_, v)| !(*v >= bounds.under && *v <= bounds.over))
        .map(|(n, v)| format!("{n} = {v}"))
        .collect();
    let class = classify_offset(&t);
    let diagnostics = if outside.is_empty() {
        format!("{class}; within [{}, {}]", bounds.under, bounds.over)
    } else {
        format!("{class}; outside [{}, {}]: {}", bounds.under, bounds.over, outside.join(", "))
    };
    OffsetReport { valid: outside.is_empty(), class, diagnostics }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neutrosophify_country() {
        let areas = [("cold", 30.0), ("medium", 20.0), ("hot", 50.0)];
        let m = ConceptMapping::new(&["cold"], &["medium"], &["hot"]);
        let p = neutrosophify(&areas, &m).unwrap();
        assert_eq!(p.to_array(), [0.3, 0.2, 0.5]);
        assert_eq!(p.dependence, Dependence::SumToOne);

        let p = neutrosophify(&[("all", 7.0)], &ConceptMapping::new(&["all"], &[], &[])).unwrap();
        assert_eq!(p.to_array(), [1.0, 0.0, 0.0]);

        let p = neutrosophify(&[("a", 1.0), ("b", 1.0), ("c", 1.0)], &ConceptMapping::new(&["a"], &["b"], &["c"])).unwrap();
        assert!(p.to_array().iter().all(|&x| (x - 1.0 / 3.0).abs() < 1e-15));
    }

    #[test]
    fn neutrosophify_errors_and_free() {
        let m = ConceptMapping::new(&["a"], &["b"], &["c"]);
        assert!(matches!(
            neutrosophify(&[("a", 0.0), ("b", 0.0), ("c", 0.0)], &m),
            Err(Error::Degenerate(_))
        ));
        assert!(neutrosophify(&[("a", 1.0)], &m).is_err());
        assert!(neutrosophify(&[("a", -1.0), ("b", 1.0), ("c", 1.0)], &m).is_err());
        let overlap = ConceptMapping::new(&["a", "b"], &["b"], &["c"]);
        let p = neutrosophify(&[("a", 1.0), ("b", 1.0), ("c", 2.0)], &overlap).unwrap();
        assert_eq!(p.dependence, Dependence::Free);
        assert_eq!(p.to_array(), [0.5, 0.25, 0.5]);
    }

    #[test]
    fn three_ways_basic() {
        let out = three_ways(&[0.9, 0.5, 0.1], 0.7, 0.3).unwrap();
        assert_eq!(out.labels, vec![Decision3::Accept, Decision3::Noncommit, Decision3::Reject]);
        assert_eq!(out.partition.sum(), 1.0);
        let out = three_ways(&[0.8, 0.9], 0.7, 0.3).unwrap();
        assert_eq!(out.partition.to_array(), [1.0, 0.0, 0.0]);
        let e = 1e-6;
        let out = three_ways(&[0.4, 0.6, 0.5], 0.5 + e, 0.5 - e).unwrap();
        assert_eq!(out.labels, vec![Decision3::Reject, Decision3::Accept, Decision3::Noncommit]);
        assert!(three_ways(&[0.1], 0.3, 0.3).is_err());
        assert!(three_ways(&[], 0.7, 0.3).is_err());
    }

    #[test]
    fn n_ways_banding() {
        let out = n_ways(&[0.9, 0.8, 0.6, 0.3, 0.1], &[0.25, 0.5, 0.75], (2, 1, 1)).unwrap();
        let acc = |k| Level { group: Decision3::Accept, level: k };
        assert_eq!(out.labels[0], acc(1));
        assert_eq!(out.labels[1], acc(1));
        assert_eq!(out.labels[2], acc(2));
        assert_eq!(out.labels[3], Level { group: Decision3::Noncommit, level: 1 });
        assert_eq!(out.labels[4], Level { group: Decision3::Reject, level: 1 });
        assert_eq!(out.partition.accept_levels, vec![0.4, 0.2]);
        assert_eq!(out.partition.arities(), (2, 1, 1));
    }

    #[test]
    fn n_ways_degenerate_and_errors() {
        let out = n_ways(&[0.05, 0.2, 0.4, 0.9], &[0.1, 0.3, 0.5], (1, 1, 2)).unwrap();
        let names: Vec<String> = out.labels.iter().map(ToString::to_string).collect();
        assert_eq!(names, ["Reject-1", "Reject-2", "Noncommit-1", "Accept-1"]);

        let out = n_ways(&[0.0, 0.5, 1.0], &[2.0, 3.0, 4.0], (2, 1, 1)).unwrap();
        assert!(out.labels.iter().all(|l| *l == out.labels[0]));

        assert!(n_ways(&[0.5], &[0.5, 0.6], (1, 1, 1)).is_err());
        assert!(n_ways(&[0.5], &[0.5, 0.4, 0.6], (2, 1, 1)).is_err());
        assert!(n_ways(&[0.5], &[0.5, 0.6], (2, 1, 1)).is_err());
        assert!(n_ways(&[0.5], &[0.2, 0.4, 0.6], (3, 0, 1)).is_err());
    }

    #[test]
    fn worked_hours() {
        let got: Vec<f64> = [30.0, 40.0, 45.0, 0.0, -20.0]
            .iter()
            .map(|&h| offset_degree(h, 40.0).unwrap())
            .collect();
        assert_eq!(got, vec![0.75, 1.0, 1.125, 0.0, -0.5]);
        assert!(offset_degree(1.0, 0.0).is_err());
    }

    #[test]
    fn offset_classes() {
        let b = OffsetBounds::new(-1.0, 2.0).unwrap();
        let r = validate_offset([1.125, 0.0, 0.0], &b);
        assert_eq!(r.class, OffsetClass::Overset);
        assert!(r.valid);
        assert_eq!(validate_offset([-0.5, 0.2, 0.3], &b).class, OffsetClass::Underset);
        assert_eq!(validate_offset([0.3, 0.2, 0.5], &b).class, OffsetClass::Standard);
        assert_eq!(validate_offset([1.5, -0.5, 0.0], &b).class, OffsetClass::Offset);
        let r = validate_offset([2.5, 0.0, 0.0], &b);
        assert!(!r.valid);
        assert!(r.diagnostics.contains("T = 2.5"));
        assert!(OffsetBounds::new(0.5, 2.0).is_err());
    }
}
