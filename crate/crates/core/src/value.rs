//! Atomic degree types: unit scalars, closed subintervals of `[0, 1]`,
//! the unconstrained `(T, I, F)` triplet and the `(T, F)` pair.
//!
//! Nothing here knows about set families. A [`Triplet`] only promises that
//! each component lies in `[0, 1]`; joint constraints are checked by
//! [`crate::families::validate`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance for comparing computed real-valued components.
pub const EPS: f64 = 1e-9;

/// Tolerance for comparing against values printed with two decimals.
pub const PRINTED_TOL: f64 = 0.01;

/// A scalar degree in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct UnitValue(f64);

impl UnitValue {
    pub const ZERO: UnitValue = UnitValue(0.0);
    pub const ONE: UnitValue = UnitValue(1.0);

    pub fn new(v: f64) -> Result<Self> {
        make_unit(v)
    }

    /// Clamps a computed value that overshot `[0, 1]` by at most [`EPS`].
    pub(crate) fn from_computed(v: f64) -> Result<Self> {
        if v.is_finite() && (-EPS..=1.0 + EPS).contains(&v) {
            Ok(UnitValue(v.clamp(0.0, 1.0)))
        } else {
            Err(Error::OutOfRange { value: v, lo: 0.0, hi: 1.0 })
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for UnitValue {
    type Error = Error;

    fn try_from(v: f64) -> Result<Self> {
        make_unit(v)
    }
}

impl From<UnitValue> for f64 {
    fn from(u: UnitValue) -> f64 {
        u.0
    }
}

impl fmt::Display for UnitValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Builds a [`UnitValue`], rejecting anything outside `[0, 1]` (including NaN).
///
/// Off-set degrees such as `45/40 = 1.125` are representable only through
/// [`crate::decision::offset_degree`].
pub fn make_unit(v: f64) -> Result<UnitValue> {
    if (0.0..=1.0).contains(&v) {
        Ok(UnitValue(v))
    } else {
        Err(Error::OutOfRange { value: v, lo: 0.0, hi: 1.0 })
    }
}

/// Maximum admissible sum of two `[0, 1]` components whose degree of
/// dependence is `d`: `0 <= x + y <= 2 - d`.
pub fn dependence_sum_bound(d: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&d) {
        return Err(Error::OutOfRange { value: d, lo: 0.0, hi: 1.0 });
    }
    Ok(2.0 - d)
}

/// A closed subinterval `[lo, hi]` of `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "(f64, f64)", into = "(f64, f64)")]
pub struct IntervalValue {
    lo: f64,
    hi: f64,
}

impl IntervalValue {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        make_unit(lo)?;
        make_unit(hi)?;
        if lo > hi {
            return Err(Error::usage(format!("interval [{lo}, {hi}] has lo > hi")));
        }
        Ok(IntervalValue { lo, hi })
    }

    pub fn point(v: UnitValue) -> Self {
        IntervalValue { lo: v.0, hi: v.0 }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
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

    /// The scalar this interval collapses to, if `lo == hi`.
    pub fn as_unit(&self) -> Option<UnitValue> {
        self.is_degenerate().then_some(UnitValue(self.lo))
    }

    /// `1 - [lo, hi] = [1 - hi, 1 - lo]`.
    pub fn complement(&self) -> Self {
        IntervalValue { lo: 1.0 - self.hi, hi: 1.0 - self.lo }
    }

    /// Endpoint-wise application of a monotone binary operation.
    pub fn zip_with(&self, other: &Self, op: impl Fn(f64, f64) -> f64) -> Self {
        IntervalValue {
            lo: op(self.lo, other.lo),
            hi: op(self.hi, other.hi),
        }
    }
}

impl From<UnitValue> for IntervalValue {
    fn from(v: UnitValue) -> Self {
        IntervalValue::point(v)
    }
}

impl TryFrom<(f64, f64)> for IntervalValue {
    type Error = Error;

    fn try_from((lo, hi): (f64, f64)) -> Result<Self> {
        IntervalValue::new(lo, hi)
    }
}

impl From<IntervalValue> for (f64, f64) {
    fn from(iv: IntervalValue) -> (f64, f64) {
        (iv.lo, iv.hi)
    }
}

impl fmt::Display for IntervalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Ordered `(T, I, F)` components, each in `[0, 1]`, with no joint constraint.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct Triplet {
    t: UnitValue,
    i: UnitValue,
    f: UnitValue,
}

impl Triplet {
    pub fn new(t: f64, i: f64, f: f64) -> Result<Self> {
        Ok(Triplet {
            t: make_unit(t)?,
            i: make_unit(i)?,
            f: make_unit(f)?,
        })
    }

    pub fn from_units(t: UnitValue, i: UnitValue, f: UnitValue) -> Self {
        Triplet { t, i, f }
    }

    /// Builds a triplet from computed values, absorbing rounding overshoot.
    pub(crate) fn from_computed(t: f64, i: f64, f: f64) -> Result<Self> {
        Ok(Triplet {
            t: UnitValue::from_computed(t)?,
            i: UnitValue::from_computed(i)?,
            f: UnitValue::from_computed(f)?,
        })
    }

    #[inline]
    pub fn t(&self) -> f64 {
        self.t.0
    }

    #[inline]
    pub fn i(&self) -> f64 {
        self.i.0
    }

    #[inline]
    pub fn f(&self) -> f64 {
        self.f.0
    }

    pub fn sum(&self) -> f64 {
        self.t.0 + self.i.0 + self.f.0
    }

    pub fn to_array(&self) -> [f64; 3] {
        [self.t.0, self.i.0, self.f.0]
    }

    /// `(T, F)` with the indeterminacy dropped.
    pub fn to_pair(&self) -> Pair {
        Pair { t: self.t, f: self.f }
    }

    /// Largest componentwise absolute difference.
    pub fn max_abs_delta(&self, other: &Triplet) -> f64 {
        self.to_array()
            .iter()
            .zip(other.to_array())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Triplet, tol: f64) -> bool {
        self.max_abs_delta(other) <= tol
    }
}

impl TryFrom<[f64; 3]> for Triplet {
    type Error = Error;

    fn try_from([t, i, f]: [f64; 3]) -> Result<Self> {
        Triplet::new(t, i, f)
    }
}

impl From<Triplet> for [f64; 3] {
    fn from(x: Triplet) -> [f64; 3] {
        x.to_array()
    }
}

impl fmt::Display for Triplet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.t, self.i, self.f)
    }
}

/// Membership / nonmembership pair, each in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(try_from = "[f64; 2]", into = "[f64; 2]")]
pub struct Pair {
    t: UnitValue,
    f: UnitValue,
}

impl Pair {
    pub fn new(t: f64, f: f64) -> Result<Self> {
        Ok(Pair { t: make_unit(t)?, f: make_unit(f)? })
    }

    #[inline]
    pub fn t(&self) -> f64 {
        self.t.0
    }

    #[inline]
    pub fn f(&self) -> f64 {
        self.f.0
    }

    /// Attaches an explicit indeterminacy.
    pub fn with_indeterminacy(&self, i: UnitValue) -> Triplet {
        Triplet { t: self.t, i, f: self.f }
    }
}

impl TryFrom<[f64; 2]> for Pair {
    type Error = Error;

    fn try_from([t, f]: [f64; 2]) -> Result<Self> {
        Pair::new(t, f)
    }
}

impl From<Pair> for [f64; 2] {
    fn from(p: Pair) -> [f64; 2] {
        [p.t.0, p.f.0]
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.t, self.f)
    }
}

/// Interval-valued `(T, I, F)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntervalTriplet {
    pub t: IntervalValue,
    pub i: IntervalValue,
    pub f: IntervalValue,
}

impl IntervalTriplet {
    pub fn new(t: IntervalValue, i: IntervalValue, f: IntervalValue) -> Self {
        IntervalTriplet { t, i, f }
    }

    pub fn sup_sum(&self) -> f64 {
        self.t.sup() + self.i.sup() + self.f.sup()
    }

    /// Collapses to a scalar triplet when every component is degenerate.
    pub fn as_triplet(&self) -> Option<Triplet> {
        Some(Triplet {
            t: self.t.as_unit()?,
            i: self.i.as_unit()?,
            f: self.f.as_unit()?,
        })
    }

    /// Triplet of suprema.
    pub fn sups(&self) -> Triplet {
        Triplet {
            t: UnitValue(self.t.sup()),
            i: UnitValue(self.i.sup()),
            f: UnitValue(self.f.sup()),
        }
    }
}

impl From<Triplet> for IntervalTriplet {
    fn from(x: Triplet) -> Self {
        IntervalTriplet {
            t: x.t.into(),
            i: x.i.into(),
            f: x.f.into(),
        }
    }
}

/// Interval-valued `(T, F)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntervalPair {
    pub t: IntervalValue,
    pub f: IntervalValue,
}

impl IntervalPair {
    pub fn new(t: IntervalValue, f: IntervalValue) -> Self {
        IntervalPair { t, f }
    }

    pub fn sups(&self) -> Pair {
        Pair {
            t: UnitValue(self.t.sup()),
            f: UnitValue(self.f.sup()),
        }
    }
}

impl From<Pair> for IntervalPair {
    fn from(p: Pair) -> Self {
        IntervalPair { t: p.t.into(), f: p.f.into() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dependence_bound_examples() {
        assert_eq!(dependence_sum_bound(1.0).unwrap(), 1.0);
        assert_eq!(dependence_sum_bound(0.0).unwrap(), 2.0);
        assert_eq!(dependence_sum_bound(0.5).unwrap(), 1.5);
        assert!(matches!(
            dependence_sum_bound(1.5),
            Err(Error::OutOfRange { .. })
        ));
        assert!(dependence_sum_bound(-0.1).is_err());
    }

    #[test]
    fn make_unit_boundaries() {
        assert_eq!(make_unit(0.3).unwrap().get(), 0.3);
        assert_eq!(make_unit(1.0).unwrap().get(), 1.0);
        assert_eq!(make_unit(0.0).unwrap().get(), 0.0);
        match make_unit(1.125) {
            Err(Error::OutOfRange { value, .. }) => assert_eq!(value, 1.125),
            other => panic!("expected range error, got {other:?}"),
        }
        assert!(make_unit(f64::NAN).is_err());
        assert!(make_unit(-0.0001).is_err());
    }

    #[test]
    fn intervals_are_closed_and_ordered() {
        assert!(IntervalValue::new(0.2, 0.1).is_err());
        assert!(IntervalValue::new(0.2, 1.2).is_err());
        let iv = IntervalValue::new(0.2, 0.6).unwrap();
        assert_eq!(iv.sup(), 0.6);
        assert_eq!(iv.complement(), IntervalValue::new(0.4, 0.8).unwrap());
        let p = IntervalValue::point(make_unit(0.4).unwrap());
        assert_eq!(p.as_unit().unwrap().get(), 0.4);
        assert!(iv.as_unit().is_none());
    }

    #[test]
    fn triplet_serde_rejects_out_of_range() {
        let x: Triplet = serde_json::from_str("[0.8, 0.3, 0.5]").unwrap();
        assert_eq!(x.to_array(), [0.8, 0.3, 0.5]);
        assert!(serde_json::from_str::<Triplet>("[1.2, 0.3, 0.5]").is_err());
        assert_eq!(serde_json::to_string(&x).unwrap(), "[0.8,0.3,0.5]");
    }

    #[test]
    fn computed_values_absorb_rounding_only() {
        assert_eq!(UnitValue::from_computed(1.0 + 1e-12).unwrap().get(), 1.0);
        assert_eq!(UnitValue::from_computed(-1e-12).unwrap().get(), 0.0);
        assert!(UnitValue::from_computed(1.01).is_err());
    }

    proptest::proptest! {
        #[test]
        fn dependence_bound_is_monotone(a in 0.0f64..=1.0, b in 0.0f64..=1.0) {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            let (x, y) = (dependence_sum_bound(lo).unwrap(), dependence_sum_bound(hi).unwrap());
            proptest::prop_assert!((1.0..=2.0).contains(&x));
            proptest::prop_assert!((1.0..=2.0).contains(&y));
            proptest::prop_assert!(y <= x);
        }
    }
}
