//! Restraining NS components to IIFS / IFS components, and measuring how
//! far two routes through the algebra end up apart.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{require_valid, validate, FamilySpec};
use crate::value::{Triplet, UnitValue};

/// Named elements with `(T, I, F)` components, all valid under `family`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabeledSet {
    universe: Vec<String>,
    components: Vec<Triplet>,
    family: FamilySpec,
}

impl LabeledSet {
    pub fn new(universe: Vec<String>, components: Vec<Triplet>, family: FamilySpec) -> Result<Self> {
        if universe.len() != components.len() {
            return Err(Error::usage(format!(
                "{} element names for {} component triplets",
                universe.len(),
                components.len()
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for name in &universe {
            if !seen.insert(name.as_str()) {
                return Err(Error::usage(format!("duplicate element '{name}'")));
            }
        }
        for (name, x) in universe.iter().zip(&components) {
            require_valid(*x, &family).map_err(|e| match e {
                Error::Constraint { family, value, bound } => Error::Constraint {
                    family: format!("{family} (element {name})"),
                    value,
                    bound,
                },
                other => other,
            })?;
        }
        Ok(LabeledSet { universe, components, family })
    }

    /// Convenience constructor from `(name, [t, i, f])` rows.
    pub fn from_rows<S: Into<String>>(rows: impl IntoIterator<Item = (S, [f64; 3])>, family: FamilySpec) -> Result<Self> {
        let mut universe = Vec::new();
        let mut components = Vec::new();
        for (name, v) in rows {
            universe.push(name.into());
            components.push(Triplet::try_from(v)?);
        }
        LabeledSet::new(universe, components, family)
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn components(&self) -> &[Triplet] {
        &self.components
    }

    pub fn family(&self) -> &FamilySpec {
        &self.family
    }

    pub fn len(&self) -> usize {
        self.universe.len()
    }

    pub fn is_empty(&self) -> bool {
        self.universe.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&Triplet> {
        self.universe.iter().position(|n| n == name).map(|k| &self.components[k])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Triplet)> {
        self.universe.iter().map(String::as_str).zip(&self.components)
    }

    /// Re-tags the same components under another family, validating each.
    pub fn retag(&self, family: FamilySpec) -> Result<Self> {
        LabeledSet::new(self.universe.clone(), self.components.clone(), family)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SupTransformed {
    pub set: LabeledSet,
    /// `1 - T' - I' - F'` per element, computed from unrounded components.
    pub refusals: Vec<UnitValue>,
    /// The set-wide `sup T + sup I + sup F`.
    pub denominator: f64,
}

/// Divides every component by the set-wide sum of component suprema,
/// producing an IIFS-tagged set plus per-element refusal degrees.
///
/// Two phases: a reduction over the whole universe, then an elementwise map.
pub fn sup_transform(s: &LabeledSet) -> Result<SupTransformed> {
    let sup = |f: fn(&Triplet) -> f64| s.components.iter().map(f).fold(0.0, f64::max);
    let denom = sup(Triplet::t) + sup(Triplet::i) + sup(Triplet::f);
    if denom == 0.0 {
        return Err(Error::Degenerate(
            "sup T + sup I + sup F is zero over the universe".to_string(),
        ));
    }
    let mut components = Vec::with_capacity(s.len());
    let mut refusals = Vec::with_capacity(s.len());
    for x in &s.components {
        let y = Triplet::from_computed(x.t() / denom, x.i() / denom, x.f() / denom)?;
        refusals.push(UnitValue::from_computed((1.0 - y.sum()).max(0.0))?);
        components.push(y);
    }
    Ok(SupTransformed {
        set: LabeledSet::new(s.universe.clone(), components, FamilySpec::iifs())?,
        refusals,
        denominator: denom,
    })
}

/// Divides each element's components by that element's own sum, producing
/// an IFS-tagged set whose elements each sum to 1.
pub fn normalize_elementwise(s: &LabeledSet) -> Result<LabeledSet> {
    let components = s
        .iter()
        .map(|(name, x)| normalize_triplet(x).map_err(|_| {
            Error::Degenerate(format!("element '{name}' has T + I + F = 0"))
        }))
        .collect::<Result<Vec<_>>>()?;
    LabeledSet::new(s.universe.clone(), components, FamilySpec::ifs())
}

/// Single-element form of [`normalize_elementwise`].
pub fn normalize_triplet(x: &Triplet) -> Result<Triplet> {
    let s = x.sum();
    if s == 0.0 {
        return Err(Error::Degenerate("T + I + F = 0".to_string()));
    }
    Triplet::from_computed(x.t() / s, x.i() / s, x.f() / s)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParadoxReport {
    pub input: Triplet,
    pub is_paradox: bool,
    pub ns_valid: bool,
    pub iifs_valid: bool,
    /// Image under elementwise normalization, if the input is nonzero.
    pub normalized: Option<Triplet>,
    /// Whether the normalized image still represents a paradox.
    pub normalized_is_paradox: bool,
}

/// A paradox is simultaneously fully true, fully false and fully
/// indeterminate: exactly `(1, 1, 1)`.
pub fn is_paradox(t: &Triplet) -> bool {
    t.t() == 1.0 && t.i() == 1.0 && t.f() == 1.0
}

pub fn paradox_check(t: &Triplet) -> Result<ParadoxReport> {
    let normalized = normalize_triplet(t).ok();
    Ok(ParadoxReport {
        input: *t,
        is_paradox: is_paradox(t),
        ns_valid: validate(*t, &FamilySpec::ns())?.valid,
        iifs_valid: validate(*t, &FamilySpec::iifs())?.valid,
        normalized_is_paradox: normalized.as_ref().is_some_and(is_paradox),
        normalized,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ElementDelta {
    pub element: String,
    /// `a - b` per component.
    pub delta: [f64; 3],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DivergenceReport {
    pub deltas: Vec<ElementDelta>,
    pub max_abs_delta: f64,
    pub tolerance: f64,
    /// `max_abs_delta > tolerance`.
    pub differ: bool,
}

pub fn divergence_report(a: &LabeledSet, b: &LabeledSet, tol: f64) -> Result<DivergenceReport> {
    if a.universe != b.universe {
        return Err(Error::usage(format!(
            "universe mismatch: {:?} vs {:?}",
            a.universe, b.universe
        )));
    }
    let deltas: Vec<ElementDelta> = a
        .iter()
        .zip(&b.components)
        .map(|((name, x), y)| ElementDelta {
            element: name.to_string(),
            delta: [x.t() - y.t(), x.i() - y.i(), x.f() - y.f()],
        })
        .collect();
    let max_abs_delta = deltas
        .iter()
        .flat_map(|d| d.delta)
        .map(f64::abs)
        .fold(0.0, f64::max);
    Ok(DivergenceReport {
        deltas,
        max_abs_delta,
        tolerance: tol,
        differ: max_abs_delta > tol,
    })
}
