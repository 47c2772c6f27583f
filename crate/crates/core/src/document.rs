//! JSON documents holding a named universe and per-element components.
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "family": { "kind": "NS" },
//!   "universe": ["x1", "x2"],
//!   "components": [[0.8, 0.3, 0.5], [0.9, 0.2, 0.6]]
//! }
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{validate, Components, FamilyKind, FamilySpec, ValidationReport};
use crate::transforms::LabeledSet;
use crate::value::Triplet;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementSetDocument {
    pub format_version: u32,
    pub family: FamilySpec,
    pub universe: Vec<String>,
    pub components: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ElementReport {
    pub element: String,
    pub report: ValidationReport,
}

impl ElementSetDocument {
    /// Parses and checks structure (version, non-empty universe, one
    /// component array per element). Family constraints are checked by
    /// [`validate_elements`](Self::validate_elements) or
    /// [`to_set`](Self::to_set).
    pub fn parse(text: &str) -> Result<Self> {
        let doc: ElementSetDocument = serde_json::from_str(text).map_err(|e| {
            Error::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string())
        })?;
        doc.check_structure()?;
        Ok(doc)
    }

    pub fn from_set(set: &LabeledSet) -> Self {
        ElementSetDocument {
            format_version: FORMAT_VERSION,
            family: *set.family(),
            universe: set.universe().to_vec(),
            components: set.components().iter().map(|t| t.to_array().to_vec()).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    fn check_structure(&self) -> Result<()> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::parse(
                "format_version",
                format!("unsupported version {}, expected {FORMAT_VERSION}", self.format_version),
            ));
        }
        if self.universe.is_empty() {
            return Err(Error::usage("document has an empty universe"));
        }
        if self.universe.len() != self.components.len() {
            return Err(Error::parse(
                "components",
                format!("{} elements but {} component arrays", self.universe.len(), self.components.len()),
            ));
        }
        let mut seen = std::collections::HashSet::new();
        for (name, c) in self.universe.iter().zip(&self.components) {
            if !seen.insert(name.as_str()) {
                return Err(Error::parse(format!("element '{name}'"), "duplicate element name"));
            }
            if !(c.len() == 2 || c.len() == 3) {
                return Err(Error::parse(
                    format!("element '{name}'"),
                    format!("expected 2 or 3 components, got {}", c.len()),
                ));
            }
        }
        Ok(())
    }

    fn element_components(&self, k: usize, family: &FamilySpec) -> Result<Components> {
        let name = &self.universe[k];
        let c = &self.components[k];
        let extended = matches!(family.kind(), FamilyKind::Sns | FamilyKind::Nhsns);
        match c.as_slice() {
            &[t, i, f] if extended => Ok(Components::Extended([t, i, f])),
            _ => Components::from_slice(c),
        }
        .map_err(|e| Error::parse(format!("element '{name}'"), e.to_string()))
    }

    /// One report per element under `family` (the document's own family
    /// when `None`).
    pub fn validate_elements(&self, family: Option<&FamilySpec>) -> Result<Vec<ElementReport>> {
        let family = family.unwrap_or(&self.family);
        (0..self.universe.len())
            .map(|k| {
                let report = validate(self.element_components(k, family)?, family)
                    .map_err(|e| Error::parse(format!("element '{}'", self.universe[k]), e.to_string()))?;
                Ok(ElementReport { element: self.universe[k].clone(), report })
            })
            .collect()
    }

    /// Builds a validated set. Needs `(T, I, F)` triplets.
    pub fn to_set(&self) -> Result<LabeledSet> {
        let triplets = self
            .components
            .iter()
            .zip(&self.universe)
            .map(|(c, name)| match c.as_slice() {
                &[t, i, f] => Triplet::new(t, i, f)
                    .map_err(|e| Error::parse(format!("element '{name}'"), e.to_string())),
                _ => Err(Error::parse(
                    format!("element '{name}'"),
                    "set operations need (T, I, F) triplets",
                )),
            })
            .collect::<Result<Vec<_>>>()?;
        LabeledSet::new(self.universe.clone(), triplets, self.family)
    }
}
