//! Validated algebra for fuzzy, intuitionistic, picture, Pythagorean,
//! spherical and neutrosophic set families.

pub mod document;
pub mod error;
pub mod decision;
pub mod exhibits;
pub mod families;
pub mod indeterminacy;
pub mod operators;
pub mod refined;
pub mod transforms;
pub mod value;

pub use error::{Error, Result};
pub use families::{
    analytic_volume, classify_cube_region, embed_into_ns, estimate_family_volume, find_counterexample, hesitancy,
    refusal, validate, Components, CubeRegion, FamilyKind, FamilySpec, InclusionClaim, ValidationReport,
    VolumeEstimate,
};
pub use operators::{NormPair, OperatorSystem, OverflowReading, SetOp, SystemKind, TConorm, TNorm};
pub use refined::{
    coarsen, refine, refined_hesitancy, refined_refusal, validate_refined, RefineWeights, RefinedComponents,
    RefinedFamilySpec, RefinedKind, SubDegree,
};
pub use transforms::{divergence_report, normalize_elementwise, paradox_check, sup_transform, LabeledSet};
pub use value::{IntervalPair, IntervalTriplet, IntervalValue, Pair, Triplet, UnitValue, EPS, PRINTED_TOL};
pub use decision::{
    n_ways, neutrosophify, offset_degree, three_ways, validate_offset, ConceptMapping, Decision3, Dependence, Level,
    OffsetBounds, OffsetClass, Partition3, PartitionN,
};
pub use indeterminacy::{
    adjacency_validate, nm_add, nm_mul, nn_add, nn_mul, nn_pow, path_influence, rnn_add, rnn_scale, AdjacencyKind,
    NeutroAdjacency, NeutroMatrix, NeutrosophicNumber, Nn, RefinedNeutrosophicNumber,
};
pub use document::{ElementReport, ElementSetDocument, FORMAT_VERSION};
pub use exhibits::{run_all, run_exhibit, Check, ExhibitReport, Observed, EXHIBITS};
