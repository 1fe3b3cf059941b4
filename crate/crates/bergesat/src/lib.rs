//! Desk-scale machinery around Berge hypergraph saturation: exact Berge
//! containment with witness extraction, the feedback-set construction
//! H_k(n, a, G, S), greedy saturation completion with its degeneracy
//! accounting, a brute-force minimum-saturation oracle, and the tight-path
//! multiplicity reduction.

pub mod berge;
pub mod constructions;
pub mod error;
pub mod families;
pub mod hypergraph;
pub mod invariants;
pub mod manifest;
pub mod saturation;
pub mod tightpath;

pub use berge::{contains_any_berge, contains_berge, expansion, BergeWitness, DetectorConfig};
pub use constructions::{
    build_construction, build_lemma_instance, verify_lemma_freeness, BuiltConstruction,
    ConstructionParams, LemmaBuild, LemmaInstance,
};
pub use error::{Error, Result};
pub use hypergraph::{Hypergraph, Pattern};
pub use invariants::{
    case_select, connected_components, feedback_number, is_forest, vertex_cover_number, CaseTag,
    CoverCertificate,
};
pub use saturation::{
    degeneracy_bound, degeneracy_order, greedy_complete, is_saturated, sat_bruteforce,
    DegeneracyBoundInputs, SatSearchOptions, SaturationReport,
};
pub use tightpath::{
    intersection_level, reduction_threshold, run_reduction, tight_path, MultiplicityTable,
    ReductionKind, ReductionOutcome,
};
