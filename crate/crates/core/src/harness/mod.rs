//! JSON ingestion, reports and the theorem census.

mod census;
mod enumerate;
mod report;
mod spec;

pub use census::{
    census_groups, census_row, render_census_text, row_checks, verify_rows, verify_theorem,
    Census, CensusConfig, CensusRow, Violation, COROLLARY, HOMOLOGIES, SERRE, THEOREM,
    TRANSVECTIONS,
};
pub use enumerate::{
    all_reflections, enumerate_abelian_reflection_groups, non_reflection_abelian_groups,
    signature, EnumeratedGroup, Enumeration, EnumerationMode, GroupSignature,
};
pub use report::{
    analyze, degree_bound, different_view, dsp_view, group_facts, render_json, render_text,
    transfer_view, AnalysisOptions, AnalysisReport, BoundView, ContractView, CoregularityView,
    DecompositionView, DifferentView, DspView, GroupFacts, HyperplaneView, IdealView,
    InvariantsView, Scope, SeriesView, TransferView, SCHEMA_VERSION,
};
pub use spec::{paper_example_spec, parse_spec, GroupSpec};
