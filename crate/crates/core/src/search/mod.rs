//! Exhaustive searches for 2-to-1 polynomials of fixed shape, with QM dedupe,
//! deterministic reports and comparison against the reference tables.

mod binomial;
mod curve;
mod engine;
mod report;
mod scan;
pub mod tables;

pub use binomial::{explain_binomial, translation_exponents, BinomialExplanation};
pub use curve::{count_curve_points, curve_parts, degree5_curve, CurveCount};
pub use engine::{
    search, search_degree5, search_degree5_with, search_sparse, template_exponents, template_images, SearchOptions,
    DEGREE5_MAX_N, LONG_RUN_MAX_N, SPARSE_MAX_N, UNVERIFIED_NOTE,
};
pub use report::{Dedupe, FieldDesc, Hit, SearchReport, Shape};
pub use tables::{compare_with_table, TableDiff, TableId};
