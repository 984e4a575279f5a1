//! Desk-scale exhaustive searches.

pub mod enumerate;
pub mod extremal;
pub mod scan;

pub use enumerate::{enumerate_all, enumerate_symmetric, Bases, BasisShape};
pub use extremal::{
    search_extremal, search_extremal_with_ceiling, ExtremalResult, DEFAULT_CANDIDATE_CEILING,
};
pub use scan::{
    checkpoint_path, run_scan, scan_conjecture, ScanError, ScanOptions, ScanOutcome, ScanRecord,
    ScanSpec, ScanSummary,
};
