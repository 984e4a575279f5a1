//! Covers of additive bases for the postage stamp problem.
//!
//! A basis `A = {1, a_2, ..., a_k}` covers `n` with `h` stamps when every
//! positive integer up to `n` is a sum of at most `h` elements of `A`. The
//! largest such `n` is the cover `n(h, A)`, computed here by a minimal-stamp
//! dynamic program ([`table`]) and cross-checked by brute force
//! ([`oracle`]). [`analysis`] handles symmetric bases (`a_i + a_{k-i} = a_k`):
//! the admissibility threshold `h0`, the saturation point `h1`, and the
//! reflection of generations below `a_k`. [`families`] builds the known
//! counterexamples with `h1 = h0 + 1` and [`search`] runs exhaustive scans.
//!
//! Everything is generic over the unsigned denomination type; the aliases
//! below fix it to `u64`, which the command-line tool uses.

pub mod analysis;
pub mod basis;
pub mod error;
pub mod families;
pub mod generation;
pub mod num;
pub mod oracle;
pub mod search;
pub mod table;

pub use analysis::{
    analyze, compute_h0, compute_h1, is_symmetric, meure_applicable, reflect_generation,
    symmetrize_even, symmetrize_odd, theorem_bound, BasisReport, DEFAULT_H1_CAP, H1,
};
pub use basis::Basis;
pub use error::{Error, Result};
pub use families::{family_a10, family_a5, family_a9, Family, FamilyKind};
pub use generation::Generation;
pub use num::Denomination;
pub use oracle::{brute_force_cover, brute_force_cover_with_ceiling, DEFAULT_ENUMERATION_CEILING};
pub use search::{
    enumerate_all, enumerate_symmetric, run_scan, scan_conjecture, search_extremal,
    search_extremal_with_ceiling, BasisShape, ExtremalResult, ScanOptions, ScanRecord, ScanSpec,
};
pub use table::{
    cover, cover_profile, find_generation, min_stamp_table, CoverProfile, CoverRow, MinStampTable,
};

pub type Basis64 = Basis<u64>;
pub type Basis32 = Basis<u32>;
pub type Basis128 = Basis<u128>;
pub type Generation64 = Generation<u64>;
pub type MinStampTable64 = MinStampTable<u64>;
pub type CoverProfile64 = CoverProfile<u64>;
pub type BasisReport64 = BasisReport<u64>;
pub type ExtremalResult64 = ExtremalResult<u64>;
pub type ScanSpec64 = ScanSpec<u64>;
pub type ScanRecord64 = ScanRecord<u64>;
