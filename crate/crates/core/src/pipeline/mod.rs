//! Aggregation of subcomplex homology into Betti numbers of the real toric
//! variety, with closed-form cross-checks.

pub mod cache;
pub mod classes;
pub mod compute;
pub mod render;
pub mod report;
pub mod verify;

pub use cache::{Cache, Source, SubsetHomology, CACHE_DIR_ENV};
pub use classes::{class_size, expected_subcomplex_betti, orbit_classes, ClassTag, SubsetClass};
pub use compute::{betti_real_toric, full_rank_lambda, homology_of, load_or_build_complex, subset_homology, ComputeOptions};
pub use render::{render_formula, render_report, render_verification, Format};
pub use report::{aggregate, alternating_sum, BettiReport, Strategy, SubsetEntry, TorsionEntry};
pub use verify::{
    brute_force_classes, maps_subcomplex_onto, symmetry_failures, verify, Check, Level, VerificationReport,
};
