//! The explicit families with known normal bundles, the random scanner for
//! complete intersections of quadrics, and the degree arithmetic.

mod arith;
mod families;
mod scan;

pub use arith::{expected_balanced, fano_check, induction_inequality, very_free_min_degree};
pub use families::{
    build_family, expected_family_splitting, quartic_4n1_ambient, quartic_4n1_data, quartic_4n1_threefold,
    verify_family, Construction, Family, FamilyCheck, FamilyId,
};
pub use scan::{conjecture_scan, random_quadric_system, ScanReport, SplittingCount, EVIDENCE_NOTE};
