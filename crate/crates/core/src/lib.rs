//! Splitting types of graded maps between sums of line bundles on P^1, and
//! normal bundles of rational curves in projective space and in complete
//! intersections, computed with exact arithmetic.

pub mod algebra;
pub mod forms;
pub mod graded;
pub mod paper_suite;
pub mod param_curve;
pub mod rnc;
pub mod error;

pub use error::{Error, Result};
