//! Exact field arithmetic, dense linear algebra and the reproducible generator.

pub mod field;
pub mod matrix;
pub mod poly;
pub mod rng;
pub mod span;

pub use field::{is_prime, FieldSpec, Scalar, DEFAULT_PRIME};
pub use matrix::{DenseMatrix, RATIONAL_CAPACITY};
pub use poly::{poly_matrix_det, poly_matrix_rank, UniPoly};
pub use rng::{random_nonzero_scalar, random_scalar, SplitMix64, DEFAULT_SEED};
pub use span::IncrementalBasis;
