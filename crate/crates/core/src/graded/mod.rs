//! Graded maps between sums of line bundles on P^1 and the splitting types of
//! their kernels and of extensions.

mod bundle;
mod extension;
mod map;
mod sections;

pub use bundle::{BundleSum, SplittingType};
pub use extension::ExtensionClass;
pub use map::{balanced_kernel_rate, random_form, GradedMap, RateReport};
