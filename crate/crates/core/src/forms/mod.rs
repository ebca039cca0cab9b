//! Binary forms in `(s, t)` and sparse forms in `x_0, …, x_n`.

mod biform;
mod multiform;

pub use biform::{gcd_set, BiForm};
pub use multiform::MultiForm;
