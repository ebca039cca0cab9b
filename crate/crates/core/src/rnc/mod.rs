//! The rational normal curve, its normal bundle in the free basis, and
//! normal maps of complete intersections containing it.

mod combo;
mod extension;
mod model;

pub use combo::{ci_normal_map, psi_row, smooth_along_curve, HypersurfaceCombo};
pub use extension::{extension_class_of_column, induced_extension_class, realize_extension};
pub use model::{alpha_image, standard_normal_splitting, AlphaTerm, RncModel};
