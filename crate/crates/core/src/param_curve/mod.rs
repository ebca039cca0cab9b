//! Parametrized rational curves: normal bundles from the Jacobian or from a
//! presentation of the ideal, and section counts of the ideal and its square.

mod counts;
mod curve;
mod presentation;

pub use counts::{
    chain_double_conditions, expected_chain_conditions, h0_ideal, h0_ideal_sq, last_case_bound, monomials,
    phi_surjective, PhiReport, MONOMIAL_CAP,
};
pub use curve::{ParamCurve, RESAMPLE_CAP};
pub use presentation::Presentation;
