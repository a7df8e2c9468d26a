//! Both sides of the Voronoï-type identities and their Riesz-smoothed form.

pub mod evaluate;
pub mod riesz;
pub mod terms;

pub use evaluate::{evaluate_identity, evaluate_identity_with, AnalyticData, IdentityReport};
pub use riesz::{
    required_order, residue_at_one, riesz_check, smoothed_vertical_integral, RieszCheckReport, RieszControls,
    VerticalIntegral,
};
pub use terms::{
    kernel, meijer_kernel, series_term_meijer, series_term_meijer_with, series_term_quadratic,
    series_term_rationals_m2, IdentityCase, IdentityVariant, KernelValue,
};
