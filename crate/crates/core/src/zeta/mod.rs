//! Riemann, Hurwitz, Dirichlet and Dedekind zeta functions.

pub mod dedekind;
pub mod hurwitz;
pub mod laurent;

pub use dedekind::{
    completed_lambda, dedekind_zeta, dirichlet_l, dirichlet_l_at_zero, functional_equation_power_check,
    zeta_at_zero,
};
pub use hurwitz::{hurwitz_zeta, riemann_zeta};
pub use laurent::{
    laurent_at_one, laurent_at_one_with_radius, main_term, main_term_from_laurent, LaurentData,
    MainTermValue,
};
