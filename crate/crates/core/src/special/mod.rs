//! Γ, Bessel functions, the exponential integral and the Meijer `G` family.

pub mod bessel;
pub mod bessel_complex;
pub mod expint;
pub mod gamma;
pub mod meijer;

pub use bessel::{bessel, BesselKind};
pub use bessel_complex::{bessel_interconnect_check, InterconnectResiduals};
pub use gamma::{gamma, ln_gamma};
pub use meijer::{meijer_g, voronoi_steen, Abscissa, Estimate, GSpec, QuadratureControls};
