//! Piltz divisor sums over the rationals and quadratic fields, the zeta
//! functions behind them, and numerical checks of Voronoi-type identities
//! that express those sums through Bessel and Meijer `G` series.

pub mod arith;
pub mod checks;
pub mod error;
pub mod field;
pub mod identities;
pub mod quadrature;
pub mod rational;
pub mod special;
pub mod zeta;

pub use error::{Error, Result};
pub use field::FieldDescriptor;
pub use rational::PositiveRational;
