//! Multiplicative coefficient sequences and brute-force sums over them.

pub mod csvio;
pub mod kronecker;
pub mod sums;
pub mod table;

pub use csvio::{ingest_coefficients, read_coefficients, write_coefficients};
pub use kronecker::kronecker_symbol;
pub use sums::{halved_partial_sum, riesz_direct, RieszSumValue};
pub use table::{coeff_power, dirichlet_convolve, power_of, sieve_vk, CoefficientTable, Provenance};
