//! Brute-force partial sums and Riesz sums over a coefficient table.

use crate::arith::table::CoefficientTable;
use crate::error::{Error, Result};
use crate::rational::PositiveRational;

/// A Riesz sum `(1/ρ!) Σ'_{n≤x} (x-n)^ρ v(n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RieszSumValue {
    pub order: u32,
    pub x: PositiveRational,
    pub value: f64,
}

fn check_limit(table: &CoefficientTable, x: &PositiveRational) -> Result<()> {
    if x.floor() > table.limit() {
        return Err(Error::BeyondLimit {
            x: x.to_string(),
            limit: table.limit(),
        });
    }
    Ok(())
}

/// `Σ_{n<x} v(n) + v(x)/2` when `x` is an integer, else `Σ_{n≤x} v(n)`.
pub fn halved_partial_sum(table: &CoefficientTable, x: &PositiveRational) -> Result<f64> {
    check_limit(table, x)?;
    let top = x.floor();
    let full: u128 = (1..=top).map(|n| table.get(n) as u128).sum();
    if x.is_integer() {
        let twice = 2 * full - table.get(top) as u128;
        Ok(twice as f64 / 2.0)
    } else {
        Ok(full as f64)
    }
}

/// Riesz sum of order `ρ`, normalized by `1/ρ!`.
///
/// For `ρ = 0` this is [`halved_partial_sum`]; for `ρ ≥ 1` the `n = x` term is 0.
pub fn riesz_direct(
    table: &CoefficientTable,
    rho: u32,
    x: &PositiveRational,
) -> Result<RieszSumValue> {
    let value = if rho == 0 {
        halved_partial_sum(table, x)?
    } else {
        check_limit(table, x)?;
        let mut sum = 0.0;
        let mut comp = 0.0;
        for n in 1..=x.floor() {
            let v = table.get(n);
            if v == 0 {
                continue;
            }
            let term = x.minus_integer(n).powi(rho as i32) * v as f64 - comp;
            let t = sum + term;
            comp = (t - sum) - term;
            sum = t;
        }
        sum / factorial(rho)
    };
    Ok(RieszSumValue {
        order: rho,
        x: *x,
        value,
    })
}

pub(crate) fn factorial(n: u32) -> f64 {
    (1..=n).map(|k| k as f64).product()
}
