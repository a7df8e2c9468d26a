//! Exact positive rationals for the summation cut-off `x`.
//!
//! The halved-sum convention depends on whether `x` is an integer, so `x`
//! never passes through a float before that decision is made.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedSub};

use crate::error::{Error, Result};

/// A strictly positive rational number `num/den` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PositiveRational(Ratio<u64>);

impl PositiveRational {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if num == 0 || den == 0 {
            return Err(Error::InvalidArgument(format!(
                "x must be a positive rational, got {num}/{den}"
            )));
        }
        Ok(Self(Ratio::new(num, den)))
    }

    pub fn integer(n: u64) -> Result<Self> {
        Self::new(n, 1)
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn floor(&self) -> u64 {
        self.numer() / self.denom()
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }

    /// `x - n` as a float, computed from the exact numerator.
    pub fn minus_integer(&self, n: u64) -> f64 {
        let num = self.numer() as i128 - n as i128 * self.denom() as i128;
        num as f64 / self.denom() as f64
    }

    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        self.0.checked_add(&other.0).map(Self)
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if other.0 >= self.0 {
            return None;
        }
        self.0.checked_sub(&other.0).map(Self)
    }
}

impl fmt::Display for PositiveRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for PositiveRational {
    type Err = Error;

    /// Accepts `n`, `num/den` or a finite decimal such as `10.5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidArgument(format!("cannot parse `{s}` as a positive rational"));
        if let Some((n, d)) = s.split_once('/') {
            let n: u64 = n.trim().parse().map_err(|_| bad())?;
            let d: u64 = d.trim().parse().map_err(|_| bad())?;
            return Self::new(n, d);
        }
        if let Some((int, frac)) = s.split_once('.') {
            if frac.is_empty() || frac.len() > 18 || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
            let den = 10u64.pow(frac.len() as u32);
            let frac: u64 = frac.parse().map_err(|_| bad())?;
            let num = int
                .checked_mul(den)
                .and_then(|v| v.checked_add(frac))
                .ok_or_else(bad)?;
            return Self::new(num, den);
        }
        let n: u64 = s.parse().map_err(|_| bad())?;
        Self::integer(n)
    }
}
