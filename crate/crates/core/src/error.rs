use std::path::PathBuf;

use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),

    #[error("inconsistent field signature: degree {degree}, r1 {r1}, r2 {r2}, discriminant {disc}")]
    BadSignature {
        degree: u32,
        r1: u32,
        r2: u32,
        disc: i64,
    },

    #[error("operation `{op}` is not available for {field}: {reason}")]
    UnsupportedField {
        op: &'static str,
        field: String,
        reason: &'static str,
    },

    #[error("coefficient tables differ: {0}")]
    TableMismatch(String),

    #[error("coefficient overflow at n = {n}")]
    Overflow { n: u64 },

    #[error("x = {x} exceeds the table limit {limit}")]
    BeyondLimit { x: String, limit: u64 },

    #[error("{path}: line {line}: {msg}")]
    MalformedRow {
        path: PathBuf,
        line: u64,
        msg: String,
    },

    #[error("coefficient at n = 1 must be 1, found {0}")]
    NotNormalized(u64),

    #[error("multiplicativity fails for ({a}, {b}): v({ab}) = {got}, v({a})*v({b}) = {expected}")]
    NotMultiplicative {
        a: u64,
        b: u64,
        ab: u64,
        got: u64,
        expected: u128,
    },

    #[error("pole at s = {0}")]
    Pole(String),

    #[error("quadrature did not converge: {what} (achieved residual {residual:e})")]
    NoConvergence { what: &'static str, residual: f64 },

    #[error("contour abscissa {abscissa} does not separate the poles (must be < {bound})")]
    PoleSeparation { abscissa: f64, bound: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("Riesz order assumption violated: rho = {rho} but need rho >= {required} and -1 < mu < 0 (mu = {mu})")]
    OrderAssumption { rho: u32, required: f64, mu: f64 },

    #[error("not numerically evaluated: {0}")]
    NotEvaluated(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
