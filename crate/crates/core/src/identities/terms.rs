//! Identity cases and the summands of their truncated series.

use std::f64::consts::PI;
use std::fmt;

use crate::arith::kronecker::kronecker;
use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, FieldKind};
use crate::special::bessel::{j1, k1, y1};
use crate::special::meijer::{meijer_g, GSpec, QuadratureControls};

/// Which closed form of the series side is used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityVariant {
    /// Divisor problem over the rationals, `Y_1 + (2/π) K_1` kernel.
    RationalsM2,
    /// Piltz problem over the rationals; `m = 1` is the sawtooth series, `m = 2`
    /// the Bessel series, higher `m` only at the smoothed level.
    RationalsM,
    /// Ideal counting in a real quadratic field.
    RealQuadratic,
    /// Ideal counting in an imaginary quadratic field, `J_1` kernel.
    ImagQuadratic,
    /// Purely imaginary field, Meijer G kernel with real argument.
    PurelyImaginaryMeijer,
    /// Totally real field, Voronoï–Steen kernel at complex phases.
    TotallyRealSteen,
}

impl IdentityVariant {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::RationalsM2 => "rationals-m2",
            Self::RationalsM => "rationals-m",
            Self::RealQuadratic => "real-quadratic",
            Self::ImagQuadratic => "imag-quadratic",
            Self::PurelyImaginaryMeijer => "purely-imaginary-meijer",
            Self::TotallyRealSteen => "totally-real-steen",
        }
    }
}

/// A variant together with its field and power.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IdentityCase {
    variant: IdentityVariant,
    field: FieldDescriptor,
    m: u32,
}

impl IdentityCase {
    pub fn new(variant: IdentityVariant, field: FieldDescriptor, m: u32) -> Result<Self> {
        use IdentityVariant::*;
        if m == 0 {
            return Err(Error::InvalidArgument("power m must be at least 1".into()));
        }
        let bad = |reason: &'static str| Err(field.unsupported(variant.as_str(), reason));
        match variant {
            RationalsM2 if field.kind() != FieldKind::Rationals || m != 2 => {
                return bad("requires the rationals with m = 2")
            }
            RationalsM if field.kind() != FieldKind::Rationals => return bad("requires the rationals"),
            RealQuadratic | ImagQuadratic if m != 1 => return bad("requires m = 1"),
            RealQuadratic if !matches!(field.kind(), FieldKind::Quadratic(d) if d > 0) => {
                return bad("requires a real quadratic field")
            }
            ImagQuadratic if !matches!(field.kind(), FieldKind::Quadratic(d) if d < 0) => {
                return bad("requires an imaginary quadratic field")
            }
            PurelyImaginaryMeijer if field.r1() != 0 => return bad("requires r1 = 0"),
            TotallyRealSteen if field.r2() != 0 => return bad("requires r2 = 0"),
            _ => {}
        }
        Ok(Self { variant, field, m })
    }

    pub fn rationals_m2() -> Self {
        Self { variant: IdentityVariant::RationalsM2, field: FieldDescriptor::rationals(), m: 2 }
    }

    pub fn variant(&self) -> IdentityVariant {
        self.variant
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Whether the unsmoothed series of this case has a real-argument kernel.
    pub fn has_series(&self) -> bool {
        match self.variant {
            IdentityVariant::RationalsM => self.m <= 2,
            IdentityVariant::TotallyRealSteen => false,
            _ => true,
        }
    }
}

impl fmt::Display for IdentityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} m={}", self.variant.as_str(), self.field, self.m)
    }
}

/// `-(Y_1(a) + (2/π) K_1(a)) √(xn) / n`, `a = 4π√(xn/D)`.
fn bessel_yk_kernel(n: u64, x: f64, disc: f64) -> f64 {
    let r = (x * n as f64).sqrt();
    let a = 4.0 * PI * r / disc.sqrt();
    -(y1(a) + 2.0 / PI * k1(a)) * r / n as f64
}

/// `J_1(4π√(nx/D)) √(nx) / n`.
fn bessel_j_kernel(n: u64, x: f64, disc: f64) -> f64 {
    let r = (x * n as f64).sqrt();
    j1(4.0 * PI * r / disc.sqrt()) * r / n as f64
}

/// `sin(2πnx) / (πn)`.
fn sawtooth_kernel(n: u64, x: f64) -> f64 {
    // Reduce n·x mod 1 before scaling by 2π.
    let t = (n as f64 * x).rem_euclid(1.0);
    (2.0 * PI * t).sin() / (PI * n as f64)
}

/// Number of divisors of `n`.
fn divisor_count(n: u64) -> u64 {
    let mut count = 0;
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            count += if d * d == n { 1 } else { 2 };
        }
        d += 1;
    }
    count
}

/// `Σ_{d|n} χ_D(d)`.
fn quadratic_ideal_count(disc: i64, n: u64) -> u64 {
    let mut total: i64 = 0;
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            total += kronecker(disc, d) as i64;
            if d * d != n {
                total += kronecker(disc, n / d) as i64;
            }
        }
        d += 1;
    }
    total as u64
}

/// Summand `-(d(n)/n)(Y_1(4π√(xn)) + (2/π)K_1(4π√(xn)))√(xn)`.
pub fn series_term_rationals_m2(n: u64, x: f64) -> Result<f64> {
    check_nx(n, x)?;
    Ok(divisor_count(n) as f64 * bessel_yk_kernel(n, x, 1.0))
}

/// Summand of the real (`-[Y_1 + (2/π)K_1]`) or imaginary (`+J_1`) quadratic series.
pub fn series_term_quadratic(case: &IdentityCase, n: u64, x: f64) -> Result<f64> {
    check_nx(n, x)?;
    let FieldKind::Quadratic(d) = case.field.kind() else {
        return Err(Error::InvalidArgument(format!("{case} is not a quadratic case")));
    };
    let v = quadratic_ideal_count(d, n) as f64;
    let disc = d.unsigned_abs() as f64;
    match case.variant {
        IdentityVariant::RealQuadratic => Ok(v * bessel_yk_kernel(n, x, disc)),
        IdentityVariant::ImagQuadratic => Ok(v * bessel_j_kernel(n, x, disc)),
        _ => Err(Error::InvalidArgument(format!("{case} is not a quadratic case"))),
    }
}

/// A coefficient-free summand with its quadrature error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelValue {
    pub value: f64,
    pub error: f64,
}

/// `-(D/(2π)^d)^{m/2} G_{0,md}^{md/2,0}(- ; 1_{md/2-1}, 0, 1_{md/2} | (2π)^{dm} n x / D^m) / n`.
pub fn meijer_kernel(
    field: &FieldDescriptor,
    m: u32,
    n: u64,
    x: f64,
    controls: &QuadratureControls,
) -> Result<KernelValue> {
    check_nx(n, x)?;
    if field.r1() != 0 {
        return Err(field.unsupported(
            "series_term_meijer",
            "r1 > 0 puts the G-argument on a complex ray",
        ));
    }
    let d = field.degree() as usize;
    let q = m as usize * d;
    let k = q / 2;
    let mut b = vec![1.0; q];
    b[k - 1] = 0.0;
    let disc = field.abs_disc() as f64;
    let mf = m as f64;
    let ln_z = mf * (d as f64 * (2.0 * PI).ln() - disc.ln()) + (n as f64 * x).ln();
    let est = meijer_g(&GSpec::new(b, k, ln_z.exp())?, controls)?;
    let scale = -(disc / (2.0 * PI).powi(d as i32)).powf(mf / 2.0) / n as f64;
    Ok(KernelValue { value: scale * est.value, error: scale.abs() * est.error })
}

/// Purely imaginary summand `v_K^m(n) · meijer_kernel`, `v_K^m(n)` supplied.
pub fn series_term_meijer_with(
    field: &FieldDescriptor,
    m: u32,
    n: u64,
    coefficient: u64,
    x: f64,
    controls: &QuadratureControls,
) -> Result<KernelValue> {
    let k = meijer_kernel(field, m, n, x, controls)?;
    let c = coefficient as f64;
    Ok(KernelValue { value: c * k.value, error: c * k.error })
}

/// Purely imaginary summand for a quadratic field or `m`-th power thereof.
pub fn series_term_meijer(field: &FieldDescriptor, m: u32, n: u64, x: f64) -> Result<KernelValue> {
    let table = crate::arith::table::coeff_power(field, m, n)?;
    series_term_meijer_with(field, m, n, table.get(n), x, &QuadratureControls::default())
}

/// Coefficient-free summand of `case`; the coefficient multiplies it.
pub fn kernel(
    case: &IdentityCase,
    n: u64,
    x: f64,
    controls: &QuadratureControls,
) -> Result<KernelValue> {
    check_nx(n, x)?;
    let exact = |value| Ok(KernelValue { value, error: 0.0 });
    let disc = case.field.abs_disc() as f64;
    match case.variant {
        IdentityVariant::RationalsM2 | IdentityVariant::RealQuadratic => {
            exact(bessel_yk_kernel(n, x, disc))
        }
        IdentityVariant::RationalsM => match case.m {
            1 => exact(sawtooth_kernel(n, x)),
            2 => exact(bessel_yk_kernel(n, x, 1.0)),
            _ => Err(not_evaluated(case)),
        },
        IdentityVariant::ImagQuadratic => exact(bessel_j_kernel(n, x, disc)),
        IdentityVariant::PurelyImaginaryMeijer => meijer_kernel(&case.field, case.m, n, x, controls),
        IdentityVariant::TotallyRealSteen => Err(not_evaluated(case)),
    }
}

pub(crate) fn not_evaluated(case: &IdentityCase) -> Error {
    Error::NotEvaluated(format!(
        "the unsmoothed series of {case} has kernels at complex phases on the boundary of convergence; use the Riesz check"
    ))
}

fn check_nx(n: u64, x: f64) -> Result<()> {
    if n == 0 || !(x > 0.0 && x.is_finite()) {
        return Err(Error::InvalidArgument(format!("series term needs n >= 1 and x > 0 (n = {n}, x = {x})")));
    }
    Ok(())
}
