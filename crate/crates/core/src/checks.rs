//! Invariant suite behind `selftest`: each check reduces to a worst residual
//! over a seeded random or fixed grid.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::arith::sums::riesz_direct;
use crate::arith::table::{coeff_power, CoefficientTable};
use crate::error::{Error, Result};
use crate::field::FieldDescriptor;
use crate::quadrature::GaussLegendre;
use crate::rational::PositiveRational;
use crate::special::bessel::{i0, i1, j1, k0, k1};
use crate::special::bessel_complex::bessel_interconnect_check;
use crate::special::gamma::ln_gamma;
use crate::special::meijer::{meijer_g, GSpec, QuadratureControls};
use crate::zeta::dedekind::{completed_lambda, functional_equation_power_check};

/// Environment variable that replaces every tolerance when set.
pub const TOLERANCE_ENV: &str = "PILTZ_SELFTEST_TOLERANCE";

const SEED: u64 = 0x5eed_2024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckGroup {
    Gamma,
    Zeta,
    Meijer,
    Bessel,
    Riesz,
}

impl CheckGroup {
    pub const ALL: [CheckGroup; 5] = [Self::Gamma, Self::Zeta, Self::Meijer, Self::Bessel, Self::Riesz];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Gamma => "gamma",
            Self::Zeta => "zeta",
            Self::Meijer => "meijer",
            Self::Bessel => "bessel",
            Self::Riesz => "riesz",
        }
    }
}

impl fmt::Display for CheckGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|g| g.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check group `{s}`")))
    }
}

/// Worst residual of one check against its tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub group: CheckGroup,
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.residual <= self.tolerance
    }
}

/// Runs the requested groups; `tolerance` replaces every default tolerance.
pub fn run_checks(groups: &[CheckGroup], tolerance: Option<f64>) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for &group in groups {
        let found = match group {
            CheckGroup::Gamma => gamma_checks()?,
            CheckGroup::Zeta => zeta_checks()?,
            CheckGroup::Meijer => meijer_checks()?,
            CheckGroup::Bessel => bessel_checks(),
            CheckGroup::Riesz => riesz_checks()?,
        };
        for (name, residual, default) in found {
            out.push(CheckOutcome {
                group,
                name,
                residual,
                tolerance: tolerance.unwrap_or(default),
            });
        }
    }
    Ok(out)
}

type Found = Vec<(String, f64, f64)>;

fn near_pole(z: Complex64) -> bool {
    z.im.abs() < 0.1 && z.re < 0.5 && (z.re - z.re.round()).abs() < 0.1
}

/// Non-integer complex points with `|z| ≤ radius`.
fn random_disc(rng: &mut StdRng, count: usize, radius: f64, reject: impl Fn(Complex64) -> bool) -> Vec<Complex64> {
    let mut pts = Vec::with_capacity(count);
    while pts.len() < count {
        let z = Complex64::new(rng.gen_range(-radius..radius), rng.gen_range(-radius..radius));
        if z.norm() <= radius && !reject(z) {
            pts.push(z);
        }
    }
    pts
}

/// `Γ(z)` from the Stirling region by the upward recurrence alone.
fn gamma_by_recurrence(z: Complex64) -> Result<Complex64> {
    let shift = (20.0 - z.re).max(0.0).ceil() as u32;
    let mut denom = Complex64::new(1.0, 0.0);
    for k in 0..shift {
        denom *= z + k as f64;
    }
    Ok(ln_gamma(z + shift as f64)?.exp() / denom)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

/// Reflection, duplication and `Γ(z+1) = zΓ(z)` on 50 random points, `|z| ≤ 20`.
pub fn gamma_checks() -> Result<Found> {
    let mut rng = StdRng::seed_from_u64(SEED);
    let one = Complex64::new(1.0, 0.0);
    let pts = random_disc(&mut rng, 50, 20.0, |z| near_pole(z) || near_pole(one - z) || near_pole(2.0 * z));
    let (mut refl, mut dup, mut rec) = (0.0f64, 0.0f64, 0.0f64);
    for z in pts {
        // Γ(z)Γ(1-z) sin(πz) = π, each factor by recurrence from the right half-plane.
        let lhs = gamma_by_recurrence(z)? * gamma_by_recurrence(one - z)? * (z * PI).sin();
        refl = refl.max(rel(lhs, Complex64::new(PI, 0.0)));
        let d = ln_gamma(z)? + ln_gamma(z + 0.5)? - (one - 2.0 * z) * 2f64.ln() - 0.5 * PI.ln() - ln_gamma(2.0 * z)?;
        dup = dup.max((d.exp() - one).norm());
        let r = ln_gamma(z + 1.0)? - z.ln() - ln_gamma(z)?;
        rec = rec.max((r.exp() - one).norm());
    }
    let special = [
        (ln_gamma(one)?.norm()),
        ((ln_gamma(Complex64::new(0.5, 0.0))? - Complex64::new(0.5 * PI.ln(), 0.0)).norm()),
        ((ln_gamma(Complex64::new(5.0, 0.0))? - Complex64::new(24f64.ln(), 0.0)).norm()),
    ]
    .into_iter()
    .fold(0.0, f64::max);
    Ok(vec![
        ("reflection".into(), refl, 1e-10),
        ("duplication".into(), dup, 1e-10),
        ("recurrence".into(), rec, 1e-10),
        ("special values".into(), special, 1e-14),
    ])
}

/// Fields with a zeta backend.
pub fn standard_fields() -> [FieldDescriptor; 3] {
    [
        FieldDescriptor::rationals(),
        FieldDescriptor::gaussian(),
        FieldDescriptor::quadratic(5).expect("5 is fundamental"),
    ]
}

/// Worst `|Λ(s) - Λ(1-s)|/|Λ(s)|` over 20 random `s` with `-1/2 ≤ Re s ≤ 3/2`, `1 ≤ |Im s| ≤ 25`.
pub fn lambda_symmetry(field: &FieldDescriptor, seed: u64) -> Result<f64> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let t = rng.gen_range(1.0..25.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let s = Complex64::new(rng.gen_range(-0.5..1.5), t);
        let a = completed_lambda(field, s)?;
        let b = completed_lambda(field, Complex64::new(1.0, 0.0) - s)?;
        worst = worst.max((a - b).norm() / a.norm());
    }
    Ok(worst)
}

/// Worst power functional-equation residual over 10 random `w` in the critical strip.
pub fn power_equation_residual(field: &FieldDescriptor, m: u32, seed: u64) -> Result<f64> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..10 {
        let w = Complex64::new(rng.gen_range(0.05..0.95), rng.gen_range(-15.0..15.0));
        worst = worst.max(functional_equation_power_check(field, m, w)?);
    }
    Ok(worst)
}

/// The `(field, m)` pairs of the power functional-equation suite.
pub fn power_equation_cases() -> Vec<(FieldDescriptor, u32)> {
    let [q, gi, r5] = standard_fields();
    vec![(q, 1), (q, 2), (q, 3), (gi, 1), (gi, 2), (r5, 1)]
}

fn zeta_checks() -> Result<Found> {
    let mut out = Found::new();
    for (i, f) in standard_fields().iter().enumerate() {
        out.push((format!("lambda symmetry {f}"), lambda_symmetry(f, SEED + i as u64)?, 1e-10));
    }
    for (i, (f, m)) in power_equation_cases().into_iter().enumerate() {
        out.push((format!("power equation {f} m={m}"), power_equation_residual(&f, m, SEED + 100 + i as u64)?, 1e-10));
    }
    Ok(out)
}

/// Closed forms of the three reductions to elementary or Bessel functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reduction {
    /// `G_{0,2}^{1,0}(- ; 1, 0 | z) = z^{1/2} J_1(2√z)`.
    J1,
    /// `G_{0,2}^{2,0}(- ; 1, 0 | z) = 2 z^{1/2} K_1(2√z)`.
    K1,
    /// `G_{0,1}^{1,0}(- ; 0 | z) = e^{-z}`.
    Exp,
}

impl Reduction {
    pub const ALL: [Reduction; 3] = [Self::J1, Self::K1, Self::Exp];

    pub fn spec(&self, z: f64) -> Result<GSpec> {
        match self {
            Self::J1 => GSpec::new(vec![1.0, 0.0], 1, z),
            Self::K1 => GSpec::new(vec![1.0, 0.0], 2, z),
            Self::Exp => GSpec::new(vec![0.0], 1, z),
        }
    }

    pub fn closed_form(&self, z: f64) -> f64 {
        let r = z.sqrt();
        match self {
            Self::J1 => r * j1(2.0 * r),
            Self::K1 => 2.0 * r * k1(2.0 * r),
            Self::Exp => (-z).exp(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::J1 => "G to J1",
            Self::K1 => "G to K1",
            Self::Exp => "G to exp",
        }
    }
}

/// 20 log-spaced points in `[10^-2, 10^2]`.
pub fn log_grid() -> Vec<f64> {
    (0..20).map(|i| 10f64.powf(-2.0 + 4.0 * i as f64 / 19.0)).collect()
}

/// Worst relative deviation of `meijer_g` from the closed form on [`log_grid`].
pub fn reduction_residual(r: Reduction) -> Result<f64> {
    let controls = QuadratureControls::default();
    let mut worst = 0.0f64;
    for z in log_grid() {
        let exact = r.closed_form(z);
        let got = meijer_g(&r.spec(z)?, &controls)?;
        worst = worst.max((got.value - exact).abs() / exact.abs());
    }
    Ok(worst)
}

fn meijer_checks() -> Result<Found> {
    let mut out = Found::new();
    for r in Reduction::ALL {
        out.push((r.name().into(), reduction_residual(r)?, 1e-8));
    }
    Ok(out)
}

fn bessel_checks() -> Found {
    let mut interconnect = 0.0f64;
    let mut negative_y = 0.0f64;
    for x in [0.1, 1.0, 10.0] {
        let r = bessel_interconnect_check(x);
        interconnect = interconnect.max(r.max_core());
        negative_y = negative_y.max(r.y_of_minus_x);
    }
    let wronskian = [0.5, 1.0, 5.0]
        .into_iter()
        .map(|x| ((i1(x) * k0(x) + i0(x) * k1(x)) * x - 1.0).abs())
        .fold(0.0, f64::max);
    vec![
        ("imaginary and negative arguments".into(), interconnect, 1e-8),
        ("Y at negative argument, arg = pi".into(), negative_y, 1e-8),
        ("I-K Wronskian".into(), wronskian, 1e-12),
    ]
}

/// `|A'_h(x) - ρ A^{ρ-1}(x)|` for `h = 1/8, 1/16, 1/32` at `x = 21/2`, with
/// `A^ρ` the unnormalized Riesz sum; returns the three errors.
pub fn riesz_derivative_errors(table: &CoefficientTable, rho: u32) -> Result<[f64; 3]> {
    let x = PositiveRational::new(21, 2)?;
    let scale = |r: u32| (1..=r).map(f64::from).product::<f64>();
    let target = rho as f64 * riesz_direct(table, rho - 1, &x)?.value * scale(rho - 1);
    let mut errs = [0.0; 3];
    for (slot, den) in errs.iter_mut().zip([16u64, 32, 64]) {
        let step = PositiveRational::new(1, den)?;
        let up = x.checked_add(&step).expect("positive");
        let down = x.checked_sub(&step).expect("positive");
        let h = 1.0 / den as f64;
        let diff = (riesz_direct(table, rho, &up)?.value - riesz_direct(table, rho, &down)?.value) * scale(rho)
            / (2.0 * h);
        *slot = (diff - target).abs();
    }
    Ok(errs)
}

/// `ρ! · riesz_direct` against `ρ ∫_0^x (x-t)^{ρ-1} A(t) dt` integrated panel by
/// panel between integers; returns the relative deviation.
pub fn riesz_integral_residual(table: &CoefficientTable, rho: u32, x: &PositiveRational) -> Result<f64> {
    let xf = x.to_f64();
    let rule = GaussLegendre::new(8);
    let mut partial = 0.0;
    let mut integral = 0.0;
    let mut k = 0u64;
    while (k as f64) < xf {
        if k >= 1 {
            partial += table.get(k) as f64;
        }
        let hi = ((k + 1) as f64).min(xf);
        integral += partial * rule.integrate(k as f64, hi, |t: f64| (xf - t).powi(rho as i32 - 1));
        k += 1;
    }
    integral *= rho as f64;
    let direct = riesz_direct(table, rho, x)?.value * (1..=rho).map(f64::from).product::<f64>();
    Ok((direct - integral).abs() / direct.abs())
}

fn riesz_checks() -> Result<Found> {
    let table = coeff_power(&FieldDescriptor::rationals(), 2, 64)?;
    let mut out = Found::new();
    for rho in [2u32, 3] {
        let e = riesz_derivative_errors(&table, rho)?;
        // Second-order decay: each halving of h divides the error by about 4.
        let order = e.iter().all(|v| *v <= 1e-9) || (e[1] <= e[0] / 3.5 && e[2] <= e[1] / 3.5);
        out.push((format!("riesz derivative rho={rho}"), if order { e[2] } else { f64::INFINITY }, 1e-2));
    }
    for rho in [1u32, 2] {
        let x = PositiveRational::new(103, 4)?;
        out.push((format!("integral representation rho={rho}"), riesz_integral_residual(&table, rho, &x)?, 1e-6));
    }
    Ok(out)
}
