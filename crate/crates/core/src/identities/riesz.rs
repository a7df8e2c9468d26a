//! The Riesz-smoothed identity: direct sum = residues + vertical integral.
//!
//! The integrand is `f(w) = ζ_K(w)^m x^{ρ+w} / (w(w+1)…(w+ρ))` on `Re w = μ`.
//! By conjugate symmetry only the upper half is integrated. Above height `T0`
//! the path turns right to `Re w = C`, where the Dirichlet series converges
//! absolutely; the remaining vertical ray is integrated term by term in closed
//! form through `E_1`.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::arith::sums::riesz_direct;
use crate::arith::table::coeff_power;
use crate::error::{Error, Result};
use crate::field::FieldDescriptor;
use crate::identities::evaluate::AnalyticData;
use crate::quadrature::GaussLegendre;
use crate::rational::PositiveRational;
use crate::special::expint::e1;
use crate::zeta::dedekind::dedekind_zeta;
use crate::zeta::laurent::LaurentData;

/// Contour and truncation parameters of the vertical integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RieszControls {
    /// Height `T0` where the path leaves `Re w = μ`.
    pub turn_height: f64,
    /// Abscissa `C > 1` of the closed-form ray.
    pub ray_abscissa: f64,
    /// Maximal Gauss–Legendre panel width.
    pub panel_width: f64,
    /// Initial number of Dirichlet-series terms on the ray.
    pub ray_terms: u64,
    /// Cap on the number of ray terms.
    pub max_ray_terms: u64,
    /// Target for the ray truncation bound, relative to `x^{ρ+1}/(ρ+1)!`.
    pub ray_tolerance: f64,
}

impl Default for RieszControls {
    fn default() -> Self {
        Self {
            turn_height: 30.0,
            ray_abscissa: 3.0,
            panel_width: 0.5,
            ray_terms: 4096,
            max_ray_terms: 1 << 20,
            ray_tolerance: 1e-12,
        }
    }
}

/// Vertical integral with its error bar.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerticalIntegral {
    pub value: f64,
    /// Quadrature difference between orders 16 and 32 plus the ray truncation bound.
    pub error: f64,
    pub ray_terms: u64,
}

/// `md(1 - μ)/2 + 1`.
pub fn required_order(field: &FieldDescriptor, m: u32, mu: f64) -> f64 {
    (m * field.degree()) as f64 * (1.0 - mu) / 2.0 + 1.0
}

fn check_assumption(field: &FieldDescriptor, m: u32, rho: u32, mu: f64) -> Result<()> {
    let required = required_order(field, m, mu);
    if !(mu > -1.0 && mu < 0.0) || (rho as f64) < required || m == 0 {
        return Err(Error::OrderAssumption { rho, required, mu });
    }
    Ok(())
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// `1 / (w(w+1)…(w+ρ))`.
fn rising_inverse(w: Complex64, rho: u32) -> Complex64 {
    let mut p = w;
    for i in 1..=rho {
        p *= w + i as f64;
    }
    p.inv()
}

/// `(1/2πi)∫_{(μ)} ζ_K(w)^m x^{ρ+w} Γ(w)/Γ(w+ρ+1) dw`.
pub fn smoothed_vertical_integral(
    field: &FieldDescriptor,
    m: u32,
    rho: u32,
    mu: f64,
    x: f64,
    controls: &RieszControls,
) -> Result<VerticalIntegral> {
    check_assumption(field, m, rho, mu)?;
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::InvalidArgument(format!("x must be positive, got {x}")));
    }
    let t0 = controls.turn_height;
    let c = controls.ray_abscissa;
    if !(t0 > 0.0 && c > 1.0 && controls.panel_width > 0.0) {
        return Err(Error::InvalidArgument("turn height, ray abscissa and panel width must be positive, C > 1".into()));
    }
    let ln_x = x.ln();
    let f = |w: Complex64| -> Result<Complex64> {
        let z = dedekind_zeta(field, w)?.powu(m);
        Ok(z * ((rho as f64 + w) * ln_x).exp() * rising_inverse(w, rho))
    };
    let vertical = |t: f64| f(Complex64::new(mu, t));
    let horizontal = |s: f64| f(Complex64::new(s, t0));
    let coarse = GaussLegendre::new(16);
    let fine = GaussLegendre::new(32);
    let two_pi = 2.0 * std::f64::consts::PI;
    let i = Complex64::i();
    let segment = |a: f64, b: f64, g: &(dyn Fn(f64) -> Result<Complex64> + Sync)| -> Result<(Complex64, f64)> {
        let panels = ((b - a) / controls.panel_width).ceil().max(1.0) as usize;
        let h = (b - a) / panels as f64;
        let sums: Vec<(Complex64, Complex64)> = (0..panels)
            .into_par_iter()
            .map(|p| {
                let lo = a + p as f64 * h;
                let hi = lo + h;
                Ok((panel(&coarse, lo, hi, g)?, panel(&fine, lo, hi, g)?))
            })
            .collect::<Result<_>>()?;
        let (mut lo_acc, mut hi_acc) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
        for (l, h) in sums {
            lo_acc += l;
            hi_acc += h;
        }
        Ok((hi_acc, (hi_acc - lo_acc).norm()))
    };
    let (up, up_err) = segment(0.0, t0, &vertical)?;
    let (across, across_err) = segment(mu, c, &horizontal)?;
    let quad = up / two_pi + across / (two_pi * i);
    let quad_err = up_err / two_pi + across_err / two_pi;

    // Partial fractions 1/(w…(w+ρ)) = Σ_j A_j/(w+j).
    let weights: Vec<f64> = (0..=rho)
        .map(|j| {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            sign / (factorial(j) * factorial(rho - j))
        })
        .collect();
    let zeta_c = dedekind_zeta(field, Complex64::new(c, 0.0))?.re.powi(m as i32);
    let g_abs = rising_inverse(Complex64::new(c, t0), rho).norm();
    let scale = x.powi(rho as i32 + 1) / factorial(rho + 1);
    let mut terms = controls.ray_terms.max(x.ceil() as u64 + 1);
    loop {
        let table = coeff_power(field, m, terms)?;
        let head: f64 = (1..=terms)
            .rev()
            .map(|n| table.get(n) as f64 * (n as f64).powf(-c))
            .sum();
        let remainder = (zeta_c - head).max(0.0) + 1e-15 * zeta_c;
        let log_gap = ((terms + 1) as f64 / x).ln();
        let bound = 2.0 * x.powf(rho as f64 + c) * remainder * 2.0 * g_abs / (two_pi * log_gap);
        if bound <= controls.ray_tolerance * scale || terms >= controls.max_ray_terms {
            let ray = ray_sum(&table, terms, x, rho, c, t0, &weights) * x.powi(rho as i32) / (two_pi * i);
            let value = 2.0 * (quad + ray).re;
            return Ok(VerticalIntegral {
                value,
                error: 2.0 * quad_err + bound,
                ray_terms: terms,
            });
        }
        terms = (terms * 2).min(controls.max_ray_terms);
    }
}

fn panel(
    rule: &GaussLegendre,
    a: f64,
    b: f64,
    g: &(dyn Fn(f64) -> Result<Complex64> + Sync),
) -> Result<Complex64> {
    let mut failure = None;
    let v = rule.integrate(a, b, |t| match g(t) {
        Ok(v) => v,
        Err(e) => {
            failure.get_or_insert(e);
            Complex64::new(0.0, 0.0)
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(v),
    }
}

/// `Σ_{n≤N} a_n Σ_j A_j e^{-λ_n j} E_1(-λ_n (C + j + iT0))`, `λ_n = log(x/n)`;
/// at `λ_n = 0` the inner sum is `-Σ_j A_j log(C + j + iT0)`.
fn ray_sum(
    table: &crate::arith::table::CoefficientTable,
    terms: u64,
    x: f64,
    rho: u32,
    c: f64,
    t0: f64,
    weights: &[f64],
) -> Complex64 {
    let parts: Vec<Complex64> = (1..=terms)
        .into_par_iter()
        .map(|n| {
            let a = table.get(n);
            if a == 0 {
                return Complex64::new(0.0, 0.0);
            }
            let lambda = (x / n as f64).ln();
            let mut inner = Complex64::new(0.0, 0.0);
            for j in 0..=rho {
                let v0 = Complex64::new(c + j as f64, t0);
                inner += if lambda == 0.0 {
                    -v0.ln() * weights[j as usize]
                } else {
                    e1(-lambda * v0) * (weights[j as usize] * (-lambda * j as f64).exp())
                };
            }
            inner * a as f64
        })
        .collect();
    parts.into_iter().sum()
}

/// Residue at `w = 1` of `ζ_K(w)^m x^{ρ+w} Γ(w)/Γ(w+ρ+1)`:
/// `Σ_{k=1}^{m} c_{-k} h_{k-1}` with `h_j` the Taylor coefficients of
/// `x^{ρ+1} e^{u log x} Π_{i=0}^{ρ} (i+1+u)^{-1}` at `u = 0`.
pub fn residue_at_one(laurent: &LaurentData, rho: u32, x: f64) -> f64 {
    let m = laurent.pole_order() as usize;
    let l = x.ln();
    let mut h = vec![0.0; m];
    h[0] = 1.0;
    for j in 1..m {
        h[j] = h[j - 1] * l / j as f64;
    }
    for i in 0..=rho {
        let r = 1.0 / (i + 1) as f64;
        // Multiply by r Σ_j (-r u)^j.
        let mut next = vec![0.0; m];
        for (deg, slot) in next.iter_mut().enumerate() {
            let mut acc = 0.0;
            let mut p = r;
            for k in 0..=deg {
                acc += h[deg - k] * p;
                p *= -r;
            }
            *slot = acc;
        }
        h = next;
    }
    let lead = x.powi(rho as i32 + 1);
    (1..=m)
        .map(|k| laurent.coeff(-(k as i64)).unwrap().re * h[k - 1] * lead)
        .sum()
}

/// Outcome of a Riesz-smoothed check.
#[derive(Debug, Clone, PartialEq)]
pub struct RieszCheckReport {
    pub field: FieldDescriptor,
    pub m: u32,
    pub rho: u32,
    pub mu: f64,
    pub x: PositiveRational,
    pub direct: f64,
    pub residue_side: f64,
    pub vertical_integral: f64,
    pub discrepancy: f64,
    pub quadrature_error_bar: f64,
}

impl RieszCheckReport {
    /// `discrepancy ≤ max(rel_tol·|direct|, error bar)`.
    pub fn passes(&self, rel_tol: f64) -> bool {
        self.discrepancy <= (rel_tol * self.direct.abs()).max(self.quadrature_error_bar)
    }
}

/// Compares the direct Riesz sum with the residues plus the vertical integral.
pub fn riesz_check(
    field: &FieldDescriptor,
    m: u32,
    rho: u32,
    mu: f64,
    x: &PositiveRational,
    controls: &RieszControls,
) -> Result<RieszCheckReport> {
    check_assumption(field, m, rho, mu)?;
    let table = coeff_power(field, m, x.floor().max(1))?;
    let direct = riesz_direct(&table, rho, x)?.value;
    let analytic = AnalyticData::for_field(field, m)?;
    let xf = x.to_f64();
    let at_zero = analytic.zeta_at_zero.powi(m as i32) * xf.powi(rho as i32) / factorial(rho);
    let residue_side = at_zero + residue_at_one(&analytic.laurent, rho, xf);
    let v = smoothed_vertical_integral(field, m, rho, mu, xf, controls)?;
    Ok(RieszCheckReport {
        field: *field,
        m,
        rho,
        mu,
        x: *x,
        direct,
        residue_side,
        vertical_integral: v.value,
        discrepancy: (direct - residue_side - v.value).abs(),
        quadrature_error_bar: v.error,
    })
}
