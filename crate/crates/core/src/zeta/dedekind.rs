//! Dirichlet `L`-functions, Dedekind zeta functions and their completions.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::arith::kronecker::character_table;
use crate::error::{Error, Result};
use crate::field::{is_fundamental_discriminant, FieldDescriptor, FieldKind};
use crate::special::gamma::ln_gamma;
use crate::zeta::hurwitz::{default_cutoff, hurwitz_regular_with_cutoff, riemann_zeta};

/// `L(s, χ_D) = q^{-s} Σ_{a=1}^{q} χ_D(a) ζ(s, a/q)`, `q = |D|`; entire.
pub fn dirichlet_l(s: Complex64, d: i64) -> Result<Complex64> {
    if !is_fundamental_discriminant(d) {
        return Err(Error::NotFundamental(d));
    }
    Ok(dirichlet_l_unchecked(s, d))
}

fn dirichlet_l_unchecked(s: Complex64, d: i64) -> Complex64 {
    let chi = character_table(d);
    let q = chi.len();
    let n = default_cutoff(s);
    // Σ χ(a) = 0, so the 1/(s-1) parts of ζ(s, a/q) cancel.
    let mut acc = Complex64::new(0.0, 0.0);
    for (a, &c) in chi.iter().enumerate().skip(1) {
        if c != 0 {
            acc += hurwitz_regular_with_cutoff(s, a as f64 / q as f64, n) * c as f64;
        }
    }
    acc * (-s * (q as f64).ln()).exp()
}

/// `L(0, χ_D) = -(1/q) Σ_{a=1}^{q} χ_D(a) a`, exactly as a finite sum.
pub fn dirichlet_l_at_zero(d: i64) -> Result<f64> {
    if !is_fundamental_discriminant(d) {
        return Err(Error::NotFundamental(d));
    }
    let chi = character_table(d);
    let q = chi.len() as i64;
    let s: i64 = chi
        .iter()
        .enumerate()
        .map(|(a, &c)| c as i64 * a as i64)
        .sum();
    Ok(-(s as f64) / q as f64)
}

/// `ζ_K(s)`: `ζ(s)` over the rationals, `ζ(s) L(s, χ_D)` over a quadratic field.
pub fn dedekind_zeta(field: &FieldDescriptor, s: Complex64) -> Result<Complex64> {
    match field.kind() {
        FieldKind::Rationals => riemann_zeta(s),
        FieldKind::Quadratic(d) => Ok(riemann_zeta(s)? * dirichlet_l_unchecked(s, d)),
        FieldKind::Generic => Err(field.unsupported(
            "dedekind_zeta",
            "only the rationals and quadratic fields can be evaluated",
        )),
    }
}

/// `ζ_K(0)`; exactly 0 when `r1 + r2 > 1`.
pub fn zeta_at_zero(field: &FieldDescriptor) -> Result<f64> {
    if field.r1() + field.r2() > 1 {
        return Ok(0.0);
    }
    match field.kind() {
        FieldKind::Rationals => Ok(-0.5),
        FieldKind::Quadratic(d) => Ok(-0.5 * dirichlet_l_at_zero(d)?),
        FieldKind::Generic => Err(field.unsupported(
            "zeta_at_zero",
            "value at 0 is unknown for a descriptor without a zeta backend",
        )),
    }
}

/// `log(D^{s/2} Γ_ℝ(s)^{r1} Γ_ℂ(s)^{r2})` with `Γ_ℝ(s) = π^{-s/2}Γ(s/2)`,
/// `Γ_ℂ(s) = 2(2π)^{-s}Γ(s)`.
fn ln_gamma_factor(field: &FieldDescriptor, s: Complex64) -> Result<Complex64> {
    let mut acc = s * 0.5 * (field.abs_disc() as f64).ln();
    if field.r1() > 0 {
        let g = -s * 0.5 * PI.ln() + ln_gamma(s * 0.5)?;
        acc += g * field.r1() as f64;
    }
    if field.r2() > 0 {
        let g = 2f64.ln() - s * (2.0 * PI).ln() + ln_gamma(s)?;
        acc += g * field.r2() as f64;
    }
    Ok(acc)
}

/// `Λ_K(s) = D_K^{s/2} Γ_ℝ(s)^{r1} Γ_ℂ(s)^{r2} ζ_K(s)`.
pub fn completed_lambda(field: &FieldDescriptor, s: Complex64) -> Result<Complex64> {
    if s == Complex64::new(0.0, 0.0) || s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole(format!("{s} (completed zeta)")));
    }
    let factor = ln_gamma_factor(field, s)?;
    Ok(factor.exp() * dedekind_zeta(field, s)?)
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Relative residual of the `m`-th power of the functional equation,
/// `ζ_K(w)^m = i^{m r1} D^{m/2} (2π)^{-m(r1+r2)} Σ_j (-1)^j C(m r1, j)
/// e^{iπ(2j - m r1) w/2} ((2π)^{dm}/D^m)^w Γ(1-w)^{m(r1+r2)} Γ(w)^{-m r2} ζ_K(1-w)^m`.
pub fn functional_equation_power_check(
    field: &FieldDescriptor,
    m: u32,
    w: Complex64,
) -> Result<f64> {
    if m == 0 {
        return Err(Error::InvalidArgument("power m must be at least 1".into()));
    }
    let (r1, r2, d) = (field.r1(), field.r2(), field.degree());
    let disc = field.abs_disc() as f64;
    let mf = m as f64;
    let one = Complex64::new(1.0, 0.0);
    let lhs = dedekind_zeta(field, w)?.powu(m);
    let zeta_reflected = dedekind_zeta(field, one - w)?.powu(m);
    let ln_gammas = ln_gamma(one - w)? * (mf * (r1 + r2) as f64) - ln_gamma(w)? * (mf * r2 as f64);
    let ln_scale = w * (d as f64 * mf * (2.0 * PI).ln() - mf * disc.ln());
    let mr1 = m * r1;
    let mut phases = Complex64::new(0.0, 0.0);
    for j in 0..=mr1 {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let ph = (Complex64::i() * (PI / 2.0) * (2.0 * j as f64 - mr1 as f64) * w).exp();
        phases += ph * (sign * binomial(mr1, j));
    }
    let i_power = Complex64::i().powu(mr1);
    let prefactor = i_power * disc.powf(mf / 2.0) / (2.0 * PI).powf(mf * (r1 + r2) as f64);
    let rhs = prefactor * phases * (ln_scale + ln_gammas).exp() * zeta_reflected;
    Ok((lhs - rhs).norm() / lhs.norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::table::sieve_vk;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn gaussian_l_values() {
        let l1 = dirichlet_l(c(1.0, 0.0), -4).unwrap();
        // Leibniz series, averaged over consecutive partial sums.
        let mut s = 0.0;
        let mut prev = 0.0;
        for k in 0..2_000_000u64 {
            prev = s;
            let t = 1.0 / (2 * k + 1) as f64;
            s += if k % 2 == 0 { t } else { -t };
        }
        let leibniz = 0.5 * (s + prev);
        assert!((l1.re - leibniz).abs() < 1e-12);
        assert!((l1.re - PI / 4.0).abs() < 1e-14);
        let catalan = dirichlet_l(c(2.0, 0.0), -4).unwrap();
        let direct: f64 = (0..200_000u64)
            .rev()
            .map(|k| {
                let t = 1.0 / ((2 * k + 1) as f64).powi(2);
                if k % 2 == 0 {
                    t
                } else {
                    -t
                }
            })
            .sum();
        assert!((catalan.re - direct).abs() < 1e-10);
        assert!((catalan.re - 0.915_965_594_177_219).abs() < 1e-14);
        assert!(dirichlet_l(c(1.0, 0.0), 9).is_err());
    }

    #[test]
    fn frozen_l_values() {
        // 30-digit reference values.
        let v = dirichlet_l(c(0.4, 3.0), 5).unwrap();
        let exact = c(1.588_406_709_052_112_3, 1.126_006_021_092_014_5);
        assert!((v - exact).norm() <= 1e-10 * exact.norm(), "{v}");
        let v = dirichlet_l(c(0.5, 20.0), -3).unwrap();
        let exact = c(0.761_283_344_071_629_5, -0.314_750_886_744_071_4);
        assert!((v - exact).norm() <= 1e-10 * exact.norm(), "{v}");
    }

    #[test]
    fn values_at_zero() {
        assert_eq!(dirichlet_l_at_zero(-4).unwrap(), 0.5);
        assert_eq!(dirichlet_l_at_zero(-3).unwrap(), 1.0 / 3.0);
        let q = FieldDescriptor::rationals();
        assert_eq!(zeta_at_zero(&q).unwrap(), -0.5);
        assert_eq!(zeta_at_zero(&FieldDescriptor::gaussian()).unwrap(), -0.25);
        assert_eq!(zeta_at_zero(&FieldDescriptor::quadratic(5).unwrap()).unwrap(), 0.0);
        let evaluated = dedekind_zeta(&FieldDescriptor::gaussian(), c(0.0, 0.0)).unwrap();
        assert!((evaluated.re + 0.25).abs() < 1e-14);
        let generic = FieldDescriptor::generic(3, 1, 1, -23).unwrap();
        assert_eq!(zeta_at_zero(&generic).unwrap(), 0.0);
        assert!(zeta_at_zero(&FieldDescriptor::generic(2, 0, 1, -7).unwrap()).is_err());
    }

    #[test]
    fn dedekind_values() {
        let gi = FieldDescriptor::gaussian();
        let v = dedekind_zeta(&gi, c(2.0, 0.0)).unwrap();
        let product = (PI * PI / 6.0) * 0.915_965_594_177_219;
        assert!((v.re - product).abs() < 1e-14);
        assert!((v.re - 1.506_703_009_922_985).abs() < 1e-13);
        let r5 = FieldDescriptor::quadratic(5).unwrap();
        let t = sieve_vk(&r5, 1_000_000).unwrap();
        let direct: f64 = (1..=1_000_000u64)
            .rev()
            .map(|n| t.get(n) as f64 / (n as f64).powi(3))
            .sum();
        let v = dedekind_zeta(&r5, c(3.0, 0.0)).unwrap();
        assert!((v.re - direct).abs() < 1e-9);
        let q = FieldDescriptor::rationals();
        assert_eq!(dedekind_zeta(&q, c(0.3, 7.0)).unwrap(), riemann_zeta(c(0.3, 7.0)).unwrap());
    }

    #[test]
    fn completed_symmetry_examples() {
        let one = c(1.0, 0.0);
        let cases = [
            (FieldDescriptor::rationals(), c(0.3, 2.0)),
            (FieldDescriptor::gaussian(), c(-0.2, 5.0)),
        ];
        for (f, s) in cases {
            let a = completed_lambda(&f, s).unwrap();
            let b = completed_lambda(&f, one - s).unwrap();
            assert!((a - b).norm() <= 1e-10 * a.norm().max(1e-300), "{f}: {a} {b}");
        }
        let v = completed_lambda(&FieldDescriptor::quadratic(5).unwrap(), c(2.0, 0.0)).unwrap();
        assert!(v.re > 0.0 && v.im.abs() < 1e-15 * v.re);
        assert!(completed_lambda(&FieldDescriptor::rationals(), c(1.0, 0.0)).is_err());
        assert!(completed_lambda(&FieldDescriptor::rationals(), c(-2.0, 0.0)).is_err());
    }

    #[test]
    fn power_functional_equation_examples() {
        let r = functional_equation_power_check(&FieldDescriptor::rationals(), 1, c(0.5, 3.0)).unwrap();
        assert!(r <= 1e-10, "{r}");
        let r = functional_equation_power_check(&FieldDescriptor::gaussian(), 2, c(0.3, 1.7)).unwrap();
        assert!(r <= 1e-10, "{r}");
        let r = functional_equation_power_check(&FieldDescriptor::quadratic(5).unwrap(), 1, c(0.25, 0.0))
            .unwrap();
        assert!(r <= 1e-10, "{r}");
    }
}
