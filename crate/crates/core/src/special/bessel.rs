//! Bessel functions `J, Y, I, K` of orders 0 and 1 at positive real argument.
//!
//! `J` and `Y` use the power series below 8, Gauss–Legendre quadrature of
//! the Bessel and Schläfli integrals on `[8, 25)`, and the Hankel expansion
//! above. `I` uses the series up to 30, `K` the series up to 2 and the
//! trapezoid rule on `∫ e^{-x cosh t} cosh νt dt` up to 25; both switch to
//! their asymptotic expansions beyond.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::quadrature::GaussLegendre;

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const SERIES_JY: f64 = 8.0;
const ASYMPTOTIC_JY: f64 = 25.0;
const SERIES_I: f64 = 30.0;
const SERIES_K: f64 = 2.0;
const ASYMPTOTIC_K: f64 = 25.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BesselKind {
    J,
    Y,
    I,
    K,
}

/// Checked entry point: `order ∈ {0, 1}`, `x > 0`.
pub fn bessel(kind: BesselKind, order: u32, x: f64) -> Result<f64> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "Bessel argument must be positive and finite, got {x}"
        )));
    }
    let v = match (kind, order) {
        (BesselKind::J, 0) => j0(x),
        (BesselKind::J, 1) => j1(x),
        (BesselKind::Y, 0) => y0(x),
        (BesselKind::Y, 1) => y1(x),
        (BesselKind::I, 0) => i0(x),
        (BesselKind::I, 1) => i1(x),
        (BesselKind::K, 0) => k0(x),
        (BesselKind::K, 1) => k1(x),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "Bessel order must be 0 or 1, got {order}"
            )))
        }
    };
    Ok(v)
}

pub fn j0(x: f64) -> f64 {
    jy(0, x).0
}

pub fn j1(x: f64) -> f64 {
    jy(1, x).0
}

pub fn y0(x: f64) -> f64 {
    jy(0, x).1
}

pub fn y1(x: f64) -> f64 {
    jy(1, x).1
}

pub fn i0(x: f64) -> f64 {
    if x <= SERIES_I {
        i_series(0, x)
    } else {
        i_scaled_asymptotic(0, x) * x.exp()
    }
}

pub fn i1(x: f64) -> f64 {
    if x <= SERIES_I {
        i_series(1, x)
    } else {
        i_scaled_asymptotic(1, x) * x.exp()
    }
}

/// `e^{-x} I_0(x)`.
pub fn i0_scaled(x: f64) -> f64 {
    if x <= SERIES_I {
        i_series(0, x) * (-x).exp()
    } else {
        i_scaled_asymptotic(0, x)
    }
}

/// `e^{-x} I_1(x)`.
pub fn i1_scaled(x: f64) -> f64 {
    if x <= SERIES_I {
        i_series(1, x) * (-x).exp()
    } else {
        i_scaled_asymptotic(1, x)
    }
}

pub fn k0(x: f64) -> f64 {
    if x <= SERIES_K {
        k_series(0, x)
    } else {
        k_scaled(0, x) * (-x).exp()
    }
}

pub fn k1(x: f64) -> f64 {
    if x <= SERIES_K {
        k_series(1, x)
    } else {
        k_scaled(1, x) * (-x).exp()
    }
}

/// `e^{x} K_0(x)`.
pub fn k0_scaled(x: f64) -> f64 {
    if x <= SERIES_K {
        k_series(0, x) * x.exp()
    } else {
        k_scaled(0, x)
    }
}

/// `e^{x} K_1(x)`.
pub fn k1_scaled(x: f64) -> f64 {
    if x <= SERIES_K {
        k_series(1, x) * x.exp()
    } else {
        k_scaled(1, x)
    }
}

fn jy(n: u32, x: f64) -> (f64, f64) {
    debug_assert!(x > 0.0);
    if x < SERIES_JY {
        (j_series(n, x), y_series(n, x))
    } else if x < ASYMPTOTIC_JY {
        jy_integral(n, x)
    } else {
        jy_hankel(n, x)
    }
}

/// `Σ_k (-1)^k (x/2)^{2k+n} / (k! (k+n)!)`.
fn j_series(n: u32, x: f64) -> f64 {
    let h = 0.5 * x;
    let q = -h * h;
    let mut term = if n == 0 { 1.0 } else { h };
    let mut sum = term;
    for k in 1..200 {
        term *= q / (k as f64 * (k + n as usize) as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

fn y_series(n: u32, x: f64) -> f64 {
    let h = 0.5 * x;
    let q = -h * h;
    let log_term = (2.0 / PI) * h.ln();
    if n == 0 {
        // Σ_{k≥1} (-1)^{k+1} H_k (x²/4)^k / (k!)².
        let mut term = 1.0;
        let mut harmonic = 0.0;
        let mut sum = 0.0;
        for k in 1..200 {
            term *= q / (k * k) as f64;
            harmonic += 1.0 / k as f64;
            let t = -term * harmonic;
            sum += t;
            if t.abs() < 1e-17 * sum.abs() {
                break;
            }
        }
        (log_term + (2.0 / PI) * EULER_GAMMA) * j_series(0, x) + (2.0 / PI) * sum
    } else {
        // Σ_{k≥0} (-1)^k (ψ(k+1) + ψ(k+2)) (x/2)^{2k+1} / (k! (k+1)!).
        let mut term = h;
        let mut psi1 = -EULER_GAMMA;
        let mut psi2 = 1.0 - EULER_GAMMA;
        let mut sum = term * (psi1 + psi2);
        for k in 1..200 {
            term *= q / (k * (k + 1)) as f64;
            psi1 += 1.0 / k as f64;
            psi2 += 1.0 / (k + 1) as f64;
            let t = term * (psi1 + psi2);
            sum += t;
            if t.abs() < 1e-17 * sum.abs() {
                break;
            }
        }
        -2.0 / (PI * x) + log_term * j_series(1, x) - sum / PI
    }
}

fn gauss20() -> &'static GaussLegendre {
    static RULE: OnceLock<GaussLegendre> = OnceLock::new();
    RULE.get_or_init(|| GaussLegendre::new(20))
}

/// `J_n = (1/π)∫_0^π cos(nτ - x sin τ) dτ` and
/// `Y_n = (1/π)∫_0^π sin(x sin τ - nτ) dτ - (1/π)∫_0^∞ (e^{nt} + (-1)^n e^{-nt}) e^{-x sinh t} dt`.
fn jy_integral(n: u32, x: f64) -> (f64, f64) {
    let g = gauss20();
    let nf = n as f64;
    let (mut jc, mut ys) = (0.0, 0.0);
    let panels = 16;
    let w = PI / panels as f64;
    for p in 0..panels {
        let lo = p as f64 * w;
        let (c, s): (f64, f64) = g.integrate(lo, lo + w, |t| {
            let (s, c) = (x * t.sin() - nf * t).sin_cos();
            Pair(c, s)
        })
        .into();
        jc += c;
        ys += s;
    }
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let top = (45.0 / x).asinh();
    let tail: f64 = g.integrate_composite(0.0, top, 16, |t| {
        ((nf * t).exp() + sign * (-nf * t).exp()) * (-x * t.sinh()).exp()
    });
    (jc / PI, (ys - tail) / PI)
}

#[derive(Default, Clone, Copy)]
struct Pair(f64, f64);

impl std::ops::Add for Pair {
    type Output = Pair;
    fn add(self, o: Pair) -> Pair {
        Pair(self.0 + o.0, self.1 + o.1)
    }
}

impl std::ops::Mul<f64> for Pair {
    type Output = Pair;
    fn mul(self, w: f64) -> Pair {
        Pair(self.0 * w, self.1 * w)
    }
}

impl From<Pair> for (f64, f64) {
    fn from(p: Pair) -> Self {
        (p.0, p.1)
    }
}

/// Hankel's expansion: `J = A(P cos χ - Q sin χ)`, `Y = A(P sin χ + Q cos χ)`,
/// `χ = x - (n/2 + 1/4)π`, `A = √(2/(πx))`.
fn jy_hankel(n: u32, x: f64) -> (f64, f64) {
    let mu = 4.0 * (n * n) as f64;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0;
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        term *= (mu - odd * odd) / (k as f64 * 8.0 * x);
        if term.abs() >= last || term.abs() < 1e-17 {
            break;
        }
        last = term.abs();
        // term = a_k(n) / x^k; P takes even k with sign (-1)^{k/2}, Q odd k with (-1)^{(k-1)/2}.
        match k % 4 {
            0 => p += term,
            1 => q += term,
            2 => p -= term,
            _ => q -= term,
        }
    }
    let (sx, cx) = x.sin_cos();
    let phase = (n as f64 / 2.0 + 0.25) * PI;
    let (sp, cp) = phase.sin_cos();
    let cos_chi = cx * cp + sx * sp;
    let sin_chi = sx * cp - cx * sp;
    let amp = (2.0 / (PI * x)).sqrt();
    (
        amp * (p * cos_chi - q * sin_chi),
        amp * (p * sin_chi + q * cos_chi),
    )
}

fn i_series(n: u32, x: f64) -> f64 {
    let h = 0.5 * x;
    let q = h * h;
    let mut term = if n == 0 { 1.0 } else { h };
    let mut sum = term;
    for k in 1..500 {
        term *= q / (k as f64 * (k + n as usize) as f64);
        sum += term;
        if term < 1e-17 * sum {
            break;
        }
    }
    sum
}

/// `e^{-x} I_n(x) ~ (2πx)^{-1/2} Σ (-1)^k a_k(n) / x^k`.
fn i_scaled_asymptotic(n: u32, x: f64) -> f64 {
    asymptotic_sum(n, x, -1.0) / (2.0 * PI * x).sqrt()
}

/// `Σ_k s^k a_k(n) / x^k` truncated at its smallest term.
fn asymptotic_sum(n: u32, x: f64, s: f64) -> f64 {
    let mu = 4.0 * (n * n) as f64;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        term *= s * (mu - odd * odd) / (k as f64 * 8.0 * x);
        if term.abs() >= last || term.abs() < 1e-17 * sum.abs() {
            break;
        }
        last = term.abs();
        sum += term;
    }
    sum
}

fn k_series(n: u32, x: f64) -> f64 {
    let h = 0.5 * x;
    let q = h * h;
    let lh = h.ln();
    if n == 0 {
        // K_0 = -(ln(x/2) + γ) I_0 + Σ_{k≥1} H_k (x²/4)^k / (k!)².
        let mut term = 1.0;
        let mut harmonic = 0.0;
        let mut sum = 0.0;
        for k in 1..200 {
            term *= q / (k * k) as f64;
            harmonic += 1.0 / k as f64;
            let t = term * harmonic;
            sum += t;
            if t < 1e-17 * sum {
                break;
            }
        }
        -(lh + EULER_GAMMA) * i_series(0, x) + sum
    } else {
        // K_1 = 1/x + ln(x/2) I_1 - (x/4) Σ_{k≥0} (ψ(k+1) + ψ(k+2)) (x²/4)^k / (k! (k+1)!).
        let mut term = 1.0;
        let mut psi1 = -EULER_GAMMA;
        let mut psi2 = 1.0 - EULER_GAMMA;
        let mut sum = psi1 + psi2;
        for k in 1..200 {
            term *= q / (k * (k + 1)) as f64;
            psi1 += 1.0 / k as f64;
            psi2 += 1.0 / (k + 1) as f64;
            let t = term * (psi1 + psi2);
            sum += t;
            if t.abs() < 1e-17 * sum.abs() {
                break;
            }
        }
        1.0 / x + lh * i_series(1, x) - 0.25 * x * sum
    }
}

/// `e^{x} K_n(x)` for `x > 2`.
fn k_scaled(n: u32, x: f64) -> f64 {
    if x > ASYMPTOTIC_K {
        return (PI / (2.0 * x)).sqrt() * asymptotic_sum(n, x, 1.0);
    }
    // Trapezoid rule on ∫_0^∞ e^{-x(cosh t - 1)} cosh(nt) dt; spectrally accurate.
    let h = 0.05f64;
    let nf = n as f64;
    let mut sum = 0.5;
    let mut t = h;
    loop {
        let e = x * (t.cosh() - 1.0);
        if e > 42.0 {
            break;
        }
        sum += (-e).exp() * (nf * t).cosh();
        t += h;
    }
    sum * h
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    /// `∫_0^∞ e^{-x cosh t} cosh(nt) dt` by composite Gauss–Legendre.
    fn k_quadrature(n: u32, x: f64) -> f64 {
        let g = GaussLegendre::new(32);
        let top = (750.0 / x).acosh();
        g.integrate_composite(0.0, top, 64, |t| {
            (-x * t.cosh()).exp() * (n as f64 * t).cosh()
        })
    }

    #[test]
    fn k1_at_two_matches_quadrature() {
        let oracle = k_quadrature(1, 2.0);
        assert!(rel(k1(2.0), oracle) < 1e-12);
        assert!((oracle - 0.139_865_881_8).abs() < 1e-10);
        for x in [0.01, 0.5, 1.9, 2.1, 5.0, 12.0, 24.9, 25.1, 60.0] {
            assert!(rel(k0(x), k_quadrature(0, x)) < 1e-11, "K0 at {x}");
            assert!(rel(k1(x), k_quadrature(1, x)) < 1e-11, "K1 at {x}");
        }
    }

    #[test]
    fn wronskians() {
        for x in [0.001, 0.5, 1.0, 2.0, 5.0, 10.0, 29.0, 31.0, 100.0, 600.0] {
            let w = i1_scaled(x) * k0_scaled(x) + i0_scaled(x) * k1_scaled(x);
            assert!(rel(w, 1.0 / x) < 1e-12, "IK at {x}: {}", w * x);
        }
        for x in [0.001, 0.5, 1.0, 7.9, 8.1, 12.0, 24.9, 25.1, 100.0, 1000.0] {
            let w = j1(x) * y0(x) - j0(x) * y1(x);
            let expect = 2.0 / (PI * x);
            assert!(rel(w, expect) < 1e-11, "JY at {x}: {}", w / expect);
        }
    }

    #[test]
    fn first_zero_of_j0() {
        let z = 2.404_825_557_695_773;
        assert!(j0(z).abs() < 1e-15);
        // Bisection on the series alone.
        let (mut a, mut b) = (2.0, 3.0);
        for _ in 0..60 {
            let m = 0.5 * (a + b);
            if j_series(0, a) * j_series(0, m) <= 0.0 {
                b = m;
            } else {
                a = m;
            }
        }
        assert!((a - z).abs() < 1e-14);
    }

    #[test]
    fn reference_values() {
        assert!(rel(j1(2.0), 0.576_724_807_756_873_4) < 1e-13);
        assert!(rel(j0(1.0), 0.765_197_686_557_966_6) < 1e-13);
        assert!(rel(y0(1.0), 0.088_256_964_215_676_96) < 1e-12);
        assert!(rel(y1(1.0), -0.781_212_821_300_288_7) < 1e-13);
        assert!(rel(i0(1.0), 1.266_065_877_752_008_4) < 1e-14);
        assert!(rel(k0(1.0), 0.421_024_438_240_708_3) < 1e-13);
    }

    #[test]
    fn branches_agree_at_seams() {
        for n in [0, 1] {
            for x in [SERIES_JY, 10.0, 14.0, 20.0, ASYMPTOTIC_JY] {
                let (js, ys) = (j_series(n, x), y_series(n, x));
                let (ji, yi) = jy_integral(n, x);
                let (jh, yh) = jy_hankel(n, x);
                if x <= 10.0 {
                    assert!((js - ji).abs() < 1e-12 && (ys - yi).abs() < 1e-12, "{n} {x}");
                }
                if x >= 20.0 {
                    assert!((jh - ji).abs() < 1e-10 && (yh - yi).abs() < 1e-10, "{n} {x}");
                }
            }
            let x = SERIES_I;
            assert!(rel(i_series(n, x) * (-x).exp(), i_scaled_asymptotic(n, x)) < 1e-10);
            let x = SERIES_K;
            assert!(rel(k_series(n, x) * x.exp(), k_scaled(n, x)) < 1e-12);
            let x = ASYMPTOTIC_K;
            let asym = (PI / (2.0 * x)).sqrt() * asymptotic_sum(n, x, 1.0);
            assert!(rel(asym, k_scaled(n, x - 1e-9)) < 1e-10);
        }
    }

    #[test]
    fn checked_entry() {
        assert!(bessel(BesselKind::J, 2, 1.0).is_err());
        assert!(bessel(BesselKind::K, 0, 0.0).is_err());
        assert_eq!(bessel(BesselKind::Y, 1, 3.0).unwrap(), y1(3.0));
    }
}
