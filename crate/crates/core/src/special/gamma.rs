//! Complex log-gamma by Stirling's series with upward shifting and reflection.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// `B_{2k} / (2k (2k-1))` for `k = 1..=10`.
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43_867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
];

/// `|z|` at which the asymptotic series is used directly.
const STIRLING_RADIUS: f64 = 15.0;

fn is_pole(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// `log Γ(z)`, analytic in `Re z > 0`; elsewhere `exp` of the result is `Γ(z)`.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if is_pole(z) {
        return Err(Error::Pole(format!("{z} (Gamma)")));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::InvalidArgument(format!("non-finite argument {z}")));
    }
    if z.re < 0.5 {
        let lg = ln_gamma_right(Complex64::new(1.0, 0.0) - z);
        return Ok(Complex64::new(PI.ln(), 0.0) - ln_sin_pi(z) - lg);
    }
    Ok(ln_gamma_right(z))
}

/// `Γ(z)`.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    ln_gamma(z).map(|l| l.exp())
}

/// `Re z ≥ 0.5`.
fn ln_gamma_right(mut z: Complex64) -> Complex64 {
    let mut shift = Complex64::new(0.0, 0.0);
    while z.norm() < STIRLING_RADIUS {
        shift += z.ln();
        z += 1.0;
    }
    stirling(z) - shift
}

fn stirling(z: Complex64) -> Complex64 {
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut p = inv;
    for c in STIRLING {
        series += p * c;
        p *= inv2;
    }
    (z - 0.5) * z.ln() - z + LN_SQRT_2PI + series
}

/// `log sin(πz)`, free of overflow for large `|Im z|`.
fn ln_sin_pi(z: Complex64) -> Complex64 {
    if z.im.abs() < 5.0 {
        return (z * PI).sin().ln();
    }
    if z.im < 0.0 {
        return ln_sin_pi(z.conj()).conj();
    }
    let i = Complex64::i();
    let e = (i * 2.0 * PI * z).exp();
    -i * PI * z + Complex64::new(0.5f64.ln(), PI / 2.0) + (1.0 - e).ln()
}

/// Digamma `ψ(x)` for real `x > 0`.
pub fn digamma(mut x: f64) -> f64 {
    debug_assert!(x > 0.0);
    let mut acc = 0.0;
    while x < 10.0 {
        acc -= 1.0 / x;
        x += 1.0;
    }
    let inv2 = 1.0 / (x * x);
    // B_{2k}/(2k) for k = 1..=7.
    const C: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 120.0,
        1.0 / 252.0,
        -1.0 / 240.0,
        1.0 / 132.0,
        -691.0 / 32760.0,
        1.0 / 12.0,
    ];
    let mut series = 0.0;
    let mut p = inv2;
    for c in C {
        series += c * p;
        p *= inv2;
    }
    acc + x.ln() - 0.5 / x - series
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn real_values() {
        assert!(ln_gamma(c(1.0, 0.0)).unwrap().norm() < 1e-15);
        assert!(ln_gamma(c(2.0, 0.0)).unwrap().norm() < 1e-15);
        let v = ln_gamma(c(5.0, 0.0)).unwrap();
        assert!((v.re - 24f64.ln()).abs() < 1e-14 && v.im.abs() < 1e-15);
        let v = ln_gamma(c(0.5, 0.0)).unwrap();
        assert!((v.re - 0.5 * PI.ln()).abs() < 1e-14);
        // Γ(-1/2) = -2√π.
        let g = gamma(c(-0.5, 0.0)).unwrap();
        assert!((g.re + 2.0 * PI.sqrt()).abs() < 1e-13 && g.im.abs() < 1e-13);
        // 100! / 99! = 100.
        let r = (ln_gamma(c(101.0, 0.0)).unwrap() - ln_gamma(c(100.0, 0.0)).unwrap()).re;
        assert!((r - 100f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn poles_rejected() {
        for k in 0..5 {
            assert!(matches!(ln_gamma(c(-(k as f64), 0.0)), Err(Error::Pole(_))));
        }
        assert!(ln_gamma(c(-3.0, 1e-9)).is_ok());
    }

    #[test]
    fn modulus_on_the_critical_line() {
        // |Γ(1/2 + it)|² = π / cosh(πt).
        for t in [0.5, 3.0, 10.0, 40.0, 90.0] {
            let v = ln_gamma(c(0.5, t)).unwrap().re;
            let exact = 0.5 * (PI.ln() - (PI * t).cosh().ln());
            assert!((v - exact).abs() < 1e-12 * (1.0 + exact.abs()), "t={t}");
        }
    }

    #[test]
    fn large_imaginary_reflection() {
        // Recurrence Γ(z+1) = zΓ(z) across the reflection threshold.
        for z in [c(-3.3, 60.0), c(0.2, -80.0), c(-40.5, 7.0), c(-0.7, 0.3)] {
            let lhs = ln_gamma(z + 1.0).unwrap();
            let rhs = ln_gamma(z).unwrap() + z.ln();
            let d = (lhs - rhs).exp() - 1.0;
            assert!(d.norm() < 1e-12, "{z}: {d}");
        }
    }

    #[test]
    fn digamma_values() {
        let euler = 0.577_215_664_901_532_9;
        assert!((digamma(1.0) + euler).abs() < 1e-15);
        assert!((digamma(0.5) + euler + 2.0 * 2f64.ln()).abs() < 1e-14);
        assert!((digamma(2.0) - (1.0 - euler)).abs() < 1e-15);
    }
}
