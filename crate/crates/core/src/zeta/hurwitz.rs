//! Hurwitz and Riemann zeta functions by Euler–Maclaurin summation.

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// `B_{2j} / (2j)!` for `j = 1..=20`.
const BERNOULLI_OVER_FACTORIAL: [f64; 20] = [
    0.083_333_333_333_333_33,
    -0.001_388_888_888_888_889,
    3.306_878_306_878_307e-5,
    -8.267_195_767_195_768e-7,
    2.087_675_698_786_81e-8,
    -5.284_190_138_687_493e-10,
    1.338_253_653_068_467_9e-11,
    -3.389_680_296_322_582_7e-13,
    8.586_062_056_277_845e-15,
    -2.174_868_698_558_062e-16,
    5.509_002_828_360_229_5e-18,
    -1.395_446_468_581_252_2e-19,
    3.534_707_039_629_467e-21,
    -8.953_517_427_037_546e-23,
    2.267_952_452_337_683e-24,
    -5.744_790_668_872_202e-26,
    1.455_172_475_614_865e-27,
    -3.685_994_940_665_310_3e-29,
    9.336_734_257_095_045e-31,
    -2.365_022_415_700_63e-32,
];

/// `b^{-s}` for real `b > 0`, modulus and phase computed separately.
fn real_base_pow(b: f64, s: Complex64) -> Complex64 {
    Complex64::from_polar(b.powf(-s.re), -s.im * b.ln())
}

/// Number of Euler–Maclaurin correction terms available.
const MAX_TERMS: usize = 60;

/// `B_{2j} / (2j)!` for `j = 1..=60`; beyond the table,
/// `(-1)^{j+1} 2 ζ(2j) / (2π)^{2j}` with `ζ(2j)` summed directly.
fn bernoulli_over_factorial() -> &'static [f64; MAX_TERMS] {
    static TABLE: OnceLock<[f64; MAX_TERMS]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [0.0; MAX_TERMS];
        t[..20].copy_from_slice(&BERNOULLI_OVER_FACTORIAL);
        for (idx, slot) in t.iter_mut().enumerate().skip(20) {
            let e = 2 * (idx as i32 + 1);
            let zeta: f64 = (1..=6).rev().map(|n| (n as f64).powi(-e)).sum();
            let sign = if idx % 2 == 0 { 1.0 } else { -1.0 };
            *slot = sign * 2.0 * zeta * (2.0 * std::f64::consts::PI).powi(-e);
        }
        t
    })
}

/// Default truncation point for the direct part of the sum.
pub fn default_cutoff(s: Complex64) -> usize {
    (s.norm() / std::f64::consts::PI).ceil() as usize + 8
}

/// `(e^u - 1) / u`, accurate near `u = 0`.
fn expm1_over(u: Complex64) -> Complex64 {
    if u.norm() < 0.1 {
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = term;
        for k in 2..20 {
            term *= u / k as f64;
            sum += term;
        }
        sum
    } else {
        (u.exp() - 1.0) / u
    }
}

/// `ζ(s, a) - 1/(s - 1)`, entire in `s`, with the direct sum cut at `n`.
pub fn hurwitz_regular_with_cutoff(s: Complex64, a: f64, n: usize) -> Complex64 {
    debug_assert!(a > 0.0 && a <= 1.0);
    let mut direct = Complex64::new(0.0, 0.0);
    for k in 0..n {
        direct += real_base_pow(k as f64 + a, s);
    }
    let big = n as f64 + a;
    let l = big.ln();
    let one = Complex64::new(1.0, 0.0);
    let pow = real_base_pow(big, s);
    // ((N+a)^{1-s} - 1)/(s - 1).
    let u = (one - s) * l;
    let integral = if u.norm() < 0.1 {
        -l * expm1_over(u)
    } else {
        (pow * big - 1.0) / (s - 1.0)
    };
    let mut correction = Complex64::new(0.0, 0.0);
    // rising = s (s+1) … (s+2j-2); power = (N+a)^{-s-2j+1}.
    let mut rising = s;
    let mut power = pow / big;
    let inv2 = 1.0 / (big * big);
    for (j, b) in bernoulli_over_factorial().iter().enumerate() {
        if j > 0 {
            let m = (2 * j) as f64;
            rising *= (s + (m - 1.0)) * (s + m);
            power *= inv2;
        }
        let t = rising * power * *b;
        correction += t;
        if t.norm() < 1e-18 * (direct.norm() + correction.norm()) {
            break;
        }
    }
    direct + integral + pow * 0.5 + correction
}

/// `ζ(s, a)` for `0 < a ≤ 1`, `s ≠ 1`.
pub fn hurwitz_zeta(s: Complex64, a: f64) -> Result<Complex64> {
    hurwitz_zeta_with_cutoff(s, a, default_cutoff(s))
}

/// As [`hurwitz_zeta`] with an explicit truncation point.
pub fn hurwitz_zeta_with_cutoff(s: Complex64, a: f64, n: usize) -> Result<Complex64> {
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::InvalidArgument(format!("Hurwitz parameter must lie in (0, 1], got {a}")));
    }
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole("1 (zeta)".into()));
    }
    Ok(hurwitz_regular_with_cutoff(s, a, n) + (s - 1.0).inv())
}

/// `ζ(s)`, `s ≠ 1`.
pub fn riemann_zeta(s: Complex64) -> Result<Complex64> {
    hurwitz_zeta(s, 1.0)
}
