//! Power-series Bessel functions of complex argument, orders 0 and 1.
//!
//! Logarithms take the principal branch, `-π < arg z ≤ π`. Intended for
//! moderate `|z|` (the series cancel badly beyond `|z| ≈ 20`) and used to
//! verify the relations between `J, Y, I, K` at imaginary and negative
//! arguments.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::special::bessel::EULER_GAMMA;

/// `(J_n(z), Y_n(z), I_n(z), K_n(z))` for `n ∈ {0, 1}`, `z ≠ 0`.
pub fn bessel_series_complex(n: u32, z: Complex64) -> [Complex64; 4] {
    assert!(n <= 1 && z != Complex64::new(0.0, 0.0));
    let h = z * 0.5;
    let q = h * h;
    let lh = h.ln();
    let one = Complex64::new(1.0, 0.0);
    // J and I share |term|; J alternates.
    let mut tj = if n == 0 { one } else { h };
    let mut ti = tj;
    let (mut j, mut i) = (tj, ti);
    // Log-free parts of Y and K.
    let (mut ys, mut ks);
    let mut psi1 = -EULER_GAMMA;
    let mut psi2 = if n == 0 { -EULER_GAMMA } else { 1.0 - EULER_GAMMA };
    if n == 0 {
        // Σ_k ψ(k+1) (∓z²/4)^k / (k!)², with ψ(1) = -γ.
        ys = tj * psi1;
        ks = ti * psi1;
    } else {
        ys = tj * (psi1 + psi2);
        ks = ti * (psi1 + psi2);
    }
    for k in 1..400usize {
        let denom = (k * (k + n as usize)) as f64;
        tj *= -q / denom;
        ti *= q / denom;
        j += tj;
        i += ti;
        psi1 += 1.0 / k as f64;
        psi2 += 1.0 / (k + n as usize) as f64;
        let c = if n == 0 { psi1 } else { psi1 + psi2 };
        ys += tj * c;
        ks += ti * c;
        if ti.norm() < 1e-18 * i.norm() && k > 4 {
            break;
        }
    }
    let (y, kk) = if n == 0 {
        (
            (2.0 / PI) * (lh * j - ys),
            -lh * i + ks,
        )
    } else {
        (
            -(2.0 / PI) * z.inv() + (2.0 / PI) * lh * j - ys / PI,
            z.inv() + lh * i - ks * 0.5,
        )
    };
    [j, y, i, kk]
}

/// Residuals of the imaginary- and negative-argument relations at `x > 0`.
#[derive(Debug, Clone, Copy)]
pub struct InterconnectResiduals {
    /// `Y_ν(ix) = e^{iπ(ν+1)/2} I_ν(x) - (2/π) e^{-iπν/2} K_ν(x)`, ν = 0, 1.
    pub y_of_ix: f64,
    /// `J_ν(ix) = e^{iπν/2} I_ν(x)`, ν = 0, 1.
    pub j_of_ix: f64,
    /// `K_1(ix) = -(π/2)[J_1(-x) + i Y_1(-x)]`.
    pub k1_of_ix: f64,
    /// `J_n(-x) = (-1)^n J_n(x)`, n = 0, 1.
    pub j_of_minus_x: f64,
    /// `Y_n(-x) = (-1)^n [Y_n(x) + 2i J_n(x)]` with `-x = x e^{iπ}`; reported
    /// separately because it depends on that branch choice.
    pub y_of_minus_x: f64,
}

impl InterconnectResiduals {
    /// Largest residual among the branch-independent relations.
    pub fn max_core(&self) -> f64 {
        self.y_of_ix
            .max(self.j_of_ix)
            .max(self.k1_of_ix)
            .max(self.j_of_minus_x)
    }
}

fn resid(lhs: Complex64, rhs: Complex64) -> f64 {
    (lhs - rhs).norm() / lhs.norm().max(1.0)
}

/// Evaluates every relation with the complex series at `x > 0`.
pub fn bessel_interconnect_check(x: f64) -> InterconnectResiduals {
    assert!(x > 0.0);
    let i = Complex64::i();
    let xr = Complex64::new(x, 0.0);
    let ix = Complex64::new(0.0, x);
    let mx = Complex64::new(-x, 0.0);
    let mut out = InterconnectResiduals {
        y_of_ix: 0.0,
        j_of_ix: 0.0,
        k1_of_ix: 0.0,
        j_of_minus_x: 0.0,
        y_of_minus_x: 0.0,
    };
    for n in 0..=1u32 {
        let nu = n as f64;
        let [jx, yx, ixv, kx] = bessel_series_complex(n, xr);
        let [jix, yix, _, kix] = bessel_series_complex(n, ix);
        let [jmx, ymx, _, _] = bessel_series_complex(n, mx);
        let ph = |a: f64| Complex64::from_polar(1.0, a);
        let rhs_y = ph(PI * (nu + 1.0) / 2.0) * ixv - (2.0 / PI) * ph(-PI * nu / 2.0) * kx;
        out.y_of_ix = out.y_of_ix.max(resid(yix, rhs_y));
        out.j_of_ix = out.j_of_ix.max(resid(jix, ph(PI * nu / 2.0) * ixv));
        let sign = if n == 0 { 1.0 } else { -1.0 };
        out.j_of_minus_x = out.j_of_minus_x.max(resid(jmx, jx * sign));
        out.y_of_minus_x = out
            .y_of_minus_x
            .max(resid(ymx, (yx + 2.0 * i * jx) * sign));
        if n == 1 {
            out.k1_of_ix = resid(kix, -(PI / 2.0) * (jmx + i * ymx));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::bessel;

    #[test]
    fn agrees_with_real_kernels() {
        for x in [0.1, 1.0, 3.0] {
            let z = Complex64::new(x, 0.0);
            for n in 0..=1 {
                let [j, y, i, k] = bessel_series_complex(n, z);
                let (rj, ry, ri, rk) = if n == 0 {
                    (bessel::j0(x), bessel::y0(x), bessel::i0(x), bessel::k0(x))
                } else {
                    (bessel::j1(x), bessel::y1(x), bessel::i1(x), bessel::k1(x))
                };
                assert!((j.re - rj).abs() < 1e-13 && j.im == 0.0);
                assert!((y.re - ry).abs() < 1e-13);
                assert!((i.re - ri).abs() < 1e-12 * ri);
                assert!((k.re - rk).abs() < 1e-11 * rk, "K{n}({x}) {} {rk}", k.re);
            }
        }
    }

    #[test]
    fn interconnections() {
        for (x, tol) in [(0.1, 1e-9), (1.0, 1e-9), (10.0, 1e-8)] {
            let r = bessel_interconnect_check(x);
            assert!(r.max_core() <= tol, "{x}: {r:?}");
            assert!(r.y_of_minus_x <= tol, "{x}: {r:?}");
        }
    }
}
