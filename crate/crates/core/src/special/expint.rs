//! Exponential integral `E_1(z) = ∫_z^∞ e^{-t}/t dt` on the cut plane.

use num_complex::Complex64;

use crate::special::bessel::EULER_GAMMA;

/// Principal-branch `E_1(z)`, cut along the negative real axis; `z ≠ 0`.
pub fn e1(z: Complex64) -> Complex64 {
    assert!(z != Complex64::new(0.0, 0.0), "E1 has a logarithmic singularity at 0");
    if z.norm() <= 4.0 || (z.re < 0.0 && z.im.abs() < 1.0 && z.norm() <= 40.0) {
        series(z)
    } else {
        continued_fraction(z)
    }
}

/// `-γ - ln z - Σ_{k≥1} (-z)^k / (k k!)`.
fn series(z: Complex64) -> Complex64 {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 1..500 {
        term *= -z / k as f64;
        let t = term / k as f64;
        sum += t;
        if t.norm() < 1e-17 * sum.norm() {
            break;
        }
    }
    -EULER_GAMMA - z.ln() - sum
}

/// Modified Lentz evaluation of `e^{-z} / (z + 1 - 1²/(z + 3 - 2²/(z + 5 - …)))`.
fn continued_fraction(z: Complex64) -> Complex64 {
    const TINY: f64 = 1e-300;
    let mut b = z + 1.0;
    let mut c = Complex64::new(1.0 / TINY, 0.0);
    let mut d = b.inv();
    let mut h = d;
    for i in 1..10_000 {
        let a = -((i * i) as f64);
        b += 2.0;
        d = (d * a + b).inv();
        c = b + c.inv() * a;
        let del = c * d;
        h *= del;
        if (del - 1.0).norm() < 1e-16 {
            break;
        }
    }
    h * (-z).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Reference values from a 30-digit evaluation.
    const FROZEN: [(f64, f64, f64, f64); 7] = [
        (0.5, 0.0, 0.559_773_594_776_160_8, 0.0),
        (3.9, 1.0, 0.001_460_606_207_439_238_4, -0.003_902_693_920_675_688_6),
        (4.5, -2.0, -0.001_376_614_999_997_001_4, 0.001_358_410_326_040_059_5),
        (10.0, 30.0, 1.392_682_425_544_010_9e-6, 2.763_988_392_547_721_3e-7),
        (1.0, -60.0, 0.001_672_084_680_922_443_6, -0.005_893_629_901_083_807_7),
        (-7.0, 20.0, -51.969_230_320_136_49, -6.793_274_215_714_575),
        (-3.0, 4.0, 4.154_091_651_642_69, 1.152_825_966_434_564_2),
    ];

    #[test]
    fn frozen_values() {
        for (re, im, ere, eim) in FROZEN {
            let z = Complex64::new(re, im);
            let exact = Complex64::new(ere, eim);
            let got = e1(z);
            assert!((got - exact).norm() < 1e-13 * exact.norm(), "{z}: {got} vs {exact}");
        }
    }

    #[test]
    fn branch_continuity_and_reflection() {
        // E1(conj z) = conj E1(z); the jump across the negative axis is -2πi.
        let z = Complex64::new(-7.0, 20.0);
        assert!((e1(z.conj()) - e1(z).conj()).norm() < 1e-14 * e1(z).norm());
        let above = e1(Complex64::new(-2.0, 1e-12));
        let below = e1(Complex64::new(-2.0, -1e-12));
        let jump = above - below;
        assert!((jump - Complex64::new(0.0, -2.0 * std::f64::consts::PI)).norm() < 1e-9);
        // Series and continued fraction agree where both apply.
        for z in [Complex64::new(3.0, 3.0), Complex64::new(-3.0, 4.0), Complex64::new(-20.0, 5.0)] {
            let s = series(z);
            let c = continued_fraction(z);
            assert!((s - c).norm() < 1e-11 * c.norm().max(1e-3), "{z}: {s} {c}");
        }
    }
}
