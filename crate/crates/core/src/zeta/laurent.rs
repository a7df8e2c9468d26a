//! Laurent data of `ζ_K(s)^m` at `s = 1` and the main term it determines.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::FieldDescriptor;
use crate::zeta::dedekind::dedekind_zeta;

const DEFAULT_RADIUS: f64 = 0.25;
const START_NODES: usize = 64;
const MAX_NODES: usize = 4096;
const AGREEMENT: f64 = 1e-11;

/// Coefficients `c_{-m}, …, c_J` of `ζ_K(s)^m = Σ_k c_k (s - 1)^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentData {
    pole_order: u32,
    coeffs: Vec<Complex64>,
    nodes: usize,
    residual: f64,
}

impl LaurentData {
    /// Builds Laurent data from known coefficients, `coeffs[0] = c_{-m}`.
    pub fn from_coeffs(pole_order: u32, coeffs: Vec<Complex64>) -> Result<Self> {
        if pole_order == 0 || coeffs.len() < pole_order as usize {
            return Err(Error::InvalidArgument(
                "Laurent data needs at least the principal part".into(),
            ));
        }
        if coeffs[0] == Complex64::new(0.0, 0.0) {
            return Err(Error::InvalidArgument("leading Laurent coefficient vanishes".into()));
        }
        Ok(Self { pole_order, coeffs, nodes: 0, residual: 0.0 })
    }

    /// Always `1`.
    pub fn center(&self) -> f64 {
        1.0
    }

    pub fn pole_order(&self) -> u32 {
        self.pole_order
    }

    /// All coefficients from `c_{-m}` upward.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// `c_k` for `-m ≤ k ≤ J`.
    pub fn coeff(&self, k: i64) -> Option<Complex64> {
        let idx = k + self.pole_order as i64;
        if idx < 0 {
            return None;
        }
        self.coeffs.get(idx as usize).copied()
    }

    /// Highest computed index `J`.
    pub fn max_index(&self) -> i64 {
        self.coeffs.len() as i64 - self.pole_order as i64 - 1
    }

    /// Node count of the accepted quadrature; 0 when supplied directly.
    pub fn nodes(&self) -> usize {
        self.nodes
    }

    /// Largest change between the last two node counts.
    pub fn residual(&self) -> f64 {
        self.residual
    }

    /// Residue `c_{-1}`.
    pub fn residue(&self) -> Complex64 {
        self.coeff(-1).expect("principal part is always present")
    }
}

/// As [`laurent_at_one_with_radius`] with radius `1/4`.
pub fn laurent_at_one(field: &FieldDescriptor, m: u32, j: u32) -> Result<LaurentData> {
    laurent_at_one_with_radius(field, m, j, DEFAULT_RADIUS)
}

/// Trapezoidal rule for `c_k = (1/2πi)∮ ζ_K(s)^m (s - 1)^{-k-1} ds` on
/// `|s - 1| = r`, doubling the node count until consecutive estimates agree.
pub fn laurent_at_one_with_radius(
    field: &FieldDescriptor,
    m: u32,
    j: u32,
    radius: f64,
) -> Result<LaurentData> {
    if m == 0 {
        return Err(Error::InvalidArgument("power m must be at least 1".into()));
    }
    if !(radius > 0.0 && radius < 1.0) {
        return Err(Error::InvalidArgument(format!("contour radius {radius} outside (0, 1)")));
    }
    let count = (m + j + 1) as usize;
    // values[i] = ζ_K(1 + r e^{2πi i/N})^m, kept across doublings.
    let mut values: Vec<Complex64> = Vec::new();
    let mut nodes = START_NODES;
    let eval = |theta: f64| -> Result<Complex64> {
        let s = Complex64::new(1.0, 0.0) + Complex64::from_polar(radius, theta);
        Ok(dedekind_zeta(field, s)?.powu(m))
    };
    for i in 0..nodes {
        values.push(eval(2.0 * PI * i as f64 / nodes as f64)?);
    }
    let mut previous = coefficients(&values, m, count, radius);
    let mut residual = f64::INFINITY;
    while nodes < MAX_NODES {
        let mut refined = Vec::with_capacity(2 * nodes);
        for (i, v) in values.iter().enumerate() {
            refined.push(*v);
            refined.push(eval(2.0 * PI * (2 * i + 1) as f64 / (2 * nodes) as f64)?);
        }
        values = refined;
        nodes *= 2;
        let current = coefficients(&values, m, count, radius);
        let mut converged = true;
        residual = 0.0;
        for (a, b) in previous.iter().zip(&current) {
            let d = (a - b).norm();
            residual = residual.max(d);
            if d > AGREEMENT * b.norm().max(1.0) {
                converged = false;
            }
        }
        previous = current;
        if converged {
            return Ok(LaurentData { pole_order: m, coeffs: previous, nodes, residual });
        }
    }
    Err(Error::NoConvergence { what: "Laurent coefficients at s = 1", residual })
}

/// `c_k ≈ (1/N) Σ_j f(s_j) (r e^{iθ_j})^{-k}` for `k = -m, …, count - m - 1`.
fn coefficients(values: &[Complex64], m: u32, count: usize, radius: f64) -> Vec<Complex64> {
    let n = values.len();
    (0..count)
        .map(|idx| {
            let k = idx as i64 - m as i64;
            let mut acc = Complex64::new(0.0, 0.0);
            for (i, v) in values.iter().enumerate() {
                let theta = 2.0 * PI * ((i as i64 * -k).rem_euclid(n as i64)) as f64 / n as f64;
                acc += v * Complex64::from_polar(1.0, theta);
            }
            acc / n as f64 * radius.powi(-(k as i32))
        })
        .collect()
}

/// `Res_{s=1} ζ_K(s)^m x^s / s = x P(log x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MainTermValue {
    pub x: f64,
    pub value: f64,
    /// Coefficients of `P`, constant term first; `len = m`.
    pub poly_coeffs: Vec<f64>,
}

impl MainTermValue {
    pub fn degree(&self) -> usize {
        self.poly_coeffs.len() - 1
    }
}

/// Main term from Laurent data; coefficients of `P` are
/// `p_i = Σ_{k=i+1}^{m} c_{-k} (-1)^{k-1-i} / i!`.
pub fn main_term_from_laurent(data: &LaurentData, x: f64) -> Result<MainTermValue> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::InvalidArgument(format!("main term needs x > 0, got {x}")));
    }
    let m = data.pole_order() as usize;
    let mut poly = vec![0.0; m];
    let mut inv_fact = 1.0;
    for (i, p) in poly.iter_mut().enumerate() {
        if i > 0 {
            inv_fact /= i as f64;
        }
        let mut acc = 0.0;
        for k in (i + 1)..=m {
            let sign = if (k - 1 - i) % 2 == 0 { 1.0 } else { -1.0 };
            acc += sign * data.coeff(-(k as i64)).unwrap().re;
        }
        *p = acc * inv_fact;
    }
    let l = x.ln();
    let value = x * poly.iter().rev().fold(0.0, |acc, c| acc * l + c);
    Ok(MainTermValue { x, value, poly_coeffs: poly })
}

/// Full residue at `s = 1` of `ζ_K(s)^m x^s / s`.
pub fn main_term(field: &FieldDescriptor, m: u32, x: f64) -> Result<MainTermValue> {
    let data = laurent_at_one(field, m, 0)?;
    main_term_from_laurent(&data, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `lim (H_N - log N)` with the Euler–Maclaurin correction of the tail.
    fn euler_gamma_by_harmonic_sum() -> f64 {
        let n = 100_000u64;
        let h: f64 = (1..=n).rev().map(|k| 1.0 / k as f64).sum();
        let nf = n as f64;
        h - nf.ln() - 0.5 / nf + 1.0 / (12.0 * nf * nf)
    }

    #[test]
    fn rationals_simple_pole() {
        let d = laurent_at_one(&FieldDescriptor::rationals(), 1, 2).unwrap();
        assert_eq!(d.pole_order(), 1);
        assert!((d.residue() - Complex64::new(1.0, 0.0)).norm() < 1e-13);
        let gamma = euler_gamma_by_harmonic_sum();
        assert!((d.coeff(0).unwrap().re - gamma).abs() < 1e-12);
        // c_1 = -γ_1, γ_1 the first Stieltjes constant.
        assert!((d.coeff(1).unwrap().re - 0.072_815_845_483_676_72).abs() < 1e-12);
    }

    #[test]
    fn gaussian_residue_is_leibniz_value() {
        let d = laurent_at_one(&FieldDescriptor::gaussian(), 1, 0).unwrap();
        // 2πh/(w√D) with h = 1, w = 4, D = 4.
        let class_number = 2.0 * PI / (4.0 * 2.0);
        assert!((d.residue().re - class_number).abs() < 1e-12);
        assert!(d.residue().im.abs() < 1e-13);
    }

    #[test]
    fn squares_have_squared_leading_coefficient() {
        for f in [
            FieldDescriptor::rationals(),
            FieldDescriptor::gaussian(),
            FieldDescriptor::quadratic(5).unwrap(),
        ] {
            let one = laurent_at_one(&f, 1, 1).unwrap();
            let two = laurent_at_one(&f, 2, 0).unwrap();
            let c1 = one.residue();
            assert!((two.coeff(-2).unwrap() - c1 * c1).norm() < 1e-12, "{f}");
            // c_{-1} of the square is 2 c_{-1} c_0.
            let c0 = one.coeff(0).unwrap();
            assert!((two.coeff(-1).unwrap() - 2.0 * c1 * c0).norm() < 1e-11, "{f}");
        }
    }

    #[test]
    fn radius_independence() {
        for (f, m) in [
            (FieldDescriptor::rationals(), 3),
            (FieldDescriptor::gaussian(), 2),
            (FieldDescriptor::quadratic(5).unwrap(), 2),
        ] {
            let a = laurent_at_one_with_radius(&f, m, 2, 0.25).unwrap();
            let b = laurent_at_one_with_radius(&f, m, 2, 0.125).unwrap();
            for (x, y) in a.coeffs().iter().zip(b.coeffs()) {
                assert!((x - y).norm() <= 1e-9, "{f} m={m}: {x} {y}");
            }
        }
    }

    #[test]
    fn main_term_closed_forms() {
        let q = FieldDescriptor::rationals();
        let gamma = euler_gamma_by_harmonic_sum();
        for x in [2.0, 10.5, 1000.0] {
            let v = main_term(&q, 2, x).unwrap();
            let exact = x * x.ln() + (2.0 * gamma - 1.0) * x;
            assert!((v.value - exact).abs() < 1e-10 * x, "{x}");
        }
        let e = std::f64::consts::E;
        assert!((main_term(&q, 1, e).unwrap().value - e).abs() < 1e-13);
        let gi = main_term(&FieldDescriptor::gaussian(), 1, 100.0).unwrap();
        assert!((gi.value - 25.0 * PI).abs() < 1e-10);
    }

    #[test]
    fn polynomial_degree() {
        for f in [FieldDescriptor::rationals(), FieldDescriptor::quadratic(5).unwrap()] {
            for m in 1..=4u32 {
                let v = main_term(&f, m, 7.5).unwrap();
                assert_eq!(v.degree(), m as usize - 1);
                assert!(v.poly_coeffs.last().unwrap().abs() > 0.0);
            }
        }
    }

    #[test]
    fn supplied_data() {
        let d = LaurentData::from_coeffs(2, vec![Complex64::new(1.0, 0.0), Complex64::new(0.5, 0.0)]).unwrap();
        let v = main_term_from_laurent(&d, 3.0).unwrap();
        // x (log x + 0.5 - 1).
        assert!((v.value - 3.0 * (3f64.ln() - 0.5)).abs() < 1e-14);
        assert!(LaurentData::from_coeffs(2, vec![Complex64::new(1.0, 0.0)]).is_err());
    }
}
