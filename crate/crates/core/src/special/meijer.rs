//! Meijer `G_{0,q}^{k,0}(- ; b | z)` at positive real `z` by Mellin–Barnes quadrature.
//!
//! The integrand is `F(s) = Π_{j≤k} Γ(b_j - s) / Π_{j>k} Γ(1 - b_j + s) · z^s`
//! and `G = (1/2πi) ∫_C F(s) ds` with every pole of the numerator to the
//! right of `C`. When `k = q` the contour is the vertical line through the
//! real saddle of `|F|`; otherwise it is the hyperbola
//! `s(t) = σ₀ + it + √(t² + a²) - a`, which opens to the right around the
//! poles and along which `F` decays factorially, so no condition on
//! `δ = k - q/2` is needed. Both contours are symmetric under conjugation,
//! so only `t ≥ 0` is sampled:
//! `G = (h/2π) [F(σ₀) + 2 Σ_{t>0} Im(F(s(t)) s'(t))]`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::special::gamma::{digamma, ln_gamma};

/// Parameters of `G_{0,q}^{k,0}(- ; b_1, …, b_q | z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GSpec {
    b: Vec<f64>,
    k: usize,
    z: f64,
}

impl GSpec {
    pub fn new(b: Vec<f64>, k: usize, z: f64) -> Result<Self> {
        let q = b.len();
        if q == 0 || k == 0 || k > q {
            return Err(Error::InvalidArgument(format!(
                "need 1 <= k <= q, got k = {k}, q = {q}"
            )));
        }
        if !(z > 0.0 && z.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "G argument must be positive and finite, got {z}"
            )));
        }
        if b.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument("b parameters must be finite".into()));
        }
        Ok(Self { b, k, z })
    }

    pub fn q(&self) -> usize {
        self.b.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    /// `δ = k - q/2`.
    pub fn delta(&self) -> f64 {
        self.k as f64 - 0.5 * self.q() as f64
    }

    /// `min_{j≤k} b_j`; the contour must cross the real axis left of it.
    pub fn pole_bound(&self) -> f64 {
        self.b[..self.k].iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// Where the contour crosses the real axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Abscissa {
    /// Real saddle of `|F|` when `k = q`, else `min b - 1/2`.
    Auto,
    Fixed(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureControls {
    pub abscissa: Abscissa,
    /// Nodes are sampled at least up to this `|t|`, then until negligible.
    pub half_height: f64,
    /// Initial trapezoid step; halved on each refinement.
    pub step: f64,
    pub max_refinements: u32,
    /// Target for the change between successive refinements, relative to `|G|`.
    pub rel_tol: f64,
}

impl Default for QuadratureControls {
    fn default() -> Self {
        Self {
            abscissa: Abscissa::Auto,
            half_height: 40.0,
            step: 0.2,
            max_refinements: 6,
            rel_tol: 1e-12,
        }
    }
}

/// A quadrature result with an error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
    pub converged: bool,
}

/// Nodes beyond which `|F s'|` falls below this fraction of its maximum are dropped.
const NEGLIGIBLE: f64 = 1e-18;
const MAX_NODES: usize = 4_000_000;

struct Contour {
    sigma: f64,
    beta: f64,
    a: f64,
}

impl Contour {
    fn point(&self, t: f64) -> (Complex64, Complex64) {
        let r = (t * t + self.a * self.a).sqrt();
        let s = Complex64::new(self.sigma + self.beta * (r - self.a), t);
        let ds = Complex64::new(self.beta * t / r, 1.0);
        (s, ds)
    }
}

fn ln_integrand(spec: &GSpec, ln_z: f64, s: Complex64) -> Result<Option<Complex64>> {
    let mut acc = s * ln_z;
    for (j, &bj) in spec.b.iter().enumerate() {
        if j < spec.k {
            acc += ln_gamma(Complex64::new(bj, 0.0) - s)?;
        } else {
            match ln_gamma(Complex64::new(1.0 - bj, 0.0) + s) {
                Ok(v) => acc -= v,
                Err(Error::Pole(_)) => return Ok(None),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(Some(acc))
}

/// Solves `Σ_j ψ(b_j - σ) = ln z` for `σ < min b`.
fn real_saddle(spec: &GSpec) -> f64 {
    let bmin = spec.pole_bound();
    let ln_z = spec.z.ln();
    let phi = |sigma: f64| spec.b.iter().map(|&bj| digamma(bj - sigma)).sum::<f64>() - ln_z;
    let mut lo = bmin - 1.0;
    while phi(lo) < 0.0 {
        lo = bmin - 2.0 * (bmin - lo);
    }
    let mut hi = bmin;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if phi(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

struct Pass {
    value: f64,
    tail: f64,
    floor: f64,
    complete: bool,
}

fn trapezoid(spec: &GSpec, contour: &Contour, h: f64, t_min: f64) -> Result<Pass> {
    let ln_z = spec.z.ln();
    let node = |t: f64| -> Result<(f64, f64, f64)> {
        let (s, ds) = contour.point(t);
        match ln_integrand(spec, ln_z, s)? {
            None => Ok((0.0, 0.0, 0.0)),
            Some(lf) => {
                let f = lf.exp() * ds;
                let weight = if t == 0.0 { f.im } else { 2.0 * f.im };
                // Rounding in log Γ scales with |log F|.
                let noise = f.norm() * (1.0 + lf.norm()) * 1e-15;
                Ok((weight, f.norm(), noise))
            }
        }
    };
    let (first, mut peak, mut noise) = node(0.0)?;
    let mut sum = first;
    let mut last = first.abs();
    let mut t = 0.0;
    let mut count = 0usize;
    let complete = loop {
        count += 1;
        if count > MAX_NODES {
            break false;
        }
        t += h;
        let (w, mag, nz) = node(t)?;
        sum += w;
        noise += 2.0 * nz;
        peak = peak.max(mag);
        last = mag;
        if t >= t_min && mag <= NEGLIGIBLE * peak {
            break true;
        }
    };
    let scale = h / (2.0 * PI);
    Ok(Pass {
        value: scale * sum,
        tail: if complete { scale * 2.0 * last * 10.0 } else { scale * 2.0 * last * t / h },
        floor: scale * noise,
        complete,
    })
}

/// Evaluates `G_{0,q}^{k,0}(- ; b | z)`.
pub fn meijer_g(spec: &GSpec, controls: &QuadratureControls) -> Result<Estimate> {
    if !(controls.step > 0.0 && controls.half_height > 0.0) {
        return Err(Error::InvalidArgument("step and half height must be positive".into()));
    }
    let bound = spec.pole_bound();
    let contour = if spec.k == spec.q() {
        let sigma = match controls.abscissa {
            Abscissa::Auto => real_saddle(spec),
            Abscissa::Fixed(mu) => mu,
        };
        Contour { sigma, beta: 0.0, a: 1.0 }
    } else {
        let sigma = match controls.abscissa {
            Abscissa::Auto => bound - 0.5,
            Abscissa::Fixed(mu) => mu,
        };
        let a = 1.5 * spec.z.powf(1.0 / spec.q() as f64) + 2.0;
        Contour { sigma, beta: 1.0, a }
    };
    if !(contour.sigma < bound) {
        return Err(Error::PoleSeparation {
            abscissa: contour.sigma,
            bound,
        });
    }
    let t_min = controls.half_height.max(contour.a);
    let mut h = controls.step;
    let mut prev = trapezoid(spec, &contour, h, t_min)?;
    let mut refinements = 0;
    loop {
        h *= 0.5;
        refinements += 1;
        let cur = trapezoid(spec, &contour, h, t_min)?;
        let diff = (cur.value - prev.value).abs();
        let error = diff + cur.tail + cur.floor;
        let target = (controls.rel_tol * cur.value.abs()).max(10.0 * cur.floor);
        let done = diff <= target && cur.complete;
        if done || refinements >= controls.max_refinements.max(1) {
            return Ok(Estimate {
                value: cur.value,
                error,
                converged: done,
            });
        }
        prev = cur;
    }
}

/// `V(x; a_1, …, a_n) = G_{0,n}^{n,0}(- ; a | x)`.
pub fn voronoi_steen(x: f64, a: &[f64]) -> Result<Estimate> {
    voronoi_steen_with(x, a, &QuadratureControls::default())
}

pub fn voronoi_steen_with(x: f64, a: &[f64], controls: &QuadratureControls) -> Result<Estimate> {
    let spec = GSpec::new(a.to_vec(), a.len(), x)?;
    meijer_g(&spec, controls)
}
