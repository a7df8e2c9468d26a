//! Acceptance run: one line per criterion, non-zero exit if any fails.

use std::process::ExitCode;
use std::time::Instant;

use num_complex::Complex64;
use piltz_core::arith::{coeff_power, halved_partial_sum, sieve_vk};
use piltz_core::checks::{
    gamma_checks, lambda_symmetry, power_equation_cases, power_equation_residual, reduction_residual,
    riesz_derivative_errors, riesz_integral_residual, standard_fields, Reduction,
};
use piltz_core::identities::{
    evaluate_identity, riesz_check, series_term_meijer, series_term_quadratic, IdentityCase, IdentityVariant,
    RieszControls,
};
use piltz_core::zeta::{dedekind_zeta, laurent_at_one, main_term, zeta_at_zero};
use piltz_core::{FieldDescriptor, PositiveRational};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn rational(s: &str) -> PositiveRational {
    s.parse().expect("valid rational")
}

/// `Σ_{n≤x} d(n)` by trial division.
fn divisor_sum_brute(x: u64) -> u64 {
    (1..=x).map(|n| (1..=n).filter(|d| n % d == 0).count() as u64).sum()
}

/// `#{(a, b) ≠ 0 : a² + b² ≤ x} / 4`.
fn quarter_lattice_count(x: f64) -> f64 {
    let r = x.sqrt().floor() as i64;
    let mut count = 0u64;
    for a in -r..=r {
        for b in -r..=r {
            let n = (a * a + b * b) as f64;
            if n > 0.0 && n <= x {
                count += 1;
            }
        }
    }
    count as f64 / 4.0
}

/// `Σ_{d|n} (d/5)` with the Legendre symbol read off the residue class.
fn v_sqrt5_enumerated(n: u64) -> u64 {
    let chi = |d: u64| match d % 5 {
        0 => 0i64,
        1 | 4 => 1,
        _ => -1,
    };
    (1..=n).filter(|d| n % d == 0).map(chi).sum::<i64>() as u64
}

/// Oracle equality plus accelerated discrepancy at N = 4000 ≤ 1e-2 and below N = 250.
fn identity_protocol(case: &IdentityCase, x: &PositiveRational, oracle: f64) -> Result<Outcome, String> {
    let long = evaluate_identity(case, x, 4000).map_err(|e| e.to_string())?;
    let short = evaluate_identity(case, x, 250).map_err(|e| e.to_string())?;
    let pass = long.oracle == oracle
        && long.discrepancy_accelerated <= 1e-2
        && long.discrepancy_accelerated < short.discrepancy_accelerated;
    Ok(outcome(
        pass,
        format!(
            "oracle {} (expected {oracle}), accelerated discrepancy N=4000 {:.3e}, N=250 {:.3e}",
            long.oracle, long.discrepancy_accelerated, short.discrepancy_accelerated
        ),
    ))
}

fn criterion_1() -> Result<Outcome, String> {
    let x = rational("21/2");
    let brute = divisor_sum_brute(10) as f64;
    let gamma = laurent_at_one(&FieldDescriptor::rationals(), 1, 0)
        .map_err(|e| e.to_string())?
        .coeff(0)
        .unwrap()
        .re;
    let xf = x.to_f64();
    let closed = xf * xf.ln() + (2.0 * gamma - 1.0) * xf;
    let main = main_term(&FieldDescriptor::rationals(), 2, xf).map_err(|e| e.to_string())?.value;
    let main_ok = (main - closed).abs() <= 1e-10 * closed.abs();
    let r = identity_protocol(&IdentityCase::rationals_m2(), &x, 27.0)?;
    Ok(outcome(
        r.pass && brute == 27.0 && main_ok,
        format!("brute force {brute}, main term {main:.12} vs closed form {closed:.12}; {}", r.detail),
    ))
}

fn criterion_2() -> Result<Outcome, String> {
    let gi = FieldDescriptor::gaussian();
    let x = rational("9/2");
    let lattice = quarter_lattice_count(x.to_f64());
    let z0 = zeta_at_zero(&gi).map_err(|e| e.to_string())?;
    let z0_eval = dedekind_zeta(&gi, Complex64::new(0.0, 0.0)).map_err(|e| e.to_string())?.re;
    // Leibniz series averaged over two consecutive partial sums.
    let (mut s, mut prev) = (0.0, 0.0);
    for k in 0..4_000_000u64 {
        prev = s;
        let t = 1.0 / (2 * k + 1) as f64;
        s += if k % 2 == 0 { t } else { -t };
    }
    let leibniz = 0.5 * (s + prev);
    let h = laurent_at_one(&gi, 1, 0).map_err(|e| e.to_string())?.residue().re;
    let case = IdentityCase::new(IdentityVariant::ImagQuadratic, gi, 1).map_err(|e| e.to_string())?;
    let r = identity_protocol(&case, &x, lattice)?;
    let pass = r.pass && z0 == -0.25 && (z0_eval + 0.25).abs() < 1e-12 && (h - leibniz).abs() <= 1e-9;
    Ok(outcome(
        pass,
        format!("zeta_K(0) {z0} (evaluated {z0_eval:.3e}), H {h:.15} vs Leibniz {leibniz:.15}; {}", r.detail),
    ))
}

fn criterion_3() -> Result<Outcome, String> {
    let r5 = FieldDescriptor::quadratic(5).map_err(|e| e.to_string())?;
    let table = sieve_vk(&r5, 1000).map_err(|e| e.to_string())?;
    let mismatch = (1..=1000u64).find(|&n| table.get(n) != v_sqrt5_enumerated(n));
    let x = rational("9/2");
    let oracle: f64 = (1..=4u64).map(v_sqrt5_enumerated).sum::<u64>() as f64;
    let table_oracle = halved_partial_sum(&table, &x).map_err(|e| e.to_string())?;
    let case = IdentityCase::new(IdentityVariant::RealQuadratic, r5, 1).map_err(|e| e.to_string())?;
    let r = identity_protocol(&case, &x, oracle)?;
    Ok(outcome(
        r.pass && mismatch.is_none() && table_oracle == oracle,
        format!("sieve vs enumeration mismatch {mismatch:?}; {}", r.detail),
    ))
}

fn criterion_4() -> Result<Outcome, String> {
    let [q, gi, r5] = standard_fields();
    let grid = [(q, 1, 2), (q, 2, 4), (gi, 1, 3), (gi, 2, 4), (r5, 1, 3)];
    let x = rational("21/2");
    let mut pass = true;
    let mut parts = Vec::new();
    for (f, m, rho) in grid {
        let r = riesz_check(&f, m, rho, -0.5, &x, &RieszControls::default()).map_err(|e| e.to_string())?;
        pass &= r.passes(1e-6);
        parts.push(format!("{f} m={m} rho={rho}: disc {:.2e} bar {:.2e}", r.discrepancy, r.quadrature_error_bar));
    }
    Ok(outcome(pass, parts.join("; ")))
}

fn criterion_5() -> Result<Outcome, String> {
    let mut worst = 0.0f64;
    for (i, (f, m)) in power_equation_cases().into_iter().enumerate() {
        worst = worst.max(power_equation_residual(&f, m, 500 + i as u64).map_err(|e| e.to_string())?);
    }
    Ok(outcome(worst <= 1e-10, format!("worst residual {worst:.3e} over 6 cases x 10 points")))
}

fn criterion_6() -> Result<Outcome, String> {
    let mut parts = Vec::new();
    let mut pass = true;
    for r in Reduction::ALL {
        let v = reduction_residual(r).map_err(|e| e.to_string())?;
        pass &= v <= 1e-8;
        parts.push(format!("{} {v:.2e}", r.name()));
    }
    Ok(outcome(pass, parts.join(", ")))
}

fn criterion_7() -> Result<Outcome, String> {
    let gi = FieldDescriptor::gaussian();
    let case = IdentityCase::new(IdentityVariant::ImagQuadratic, gi, 1).map_err(|e| e.to_string())?;
    let mut rng = StdRng::seed_from_u64(7);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let n = rng.gen_range(1..=200u64);
        let x = rng.gen_range(0.5..50.0);
        let a = series_term_meijer(&gi, 1, n, x).map_err(|e| e.to_string())?.value;
        let b = series_term_quadratic(&case, n, x).map_err(|e| e.to_string())?;
        worst = worst.max((a - b).abs() / b.abs().max(1.0));
    }
    Ok(outcome(worst <= 1e-9, format!("worst deviation {worst:.3e} over 20 (n, x)")))
}

fn criterion_8() -> Result<Outcome, String> {
    let mut parts = Vec::new();
    let mut pass = true;
    for (name, residual, _) in gamma_checks().map_err(|e| e.to_string())? {
        pass &= residual <= 1e-10;
        parts.push(format!("{name} {residual:.2e}"));
    }
    for (i, f) in standard_fields().iter().enumerate() {
        let r = lambda_symmetry(f, 800 + i as u64).map_err(|e| e.to_string())?;
        pass &= r <= 1e-10;
        parts.push(format!("Lambda {f} {r:.2e}"));
    }
    Ok(outcome(pass, parts.join(", ")))
}

fn criterion_9() -> Result<Outcome, String> {
    let mut parts = Vec::new();
    let mut pass = true;
    let [q, gi, _] = standard_fields();
    for (f, m) in [(q, 2u32), (gi, 1)] {
        let table = coeff_power(&f, m, 64).map_err(|e| e.to_string())?;
        for rho in [2u32, 3] {
            let e = riesz_derivative_errors(&table, rho).map_err(|e| e.to_string())?;
            // Central differences are exact on quadratics and O(h²) beyond.
            let ok = e.iter().all(|v| *v <= 1e-9) || (e[1] <= e[0] / 3.5 && e[2] <= e[1] / 3.5);
            pass &= ok;
            parts.push(format!("{f} m={m} rho={rho} diff errors {:.1e}/{:.1e}/{:.1e}", e[0], e[1], e[2]));
        }
        for rho in [1u32, 2] {
            let r = riesz_integral_residual(&table, rho, &rational("103/4")).map_err(|e| e.to_string())?;
            pass &= r <= 1e-6;
            parts.push(format!("{f} m={m} rho={rho} integral {r:.1e}"));
        }
    }
    Ok(outcome(pass, parts.join(", ")))
}

type Criterion = (u32, &'static str, fn() -> Result<Outcome, String>, f64);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "divisor problem over Q", criterion_1, 10.0),
        (2, "imaginary quadratic Q(i)", criterion_2, 10.0),
        (3, "real quadratic Q(sqrt 5)", criterion_3, 10.0),
        (4, "Riesz-smoothed identity grid", criterion_4, 60.0),
        (5, "power functional equation", criterion_5, 5.0),
        (6, "G-function reductions", criterion_6, 10.0),
        (7, "Meijer vs Bessel summands", criterion_7, 10.0),
        (8, "Gamma identities and Lambda symmetry", criterion_8, f64::INFINITY),
        (9, "Riesz derivative and integral form", criterion_9, f64::INFINITY),
    ];
    let mut failures = 0;
    for (id, name, run, budget) in criteria {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        let (pass, detail) = match result {
            Ok(o) => (o.pass && secs <= budget, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failures += 1;
        }
        let verdict = if pass { "PASS" } else { "FAIL" };
        println!("criterion {id} [{verdict}] {name} ({secs:.2}s): {detail}");
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
