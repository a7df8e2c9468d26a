mod field_spec;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use piltz_core::arith::{coeff_power, ingest_coefficients, write_coefficients, CoefficientTable};
use piltz_core::checks::{run_checks, CheckGroup, TOLERANCE_ENV};
use piltz_core::identities::{
    evaluate_identity_with, riesz_check, AnalyticData, IdentityCase, IdentityVariant, RieszControls,
};
use piltz_core::special::{meijer_g, Abscissa, GSpec, QuadratureControls};
use piltz_core::zeta::main_term;
use piltz_core::{Error, FieldDescriptor, PositiveRational};

use field_spec::{field_spec, parse_field_spec};
use report::{csv_record, to_json, CoeffsJson, GfunJson, IdentityJson, MainTermJson, Num, RieszJson, SCHEMA};

#[derive(Parser)]
#[command(name = "piltz", version, about = "Piltz divisor sums and Voronoi-type identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the coefficient table of v_K^m, or re-emit an ingested one.
    Coeffs(CoeffsArgs),
    /// Residue main term x P(log x).
    Mainterm(MaintermArgs),
    /// Truncated identity against the brute-force sum.
    Identity(IdentityArgs),
    /// Riesz-smoothed identity check.
    Riesz(RieszArgs),
    /// Evaluate G_{0,q}^{k,0}(- ; b | z).
    Gfun(GfunArgs),
    /// Run the invariant suite and print a pass/fail table.
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct OutputArgs {
    /// Report path; standard output when omitted.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Omit the wall time so identical runs give identical reports.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct MeijerArgs {
    /// Contour crossing of the real axis.
    #[arg(long)]
    abscissa: Option<f64>,
    #[arg(long)]
    half_height: Option<f64>,
    /// Initial trapezoid step.
    #[arg(long)]
    step: Option<f64>,
    #[arg(long)]
    max_refinements: Option<u32>,
    #[arg(long)]
    rel_tol: Option<f64>,
}

#[derive(Args)]
struct CoeffsArgs {
    #[arg(long, default_value = "q")]
    field: String,
    #[arg(long, default_value_t = 1)]
    m: u32,
    /// Largest n in the table.
    #[arg(long = "n", short = 'n')]
    limit: Option<u64>,
    /// Validate and re-emit a coefficient CSV instead of sieving.
    #[arg(long, conflicts_with = "limit")]
    ingest: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct MaintermArgs {
    #[arg(long, default_value = "q")]
    field: String,
    #[arg(long, default_value_t = 1)]
    m: u32,
    #[arg(long)]
    x: String,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct IdentityArgs {
    /// q-m2, q-m, real-quad, imag-quad, meijer or steen.
    #[arg(long)]
    case: String,
    /// Defaults to q.
    #[arg(long)]
    field: Option<String>,
    /// Defaults to 2 for q-m2 and 1 otherwise.
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    x: String,
    #[arg(long, default_value_t = 2000)]
    terms: u64,
    /// Exit 1 when the accelerated discrepancy exceeds this.
    #[arg(long)]
    tolerance: Option<f64>,
    /// Convergence CSV path; defaults to `<output stem>.convergence.csv` next to the report.
    #[arg(long)]
    convergence: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[command(flatten)]
    quad: MeijerArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct RieszArgs {
    #[arg(long, default_value = "q")]
    field: String,
    #[arg(long, default_value_t = 1)]
    m: u32,
    #[arg(long)]
    rho: u32,
    #[arg(long, default_value_t = -0.5, allow_hyphen_values = true)]
    mu: f64,
    #[arg(long)]
    x: String,
    /// Relative tolerance on the discrepancy.
    #[arg(long, default_value_t = 1e-6)]
    tolerance: f64,
    #[arg(long)]
    turn_height: Option<f64>,
    #[arg(long)]
    ray_abscissa: Option<f64>,
    #[arg(long)]
    panel_width: Option<f64>,
    #[arg(long)]
    ray_terms: Option<u64>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct GfunArgs {
    #[arg(long)]
    q: usize,
    #[arg(long)]
    k: usize,
    /// Comma-separated b_1, ..., b_q.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    b: Vec<f64>,
    #[arg(long)]
    z: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[command(flatten)]
    quad: MeijerArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct SelftestArgs {
    /// Restrict to these groups: gamma, zeta, meijer, bessel, riesz.
    #[arg(long, value_delimiter = ',')]
    only: Vec<String>,
}

/// A diagnostic with its exit code.
struct Failure {
    code: u8,
    msg: String,
}

type Outcome = Result<bool, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotFundamental(_)
            | Error::BadSignature { .. }
            | Error::UnsupportedField { .. }
            | Error::InvalidArgument(_)
            | Error::OrderAssumption { .. }
            | Error::NotEvaluated(_)
            | Error::BeyondLimit { .. }
            | Error::PoleSeparation { .. } => 2,
            _ => 1,
        };
        Failure { code, msg: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: 1, msg: e.to_string() }
    }
}

fn field(s: &str) -> Result<FieldDescriptor, Failure> {
    parse_field_spec(s).map_err(usage)
}

fn rational(s: &str) -> Result<PositiveRational, Failure> {
    s.parse().map_err(|e: Error| usage(e.to_string()))
}

fn positive(name: &str, v: Option<f64>) -> Result<(), Failure> {
    match v {
        Some(v) if !(v > 0.0 && v.is_finite()) => Err(usage(format!("--{name} must be positive, got {v}"))),
        _ => Ok(()),
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure { code: 1, msg: format!("{}: {e}", p.display()) }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn elapsed_ms(start: Instant, out: &OutputArgs) -> Option<u64> {
    (!out.no_timing).then(|| start.elapsed().as_millis() as u64)
}

impl MeijerArgs {
    fn controls(&self) -> Result<QuadratureControls, Failure> {
        positive("half-height", self.half_height)?;
        positive("step", self.step)?;
        positive("rel-tol", self.rel_tol)?;
        let mut c = QuadratureControls::default();
        if let Some(a) = self.abscissa {
            c.abscissa = Abscissa::Fixed(a);
        }
        if let Some(v) = self.half_height {
            c.half_height = v;
        }
        if let Some(v) = self.step {
            c.step = v;
        }
        if let Some(v) = self.max_refinements {
            c.max_refinements = v;
        }
        if let Some(v) = self.rel_tol {
            c.rel_tol = v;
        }
        Ok(c)
    }
}

fn coeffs(a: &CoeffsArgs) -> Outcome {
    let f = field(&a.field)?;
    let table: CoefficientTable = match (&a.ingest, a.limit) {
        (Some(path), _) => ingest_coefficients(path, &f, a.m)?,
        (None, Some(n)) => coeff_power(&f, a.m, n)?,
        (None, None) => return Err(usage("coeffs needs --n or --ingest")),
    };
    let text = match a.format {
        Format::Csv => {
            let mut buf = Vec::new();
            write_coefficients(&table, &mut buf)?;
            String::from_utf8(buf).expect("CSV is ASCII")
        }
        Format::Json => to_json(&CoeffsJson {
            schema: SCHEMA,
            field: field_spec(&f),
            m: a.m,
            n: table.limit(),
            coefficients: table.values()[1..].to_vec(),
        }),
    };
    emit(a.output.as_deref(), &text)?;
    Ok(true)
}

fn mainterm(a: &MaintermArgs) -> Outcome {
    let start = Instant::now();
    let f = field(&a.field)?;
    let x = rational(&a.x)?;
    let v = main_term(&f, a.m, x.to_f64())?;
    let text = match a.format {
        Format::Json => to_json(&MainTermJson {
            schema: SCHEMA,
            field: field_spec(&f),
            m: a.m,
            x: x.to_string(),
            main_term: Num(v.value),
            poly: v.poly_coeffs.iter().map(|&c| Num(c)).collect(),
            wall_time_ms: elapsed_ms(start, &a.out),
        }),
        Format::Csv => csv_record(&[
            ("field", field_spec(&f)),
            ("m", a.m.to_string()),
            ("x", x.to_string()),
            ("mainTerm", Num(v.value).text()),
        ]),
    };
    emit(a.out.output.as_deref(), &text)?;
    Ok(true)
}

fn identity_case(a: &IdentityArgs) -> Result<IdentityCase, Failure> {
    use IdentityVariant::*;
    let (variant, default_m) = match a.case.as_str() {
        "q-m2" => (RationalsM2, 2),
        "q-m" => (RationalsM, 1),
        "real-quad" => (RealQuadratic, 1),
        "imag-quad" => (ImagQuadratic, 1),
        "meijer" => (PurelyImaginaryMeijer, 1),
        "steen" => (TotallyRealSteen, 1),
        other => {
            return Err(usage(format!(
                "unknown case `{other}`; expected q-m2, q-m, real-quad, imag-quad, meijer or steen"
            )))
        }
    };
    let f = field(a.field.as_deref().unwrap_or("q"))?;
    Ok(IdentityCase::new(variant, f, a.m.unwrap_or(default_m))?)
}

fn convergence_path(a: &IdentityArgs) -> Option<PathBuf> {
    a.convergence.clone().or_else(|| {
        let out = a.out.output.as_ref()?;
        let stem = out.file_stem()?.to_string_lossy().into_owned();
        Some(out.with_file_name(format!("{stem}.convergence.csv")))
    })
}

fn identity(a: &IdentityArgs) -> Outcome {
    let start = Instant::now();
    let case = identity_case(a)?;
    let x = rational(&a.x)?;
    if a.terms == 0 {
        return Err(usage("--terms must be at least 1"));
    }
    positive("tolerance", a.tolerance)?;
    let controls = a.quad.controls()?;
    let table = coeff_power(case.field(), case.m(), a.terms.max(x.floor()))?;
    let analytic = AnalyticData::for_field(case.field(), case.m())?;
    let r = evaluate_identity_with(&case, &x, a.terms, &table, &analytic, &controls)?;
    let wall = elapsed_ms(start, &a.out);
    let text = match a.format {
        Format::Json => to_json(&IdentityJson {
            schema: SCHEMA,
            case: a.case.clone(),
            field: field_spec(case.field()),
            m: case.m(),
            x: x.to_string(),
            n: r.terms,
            oracle: Num(r.oracle),
            main_term: Num(r.main_term),
            constant_term: Num(r.constant_term),
            series: Num(r.series),
            accelerated: Num(r.accelerated),
            discrepancy: Num(r.discrepancy),
            discrepancy_accelerated: Num(r.discrepancy_accelerated),
            residue_term: Num(r.residue_term),
            series_error_bar: Num(r.series_error),
            wall_time_ms: wall,
        }),
        Format::Csv => csv_record(&[
            ("case", a.case.clone()),
            ("field", field_spec(case.field())),
            ("m", case.m().to_string()),
            ("x", x.to_string()),
            ("N", r.terms.to_string()),
            ("oracle", Num(r.oracle).text()),
            ("mainTerm", Num(r.main_term).text()),
            ("constantTerm", Num(r.constant_term).text()),
            ("series", Num(r.series).text()),
            ("accelerated", Num(r.accelerated).text()),
            ("discrepancy", Num(r.discrepancy).text()),
            ("discrepancyAccelerated", Num(r.discrepancy_accelerated).text()),
        ]),
    };
    if let Some(path) = convergence_path(a) {
        let mut csv = String::from("N,series_partial,discrepancy\n");
        for (k, s, d) in r.convergence_rows() {
            csv.push_str(&format!("{k},{},{}\n", Num(s).text(), Num(d).text()));
        }
        emit(Some(&path), &csv)?;
    }
    emit(a.out.output.as_deref(), &text)?;
    let pass = a.tolerance.is_none_or(|t| r.discrepancy_accelerated <= t);
    if !pass {
        eprintln!("accelerated discrepancy {:e} exceeds tolerance {:e}", r.discrepancy_accelerated, a.tolerance.unwrap());
    }
    Ok(pass)
}

fn riesz(a: &RieszArgs) -> Outcome {
    let start = Instant::now();
    let f = field(&a.field)?;
    let x = rational(&a.x)?;
    positive("tolerance", Some(a.tolerance))?;
    positive("turn-height", a.turn_height)?;
    positive("panel-width", a.panel_width)?;
    let mut c = RieszControls::default();
    if let Some(v) = a.turn_height {
        c.turn_height = v;
    }
    if let Some(v) = a.ray_abscissa {
        if v <= 1.0 {
            return Err(usage(format!("--ray-abscissa must exceed 1, got {v}")));
        }
        c.ray_abscissa = v;
    }
    if let Some(v) = a.panel_width {
        c.panel_width = v;
    }
    if let Some(v) = a.ray_terms {
        c.ray_terms = v.max(1);
        c.max_ray_terms = c.max_ray_terms.max(c.ray_terms);
    }
    let r = riesz_check(&f, a.m, a.rho, a.mu, &x, &c)?;
    let pass = r.passes(a.tolerance);
    let text = match a.format {
        Format::Json => to_json(&RieszJson {
            schema: SCHEMA,
            field: field_spec(&f),
            m: a.m,
            rho: a.rho,
            mu: Num(a.mu),
            x: x.to_string(),
            direct: Num(r.direct),
            residue_side: Num(r.residue_side),
            vertical_integral: Num(r.vertical_integral),
            discrepancy: Num(r.discrepancy),
            quadrature_error_bar: Num(r.quadrature_error_bar),
            tolerance: Num(a.tolerance),
            pass,
            wall_time_ms: elapsed_ms(start, &a.out),
        }),
        Format::Csv => csv_record(&[
            ("field", field_spec(&f)),
            ("m", a.m.to_string()),
            ("rho", a.rho.to_string()),
            ("mu", Num(a.mu).text()),
            ("x", x.to_string()),
            ("direct", Num(r.direct).text()),
            ("residueSide", Num(r.residue_side).text()),
            ("verticalIntegral", Num(r.vertical_integral).text()),
            ("discrepancy", Num(r.discrepancy).text()),
            ("quadratureErrorBar", Num(r.quadrature_error_bar).text()),
            ("pass", pass.to_string()),
        ]),
    };
    emit(a.out.output.as_deref(), &text)?;
    if !pass {
        eprintln!("discrepancy {:e} exceeds max({:e} |direct|, error bar {:e})", r.discrepancy, a.tolerance, r.quadrature_error_bar);
    }
    Ok(pass)
}

fn gfun(a: &GfunArgs) -> Outcome {
    let start = Instant::now();
    if a.b.len() != a.q {
        return Err(usage(format!("--b has {} entries but --q is {}", a.b.len(), a.q)));
    }
    let spec = GSpec::new(a.b.clone(), a.k, a.z)?;
    let e = meijer_g(&spec, &a.quad.controls()?)?;
    let text = match a.format {
        Format::Json => to_json(&GfunJson {
            schema: SCHEMA,
            q: a.q,
            k: a.k,
            b: a.b.iter().map(|&v| Num(v)).collect(),
            z: Num(a.z),
            value: Num(e.value),
            error: Num(e.error),
            converged: e.converged,
            wall_time_ms: elapsed_ms(start, &a.out),
        }),
        Format::Csv => csv_record(&[
            ("value", Num(e.value).text()),
            ("error", Num(e.error).text()),
            ("converged", e.converged.to_string()),
        ]),
    };
    emit(a.out.output.as_deref(), &text)?;
    if !e.converged {
        eprintln!("quadrature did not reach the requested tolerance (error estimate {:e})", e.error);
    }
    Ok(e.converged)
}

fn selftest(a: &SelftestArgs) -> Outcome {
    let groups = if a.only.is_empty() {
        CheckGroup::ALL.to_vec()
    } else {
        a.only.iter().map(|g| g.parse::<CheckGroup>()).collect::<Result<Vec<_>, _>>()?
    };
    let tolerance = match std::env::var(TOLERANCE_ENV) {
        Ok(v) => Some(
            v.trim()
                .parse::<f64>()
                .ok()
                .filter(|t| *t >= 0.0)
                .ok_or_else(|| usage(format!("{TOLERANCE_ENV}={v} is not a non-negative number")))?,
        ),
        Err(_) => None,
    };
    let outcomes = run_checks(&groups, tolerance)?;
    let width = outcomes.iter().map(|o| o.name.len()).max().unwrap_or(0);
    let mut failed = 0;
    for o in &outcomes {
        let verdict = if o.passed() { "PASS" } else { "FAIL" };
        failed += usize::from(!o.passed());
        println!("{:<7} {:<width$}  {:>10.3e}  {:>8.1e}  {verdict}", o.group.as_str(), o.name, o.residual, o.tolerance);
    }
    println!("{} checks, {failed} failed", outcomes.len());
    Ok(failed == 0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Coeffs(a) => coeffs(a),
        Command::Mainterm(a) => mainterm(a),
        Command::Identity(a) => identity(a),
        Command::Riesz(a) => riesz(a),
        Command::Gfun(a) => gfun(a),
        Command::Selftest(a) => selftest(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("piltz: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
