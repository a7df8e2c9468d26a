//! Both sides of the unsmoothed identities at a truncation point `N`.

use rayon::prelude::*;

use crate::arith::sums::halved_partial_sum;
use crate::arith::table::{coeff_power, CoefficientTable};
use crate::error::{Error, Result};
use crate::field::FieldDescriptor;
use crate::identities::terms::{kernel, not_evaluated, IdentityCase};
use crate::rational::PositiveRational;
use crate::special::meijer::QuadratureControls;
use crate::zeta::dedekind::zeta_at_zero;
use crate::zeta::laurent::{laurent_at_one, main_term_from_laurent, LaurentData};

/// `ζ_K(0)` and the Laurent data of `ζ_K^m` at 1.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticData {
    pub zeta_at_zero: f64,
    pub laurent: LaurentData,
}

impl AnalyticData {
    /// Computes both from the zeta engine.
    pub fn for_field(field: &FieldDescriptor, m: u32) -> Result<Self> {
        Ok(Self {
            zeta_at_zero: zeta_at_zero(field)?,
            laurent: laurent_at_one(field, m, 0)?,
        })
    }
}

/// Oracle and series side of an identity.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub case: IdentityCase,
    pub x: PositiveRational,
    pub terms: u64,
    pub oracle: f64,
    /// Full residue of `ζ_K^m x^s / s` at 1.
    pub main_term: f64,
    /// `ζ_K(0)^m`.
    pub constant_term: f64,
    pub series: f64,
    /// Mean of the last `⌈N/4⌉` partial sums.
    pub accelerated: f64,
    pub discrepancy: f64,
    pub discrepancy_accelerated: f64,
    /// `Res_{s=1} ζ_K^m · x`; equals `main_term` only when `m = 1`.
    pub residue_term: f64,
    /// Accumulated quadrature error of the summands.
    pub series_error: f64,
    /// `S_1, …, S_N`.
    pub partial_sums: Vec<f64>,
}

impl IdentityReport {
    /// `(k, S_k, |oracle - constant - main - S_k|)` for `k = 1..=N`.
    pub fn convergence_rows(&self) -> impl Iterator<Item = (u64, f64, f64)> + '_ {
        let base = self.oracle - self.constant_term - self.main_term;
        self.partial_sums
            .iter()
            .enumerate()
            .map(move |(i, s)| (i as u64 + 1, *s, (base - s).abs()))
    }
}

/// Evaluates `case` at `x` with `N` terms, sieving `v_K^m` and computing the
/// analytic data from the zeta engine.
pub fn evaluate_identity(case: &IdentityCase, x: &PositiveRational, terms: u64) -> Result<IdentityReport> {
    let limit = terms.max(x.floor()).max(1);
    let table = coeff_power(case.field(), case.m(), limit)?;
    let analytic = AnalyticData::for_field(case.field(), case.m())?;
    evaluate_identity_with(case, x, terms, &table, &analytic, &QuadratureControls::default())
}

/// As [`evaluate_identity`] with a supplied table and analytic data.
pub fn evaluate_identity_with(
    case: &IdentityCase,
    x: &PositiveRational,
    terms: u64,
    table: &CoefficientTable,
    analytic: &AnalyticData,
    controls: &QuadratureControls,
) -> Result<IdentityReport> {
    if terms == 0 {
        return Err(Error::InvalidArgument("truncation N must be at least 1".into()));
    }
    if !case.has_series() {
        return Err(not_evaluated(case));
    }
    if table.field() != case.field() || table.power() != case.m() {
        return Err(Error::TableMismatch(format!(
            "table is for {} with power {}, case is {case}",
            table.field(),
            table.power()
        )));
    }
    if analytic.laurent.pole_order() != case.m() {
        return Err(Error::InvalidArgument(format!(
            "Laurent data has pole order {}, case needs {}",
            analytic.laurent.pole_order(),
            case.m()
        )));
    }
    if table.limit() < terms {
        return Err(Error::BeyondLimit { x: terms.to_string(), limit: table.limit() });
    }
    let oracle = halved_partial_sum(table, x)?;
    let xf = x.to_f64();
    let main = main_term_from_laurent(&analytic.laurent, xf)?;
    let constant_term = analytic.zeta_at_zero.powi(case.m() as i32);
    let summands: Vec<(f64, f64)> = (1..=terms)
        .into_par_iter()
        .map(|n| {
            let c = table.get(n);
            if c == 0 {
                return Ok((0.0, 0.0));
            }
            let k = kernel(case, n, xf, controls)?;
            Ok((c as f64 * k.value, c as f64 * k.error))
        })
        .collect::<Result<_>>()?;
    let mut partial_sums = Vec::with_capacity(terms as usize);
    let mut acc = 0.0;
    let mut series_error = 0.0;
    for (v, e) in &summands {
        acc += v;
        series_error += e;
        partial_sums.push(acc);
    }
    let q = terms.div_ceil(4) as usize;
    let tail = &partial_sums[partial_sums.len() - q..];
    let accelerated = tail.iter().sum::<f64>() / q as f64;
    let base = oracle - constant_term - main.value;
    Ok(IdentityReport {
        case: *case,
        x: *x,
        terms,
        oracle,
        main_term: main.value,
        constant_term,
        series: acc,
        accelerated,
        discrepancy: (base - acc).abs(),
        discrepancy_accelerated: (base - accelerated).abs(),
        residue_term: analytic.laurent.residue().re * xf,
        series_error,
        partial_sums,
    })
}
