//! Report serialization with fixed field order and 17 significant digits.

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

pub const SCHEMA: u32 = 1;

/// A float printed as `{:.16e}`, or `null` when not finite.
#[derive(Debug, Clone, Copy)]
pub struct Num(pub f64);

impl Num {
    pub fn text(self) -> String {
        if self.0.is_finite() {
            format!("{:.16e}", self.0)
        } else {
            "nan".into()
        }
    }
}

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            RawValue::from_string(self.text()).map_err(serde::ser::Error::custom)?.serialize(s)
        } else {
            s.serialize_none()
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IdentityJson {
    pub schema: u32,
    pub case: String,
    pub field: String,
    pub m: u32,
    pub x: String,
    #[serde(rename = "N")]
    pub n: u64,
    pub oracle: Num,
    pub main_term: Num,
    pub constant_term: Num,
    pub series: Num,
    pub accelerated: Num,
    pub discrepancy: Num,
    pub discrepancy_accelerated: Num,
    pub residue_term: Num,
    pub series_error_bar: Num,
    pub wall_time_ms: Option<u64>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RieszJson {
    pub schema: u32,
    pub field: String,
    pub m: u32,
    pub rho: u32,
    pub mu: Num,
    pub x: String,
    pub direct: Num,
    pub residue_side: Num,
    pub vertical_integral: Num,
    pub discrepancy: Num,
    pub quadrature_error_bar: Num,
    pub tolerance: Num,
    pub pass: bool,
    pub wall_time_ms: Option<u64>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MainTermJson {
    pub schema: u32,
    pub field: String,
    pub m: u32,
    pub x: String,
    pub main_term: Num,
    /// Coefficients of `P` in `x P(log x)`, constant term first.
    pub poly: Vec<Num>,
    pub wall_time_ms: Option<u64>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CoeffsJson {
    pub schema: u32,
    pub field: String,
    pub m: u32,
    #[serde(rename = "N")]
    pub n: u64,
    pub coefficients: Vec<u64>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GfunJson {
    pub schema: u32,
    pub q: usize,
    pub k: usize,
    pub b: Vec<Num>,
    pub z: Num,
    pub value: Num,
    pub error: Num,
    pub converged: bool,
    pub wall_time_ms: Option<u64>,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

/// A header line and one data line.
pub fn csv_record(pairs: &[(&str, String)]) -> String {
    let header: Vec<&str> = pairs.iter().map(|(k, _)| *k).collect();
    let row: Vec<&str> = pairs.iter().map(|(_, v)| v.as_str()).collect();
    format!("{}\n{}\n", header.join(","), row.join(","))
}
