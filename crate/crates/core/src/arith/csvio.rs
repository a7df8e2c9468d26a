//! Coefficient CSV files: header `n,coeff`, rows `n = 1..N` contiguous.

use std::io::{Read, Write};
use std::path::Path;

use crate::arith::table::{CoefficientTable, Provenance};
use crate::error::{Error, Result};
use crate::field::FieldDescriptor;

/// Reads and validates a coefficient file for `ζ_K^m`.
pub fn ingest_coefficients(
    path: impl AsRef<Path>,
    field: &FieldDescriptor,
    m: u32,
) -> Result<CoefficientTable> {
    let path = path.as_ref();
    let file = std::fs::File::open(path)?;
    read_coefficients(file, path, field, m)
}

/// As [`ingest_coefficients`], from any reader; `path` only labels diagnostics.
pub fn read_coefficients<R: Read>(
    reader: R,
    path: &Path,
    field: &FieldDescriptor,
    m: u32,
) -> Result<CoefficientTable> {
    if m == 0 {
        return Err(Error::InvalidArgument("power m must be at least 1".into()));
    }
    let malformed = |line: u64, msg: String| Error::MalformedRow {
        path: path.to_path_buf(),
        line,
        msg,
    };
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let header = rdr.headers()?.clone();
    if header.len() != 2 || &header[0] != "n" || &header[1] != "coeff" {
        return Err(malformed(1, format!("expected header `n,coeff`, found `{}`", header.iter().collect::<Vec<_>>().join(","))));
    }
    let mut values = vec![0u64];
    for record in rdr.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            malformed(line, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != 2 {
            return Err(malformed(line, format!("expected 2 fields, found {}", record.len())));
        }
        let n: u64 = record[0]
            .parse()
            .map_err(|_| malformed(line, format!("index `{}` is not a positive integer", &record[0])))?;
        let c: u64 = record[1]
            .parse()
            .map_err(|_| malformed(line, format!("coefficient `{}` is not a non-negative integer", &record[1])))?;
        let expected = values.len() as u64;
        if n != expected {
            return Err(malformed(line, format!("expected index {expected}, found {n}")));
        }
        values.push(c);
    }
    if values.len() < 2 {
        return Err(malformed(1, "no coefficient rows".into()));
    }
    if values[1] != 1 {
        return Err(Error::NotNormalized(values[1]));
    }
    let table = CoefficientTable::from_parts(values, *field, m, Provenance::Ingested);
    if let Some((a, b)) = table.multiplicativity_witness() {
        return Err(Error::NotMultiplicative {
            a,
            b,
            ab: a * b,
            got: table.get(a * b),
            expected: table.get(a) as u128 * table.get(b) as u128,
        });
    }
    Ok(table)
}

/// Writes `table` in the format accepted by [`ingest_coefficients`].
pub fn write_coefficients<W: Write>(table: &CoefficientTable, writer: W) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(writer);
    wtr.write_record(["n", "coeff"])?;
    for n in 1..=table.limit() {
        wtr.write_record([n.to_string(), table.get(n).to_string()])?;
    }
    wtr.flush()?;
    Ok(())
}
