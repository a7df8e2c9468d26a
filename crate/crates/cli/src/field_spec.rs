//! Field specification strings: `q`, `quad:<D>`, `generic:<d>,<r1>,<r2>,<disc>`.

use piltz_core::field::FieldKind;
use piltz_core::{FieldDescriptor, Result};

pub fn parse_field_spec(s: &str) -> std::result::Result<FieldDescriptor, String> {
    let s = s.trim();
    let lift = |r: Result<FieldDescriptor>| r.map_err(|e| e.to_string());
    if s == "q" {
        return Ok(FieldDescriptor::rationals());
    }
    if let Some(d) = s.strip_prefix("quad:") {
        let d: i64 = d.trim().parse().map_err(|_| format!("bad discriminant in field spec `{s}`"))?;
        return lift(FieldDescriptor::quadratic(d));
    }
    if let Some(rest) = s.strip_prefix("generic:") {
        let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
        let [d, r1, r2, disc] = parts.as_slice() else {
            return Err(format!("field spec `{s}` needs four values: generic:<d>,<r1>,<r2>,<disc>"));
        };
        let num = |v: &str| v.parse::<u32>().map_err(|_| format!("bad integer `{v}` in field spec `{s}`"));
        let disc: i64 = disc.parse().map_err(|_| format!("bad discriminant `{disc}` in field spec `{s}`"))?;
        return lift(FieldDescriptor::generic(num(d)?, num(r1)?, num(r2)?, disc));
    }
    Err(format!("unrecognized field spec `{s}`; expected q, quad:<D> or generic:<d>,<r1>,<r2>,<disc>"))
}

/// Inverse of [`parse_field_spec`].
pub fn field_spec(field: &FieldDescriptor) -> String {
    match field.kind() {
        FieldKind::Rationals => "q".into(),
        FieldKind::Quadratic(d) => format!("quad:{d}"),
        FieldKind::Generic => format!("generic:{},{},{},{}", field.degree(), field.r1(), field.r2(), field.disc()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_the_three_forms() {
        assert_eq!(parse_field_spec("q").unwrap(), FieldDescriptor::rationals());
        let gi = parse_field_spec("quad:-4").unwrap();
        assert_eq!((gi.degree(), gi.r1(), gi.r2(), gi.abs_disc()), (2, 0, 1, 4));
        assert!(parse_field_spec("quad:-3").is_ok());
        assert!(parse_field_spec("quad:8").is_ok());
        assert!(parse_field_spec("quad:12").is_ok());
        let g = parse_field_spec("generic:3,1,1,-23").unwrap();
        assert_eq!((g.degree(), g.r1(), g.r2()), (3, 1, 1));
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(parse_field_spec("quad:9").is_err());
        assert!(parse_field_spec("quad:1").is_err());
        assert!(parse_field_spec("generic:3,1,2,-23").is_err());
        assert!(parse_field_spec("generic:3,1").is_err());
        assert!(parse_field_spec("Q").is_err());
    }

    #[test]
    fn round_trips() {
        for s in ["q", "quad:-4", "quad:5", "generic:4,0,2,117"] {
            assert_eq!(field_spec(&parse_field_spec(s).unwrap()), s);
        }
    }
}
