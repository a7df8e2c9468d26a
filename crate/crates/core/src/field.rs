//! Analytic descriptors of the number fields the library understands.

use std::fmt;

use crate::error::{Error, Result};

/// How a field was described, which determines what can be computed for it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    /// Quadratic field with the given fundamental discriminant.
    Quadratic(i64),
    /// Signature and discriminant only; coefficients must be ingested.
    Generic,
}

/// Degree, signature and discriminant of a number field.
///
/// Invariants: `degree = r1 + 2 r2` and `abs_disc = |disc|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldDescriptor {
    kind: FieldKind,
    degree: u32,
    r1: u32,
    r2: u32,
    disc: i64,
}

impl FieldDescriptor {
    pub fn rationals() -> Self {
        Self {
            kind: FieldKind::Rationals,
            degree: 1,
            r1: 1,
            r2: 0,
            disc: 1,
        }
    }

    /// The quadratic field of fundamental discriminant `d`.
    pub fn quadratic(d: i64) -> Result<Self> {
        if !is_fundamental_discriminant(d) {
            return Err(Error::NotFundamental(d));
        }
        let (r1, r2) = if d > 0 { (2, 0) } else { (0, 1) };
        Ok(Self {
            kind: FieldKind::Quadratic(d),
            degree: 2,
            r1,
            r2,
            disc: d,
        })
    }

    pub fn gaussian() -> Self {
        Self::quadratic(-4).expect("-4 is fundamental")
    }

    /// A descriptor carrying only signature data.
    ///
    /// The sign of the discriminant must be `(-1)^r2` and `|disc| = 1` only for
    /// the rationals.
    pub fn generic(degree: u32, r1: u32, r2: u32, disc: i64) -> Result<Self> {
        let bad = || Error::BadSignature {
            degree,
            r1,
            r2,
            disc,
        };
        if degree == 0 || r1 + 2 * r2 != degree || disc == 0 {
            return Err(bad());
        }
        let sign_ok = (disc < 0) == (r2 % 2 == 1);
        if !sign_ok || (disc.unsigned_abs() == 1 && degree != 1) {
            return Err(bad());
        }
        Ok(Self {
            kind: FieldKind::Generic,
            degree,
            r1,
            r2,
            disc,
        })
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn r1(&self) -> u32 {
        self.r1
    }

    pub fn r2(&self) -> u32 {
        self.r2
    }

    pub fn disc(&self) -> i64 {
        self.disc
    }

    pub fn abs_disc(&self) -> u64 {
        self.disc.unsigned_abs()
    }

    pub fn is_totally_real(&self) -> bool {
        self.r2 == 0
    }

    pub fn is_purely_imaginary(&self) -> bool {
        self.r1 == 0
    }

    /// Quadratic discriminant for fields built by [`FieldDescriptor::quadratic`].
    pub fn quadratic_disc(&self) -> Option<i64> {
        match self.kind {
            FieldKind::Quadratic(d) => Some(d),
            _ => None,
        }
    }

    pub(crate) fn unsupported(&self, op: &'static str, reason: &'static str) -> Error {
        Error::UnsupportedField {
            op,
            field: self.to_string(),
            reason,
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::Quadratic(d) => write!(f, "Q(sqrt({d}))"),
            FieldKind::Generic => write!(
                f,
                "generic(d={}, r1={}, r2={}, disc={})",
                self.degree, self.r1, self.r2, self.disc
            ),
        }
    }
}

fn is_squarefree(mut n: u64) -> bool {
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// `d ≡ 1 (mod 4)` squarefree, or `d = 4k` with `k ≡ 2, 3 (mod 4)` squarefree; `d ≠ 1`.
pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => is_squarefree(d.unsigned_abs()),
        0 => {
            let k = d / 4;
            matches!(k.rem_euclid(4), 2 | 3) && is_squarefree(k.unsigned_abs())
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fundamental_discriminants() {
        let good = [-3, -4, -7, -8, 5, 8, 12, 13, -15, -20, 24, 28];
        let bad = [0, 1, 2, 3, 4, 9, -1, 16, 20, -16, 25, -12 * 4];
        for d in good {
            assert!(is_fundamental_discriminant(d), "{d}");
        }
        for d in bad {
            assert!(!is_fundamental_discriminant(d), "{d}");
        }
    }

    #[test]
    fn signatures() {
        let k = FieldDescriptor::gaussian();
        assert_eq!((k.degree(), k.r1(), k.r2(), k.abs_disc()), (2, 0, 1, 4));
        let k = FieldDescriptor::quadratic(5).unwrap();
        assert_eq!((k.r1(), k.r2()), (2, 0));
        assert!(FieldDescriptor::quadratic(9).is_err());
        assert!(FieldDescriptor::generic(3, 1, 1, -23).is_ok());
        assert!(FieldDescriptor::generic(3, 1, 1, 23).is_err());
        assert!(FieldDescriptor::generic(3, 2, 1, -23).is_err());
        assert!(FieldDescriptor::generic(3, 3, 0, 49).is_ok());
    }
}
