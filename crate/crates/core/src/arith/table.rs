//! Coefficient tables `n ↦ v_K^m(n)` and their Dirichlet convolution.

use crate::arith::kronecker::character_table;
use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, FieldKind};

/// How a table came into being.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Sieved,
    Convolved,
    Ingested,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::Sieved => "sieved",
            Provenance::Convolved => "convolved",
            Provenance::Ingested => "ingested",
        }
    }
}

/// Values `v_K^m(n)` for `1 ≤ n ≤ limit`.
///
/// `values[0]` is a placeholder 0; `values[1] = 1` for every table that
/// represents a power of `ζ_K`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTable {
    values: Vec<u64>,
    field: FieldDescriptor,
    power: u32,
    provenance: Provenance,
}

impl CoefficientTable {
    pub(crate) fn from_parts(
        values: Vec<u64>,
        field: FieldDescriptor,
        power: u32,
        provenance: Provenance,
    ) -> Self {
        debug_assert!(values.len() >= 2);
        Self {
            values,
            field,
            power,
            provenance,
        }
    }

    /// The convolution identity, i.e. the coefficients of `ζ_K^0`.
    pub fn identity(field: FieldDescriptor, limit: u64) -> Result<Self> {
        let mut values = vec![0u64; checked_len(limit)?];
        values[1] = 1;
        Ok(Self::from_parts(values, field, 0, Provenance::Sieved))
    }

    pub fn limit(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    /// `v(n)` for `1 ≤ n ≤ limit`.
    pub fn get(&self, n: u64) -> u64 {
        self.values[n as usize]
    }

    /// All values, index 0 included as a 0 placeholder.
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// The first coprime pair `(a, b)`, `2 ≤ a < b`, `ab ≤ limit`, with
    /// `v(ab) ≠ v(a) v(b)`, scanning `a` then `b` in increasing order.
    pub fn multiplicativity_witness(&self) -> Option<(u64, u64)> {
        let n = self.limit();
        let mut a = 2u64;
        while a * (a + 1) <= n {
            for b in (a + 1)..=(n / a) {
                if num_integer::gcd(a, b) == 1
                    && self.get(a * b) as u128 != self.get(a) as u128 * self.get(b) as u128
                {
                    return Some((a, b));
                }
            }
            a += 1;
        }
        None
    }
}

fn checked_len(limit: u64) -> Result<usize> {
    if limit == 0 {
        return Err(Error::InvalidArgument("table limit must be positive".into()));
    }
    usize::try_from(limit)
        .ok()
        .and_then(|l| l.checked_add(1))
        .ok_or_else(|| Error::InvalidArgument(format!("table limit {limit} too large")))
}

/// `v_K(n)` for `n ≤ limit` over the rationals or a quadratic field.
///
/// For quadratic `K`, `v_K(n) = Σ_{d|n} χ_D(d)`.
pub fn sieve_vk(field: &FieldDescriptor, limit: u64) -> Result<CoefficientTable> {
    let len = checked_len(limit)?;
    let values = match field.kind() {
        FieldKind::Rationals => {
            let mut v = vec![1u64; len];
            v[0] = 0;
            v
        }
        FieldKind::Quadratic(d) => {
            let chi = character_table(d);
            let q = chi.len();
            let mut acc = vec![0i64; len];
            for k in 1..len {
                let c = chi[k % q];
                if c == 0 {
                    continue;
                }
                let c = c as i64;
                for j in (k..len).step_by(k) {
                    acc[j] += c;
                }
            }
            acc.into_iter()
                .map(|s| {
                    debug_assert!(s >= 0);
                    s as u64
                })
                .collect()
        }
        FieldKind::Generic => {
            return Err(field.unsupported(
                "sieve_vK",
                "no ideal factorization backend; ingest a coefficient file instead",
            ))
        }
    };
    Ok(CoefficientTable::from_parts(values, *field, 1, Provenance::Sieved))
}

/// Dirichlet convolution `(a * b)(n) = Σ_{de=n} a(d) b(e)`.
pub fn dirichlet_convolve(a: &CoefficientTable, b: &CoefficientTable) -> Result<CoefficientTable> {
    if a.limit() != b.limit() {
        return Err(Error::TableMismatch(format!(
            "limits {} and {}",
            a.limit(),
            b.limit()
        )));
    }
    if a.field != b.field {
        return Err(Error::TableMismatch(format!(
            "fields {} and {}",
            a.field, b.field
        )));
    }
    let len = a.values.len();
    let mut out = vec![0u64; len];
    for d in 1..len {
        let ad = a.values[d];
        if ad == 0 {
            continue;
        }
        for (e, &be) in b.values[1..=(len - 1) / d].iter().enumerate() {
            if be == 0 {
                continue;
            }
            let n = d * (e + 1);
            out[n] = ad
                .checked_mul(be)
                .and_then(|p| p.checked_add(out[n]))
                .ok_or(Error::Overflow { n: n as u64 })?;
        }
    }
    Ok(CoefficientTable::from_parts(
        out,
        a.field,
        a.power + b.power,
        Provenance::Convolved,
    ))
}

/// `v_K^m` for `m ≥ 1` by binary powering under convolution.
pub fn coeff_power(field: &FieldDescriptor, m: u32, limit: u64) -> Result<CoefficientTable> {
    if m == 0 {
        return Err(Error::InvalidArgument("power m must be at least 1".into()));
    }
    let base = sieve_vk(field, limit)?;
    power_of(base, m)
}

/// `table^m` under Dirichlet convolution, `m ≥ 1`.
pub fn power_of(base: CoefficientTable, m: u32) -> Result<CoefficientTable> {
    if m == 0 {
        return Err(Error::InvalidArgument("power m must be at least 1".into()));
    }
    if m == 1 {
        return Ok(base);
    }
    let mut result: Option<CoefficientTable> = None;
    let mut square = base;
    let mut e = m;
    loop {
        if e & 1 == 1 {
            result = Some(match result {
                None => square.clone(),
                Some(r) => dirichlet_convolve(&r, &square)?,
            });
        }
        e >>= 1;
        if e == 0 {
            break;
        }
        square = dirichlet_convolve(&square, &square)?;
    }
    Ok(result.expect("m >= 1"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn divisor_count(n: u64) -> u64 {
        (1..=n).filter(|d| n % d == 0).count() as u64
    }

    #[test]
    fn rationals_are_all_ones() {
        let t = sieve_vk(&FieldDescriptor::rationals(), 10).unwrap();
        assert!((1..=10).all(|n| t.get(n) == 1));
        assert_eq!(t.provenance(), Provenance::Sieved);
    }

    #[test]
    fn quadratic_examples() {
        let gi = sieve_vk(&FieldDescriptor::gaussian(), 100).unwrap();
        // (2+i) and (2-i) are the ideals of norm 5.
        assert_eq!(gi.get(5), 2);
        assert_eq!(gi.get(3), 0);
        assert_eq!(gi.get(2), 1);
        let r5 = sieve_vk(&FieldDescriptor::quadratic(5).unwrap(), 100).unwrap();
        assert_eq!(r5.get(4), 1);
        assert_eq!(r5.get(2), 0);
        assert_eq!(r5.get(5), 1);
        assert_eq!(r5.get(11), 2);
        assert!(sieve_vk(&FieldDescriptor::generic(3, 1, 1, -23).unwrap(), 10).is_err());
    }

    #[test]
    fn convolution_examples() {
        let q = FieldDescriptor::rationals();
        let v = sieve_vk(&q, 50).unwrap();
        let d2 = dirichlet_convolve(&v, &v).unwrap();
        assert_eq!(d2.get(6), 4);
        assert_eq!(d2.power(), 2);
        for n in 1..=50 {
            assert_eq!(d2.get(n), divisor_count(n));
        }
        let d3 = dirichlet_convolve(&d2, &v).unwrap();
        // (1,1,4) x3, (1,2,2) x3.
        assert_eq!(d3.get(4), 6);
        let delta = CoefficientTable::identity(q, 50).unwrap();
        assert_eq!(dirichlet_convolve(&d3, &delta).unwrap().values(), d3.values());
        assert_eq!(coeff_power(&q, 2, 50).unwrap().get(10), 4);
        let gi = FieldDescriptor::gaussian();
        assert_eq!(coeff_power(&gi, 2, 50).unwrap().get(5), 4);
        assert_eq!(
            coeff_power(&gi, 1, 50).unwrap(),
            sieve_vk(&gi, 50).unwrap()
        );
    }

    #[test]
    fn binary_powering_matches_repeated_convolution() {
        let f = FieldDescriptor::quadratic(-3).unwrap();
        let v = sieve_vk(&f, 300).unwrap();
        let mut acc = v.clone();
        for m in 2..=6 {
            acc = dirichlet_convolve(&acc, &v).unwrap();
            assert_eq!(coeff_power(&f, m, 300).unwrap().values(), acc.values());
        }
    }

    #[test]
    fn mismatches_and_overflow() {
        let q = FieldDescriptor::rationals();
        let a = sieve_vk(&q, 10).unwrap();
        let b = sieve_vk(&q, 11).unwrap();
        assert!(matches!(dirichlet_convolve(&a, &b), Err(Error::TableMismatch(_))));
        let c = sieve_vk(&FieldDescriptor::gaussian(), 10).unwrap();
        assert!(matches!(dirichlet_convolve(&a, &c), Err(Error::TableMismatch(_))));
        let mut big = vec![u64::MAX / 2; 5];
        big[0] = 0;
        big[1] = 1;
        let t = CoefficientTable::from_parts(big, q, 1, Provenance::Ingested);
        assert!(matches!(dirichlet_convolve(&t, &t), Err(Error::Overflow { n: 4 })));
        assert!(coeff_power(&q, 0, 10).is_err());
    }
}
