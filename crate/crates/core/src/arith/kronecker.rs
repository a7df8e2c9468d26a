//! The Kronecker symbol `(D/n)` for fundamental discriminants.

use crate::error::{Error, Result};
use crate::field::is_fundamental_discriminant;

/// `(D/n)` for a fundamental discriminant `D` and `n ≥ 1`.
pub fn kronecker_symbol(d: i64, n: u64) -> Result<i8> {
    if !is_fundamental_discriminant(d) {
        return Err(Error::NotFundamental(d));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    Ok(kronecker(d, n))
}

/// Kronecker symbol without the discriminant check; `n ≥ 1`.
pub(crate) fn kronecker(d: i64, mut n: u64) -> i8 {
    let mut sign = 1i8;
    let twos = n.trailing_zeros();
    if twos > 0 {
        n >>= twos;
        let at_two = match d.rem_euclid(8) {
            1 | 7 => 1,
            3 | 5 => -1,
            _ => 0,
        };
        if at_two == 0 {
            return 0;
        }
        if twos % 2 == 1 {
            sign *= at_two;
        }
    }
    sign * jacobi(d.rem_euclid(n as i64) as u64, n)
}

/// Jacobi symbol `(a/n)` for odd `n ≥ 1`.
fn jacobi(mut a: u64, mut n: u64) -> i8 {
    debug_assert!(n % 2 == 1);
    a %= n;
    let mut t = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

/// One period of `n ↦ (D/n)`, indexed by `n mod |D|`.
pub(crate) fn character_table(d: i64) -> Vec<i8> {
    let q = d.unsigned_abs();
    (0..q)
        .map(|r| if r == 0 { kronecker(d, q) } else { kronecker(d, r) })
        .collect()
}
