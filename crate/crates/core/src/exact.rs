//! Exact integer and rational arithmetic shared by every evaluation route.
//!
//! Integers and rationals come from `num-bigint` / `num-rational`; the
//! binomial coefficient and its conventions live here.

use num_integer::Integer;
use num_traits::{One, Zero};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use crate::error::{domain, Error, Result};

/// `C(n, r)` for `n >= 0`, with `C(n, r) = 0` whenever `r < 0` or `r > n`.
///
/// Uses the multiplicative formula; after step `i` the accumulator holds
/// `C(n - r + i, i)`, so every division is exact.
pub fn binomial(n: i64, r: i64) -> Result<BigInt> {
    if n < 0 {
        return domain(format!("binomial upper index must be >= 0, got C({n}, {r})"));
    }
    if r < 0 || r > n {
        return Ok(BigInt::zero());
    }
    let r = r.min(n - r);
    let mut acc = BigInt::one();
    for i in 1..=r {
        acc *= n - r + i;
        let (q, rem) = acc.div_rem(&BigInt::from(i));
        if !rem.is_zero() {
            return Err(Error::Internal(format!("inexact division in C({n}, {r}) at step {i}")));
        }
        acc = q;
    }
    Ok(acc)
}

/// Whether `C(n, r) + C(n, r - 1) == C(n + 1, r)`.
pub fn pascal_check(n: i64, r: i64) -> Result<bool> {
    Ok(binomial(n, r)? + binomial(n, r - 1)? == binomial(n + 1, r)?)
}

/// Shorthand for the rational `num / den`. Panics on a zero denominator.
pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Returns the numerator of `value` if it is an integer.
pub fn require_integer(value: BigRational, formula: &'static str) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::Integrality { formula, value: value.to_string() })
    }
}

/// `num / den` for integers, failing unless the division is exact.
pub fn exact_div(num: &BigInt, den: &BigInt, formula: &'static str) -> Result<BigInt> {
    if den.is_zero() {
        return Err(Error::Internal(format!("division by zero in {formula}")));
    }
    let (q, r) = num.div_rem(den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::Integrality { formula, value: format!("{num}/{den}") })
    }
}
