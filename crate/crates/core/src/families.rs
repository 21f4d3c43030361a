//! Classical number families, computed from their own closed forms so that
//! their agreement with `D` is a real check.

use crate::error::{domain, Result};
use crate::exact::{binomial, exact_div, ratio, require_integer, BigInt, BigRational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Catalan,
    FussCatalan,
    Ballot,
    GeneralizedBallot,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Catalan => "catalan",
            Family::FussCatalan => "fuss-catalan",
            Family::Ballot => "ballot",
            Family::GeneralizedBallot => "generalized-ballot",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('_', "-").as_str() {
            "catalan" => Ok(Family::Catalan),
            "fuss-catalan" => Ok(Family::FussCatalan),
            "ballot" => Ok(Family::Ballot),
            "generalized-ballot" => Ok(Family::GeneralizedBallot),
            other => domain(format!("unknown family {other:?}")),
        }
    }
}

/// `C(2n, n) / (n + 1)` for `n >= 1`.
pub fn catalan(n: i64) -> Result<BigInt> {
    if n < 1 {
        return domain(format!("catalan needs n >= 1 (got {n})"));
    }
    exact_div(&binomial(2 * n, n)?, &BigInt::from(n + 1), "catalan")
}

/// `C(kn, n) / ((k - 1)n + 1)` for `n >= 1`, `k >= 2`.
pub fn fuss_catalan(n: i64, k: i64) -> Result<BigInt> {
    if n < 1 || k < 2 {
        return domain(format!("fuss-catalan needs n >= 1 and k >= 2 (got n={n}, k={k})"));
    }
    exact_div(&binomial(k * n, n)?, &BigInt::from((k - 1) * n + 1), "fuss-catalan")
}

/// `(m - n + 1)/(m + 1) * C(m + n, n)` for `m >= n >= 1`.
pub fn ballot(m: i64, n: i64) -> Result<BigInt> {
    if !(m >= n && n >= 1) {
        return domain(format!("ballot needs m >= n >= 1 (got m={m}, n={n})"));
    }
    let value = ratio(m - n + 1, m + 1) * BigRational::from_integer(binomial(m + n, n)?);
    require_integer(value, "ballot")
}

/// `(m + 1 - kn)/(m + 1) * C(m + n, n)` for `k >= 1`, `n >= 1`, `m + 1 > kn`.
pub fn generalized_ballot(m: i64, n: i64, k: i64) -> Result<BigInt> {
    if k < 1 || n < 1 || m + 1 <= k * n {
        return domain(format!(
            "generalized ballot needs k >= 1, n >= 1, m + 1 > kn (got m={m}, n={n}, k={k})"
        ));
    }
    let value = ratio(m + 1 - k * n, m + 1) * BigRational::from_integer(binomial(m + n, n)?);
    require_integer(value, "generalized ballot")
}
