//! Explicit alternating sums: the closed form of `D(m, n, u, k)` and the two
//! path-counting formulas for a line through the origin (above `y = kx`,
//! below `y = x/k`).
//!
//! Terms are summed as exact rationals; only the total must be an integer.

use num_traits::Zero;

use crate::detkernel::QueryParams;
use crate::error::{domain, Error, Result};
use crate::exact::{binomial, ratio, require_integer, BigInt, BigRational};

/// Paths from `(a, b)` to `(m, n)` staying weakly above `y = kx`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AboveLineQuery {
    pub a: i64,
    pub b: i64,
    pub m: i64,
    pub n: i64,
    pub k: i64,
}

impl AboveLineQuery {
    /// Requires `k >= 1`, `0 <= a <= m`, `ka <= b <= n`, `n >= km`.
    pub fn new(a: i64, b: i64, m: i64, n: i64, k: i64) -> Result<Self> {
        if k < 1 {
            return domain(format!("above-line query needs k >= 1 (got {k})"));
        }
        if !(0 <= a && a <= m) {
            return domain(format!("above-line query needs 0 <= a <= m (got a={a}, m={m})"));
        }
        if !(k * a <= b && b <= n) {
            return domain(format!("above-line query needs ka <= b <= n (got a={a}, b={b}, n={n}, k={k})"));
        }
        if n < k * m {
            return domain(format!("above-line query needs n >= km (got m={m}, n={n}, k={k})"));
        }
        Ok(AboveLineQuery { a, b, m, n, k })
    }

    /// The diagonal mirror image: start `(b, a)`, end `(n, m)`.
    pub fn reflected(&self) -> BelowLineQuery {
        BelowLineQuery { a: self.b, b: self.a, m: self.n, n: self.m, k: self.k }
    }
}

/// Paths from `(a, b)` to `(m, n)` staying weakly below `y = x/k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BelowLineQuery {
    pub a: i64,
    pub b: i64,
    pub m: i64,
    pub n: i64,
    pub k: i64,
}

impl BelowLineQuery {
    /// Requires `k >= 1`, `0 <= b <= n`, `kb <= a <= m`, `n >= 1`, `m >= kn`.
    pub fn new(a: i64, b: i64, m: i64, n: i64, k: i64) -> Result<Self> {
        if k < 1 {
            return domain(format!("below-line query needs k >= 1 (got {k})"));
        }
        if !(0 <= b && b <= n) {
            return domain(format!("below-line query needs 0 <= b <= n (got b={b}, n={n})"));
        }
        if !(k * b <= a && a <= m) {
            return domain(format!("below-line query needs kb <= a <= m (got a={a}, b={b}, m={m}, k={k})"));
        }
        if n < 1 {
            return domain(format!("below-line query needs n >= 1 (got {n})"));
        }
        if m < k * n {
            return domain(format!("below-line query needs m >= kn (got m={m}, n={n}, k={k})"));
        }
        Ok(BelowLineQuery { a, b, m, n, k })
    }

    pub fn reflected(&self) -> AboveLineQuery {
        AboveLineQuery { a: self.b, b: self.a, m: self.n, n: self.m, k: self.k }
    }
}

fn signed(term: BigRational, i: i64) -> BigRational {
    if i % 2 == 0 {
        term
    } else {
        -term
    }
}

fn nonzero_den(den: i64, formula: &'static str) -> Result<i64> {
    if den == 0 {
        Err(Error::Internal(format!("zero denominator reached in {formula}")))
    } else {
        Ok(den)
    }
}

/// `sum_{i=0}^{floor(u/k)} (-1)^i (m-(k-1)(n-1))/(m+n-1-ki) C(m+n-1-ki, n-1-i) C(u-(k-1)i, i)`.
pub fn closed_form_d(p: &QueryParams) -> Result<BigInt> {
    const NAME: &str = "closed form of D";
    let (m, n, u, k) = (p.m(), p.n(), p.u(), p.k());
    let head = m - (k - 1) * (n - 1);
    let mut sum = BigRational::zero();
    for i in 0..=u / k {
        let den = m + n - 1 - k * i;
        if den < 2 {
            return Err(Error::Internal(format!("denominator {den} < 2 at i={i} for {p}")));
        }
        let weight = binomial(den, n - 1 - i)? * binomial(u - (k - 1) * i, i)?;
        sum += signed(ratio(head, den) * BigRational::from_integer(weight), i);
    }
    require_integer(sum, NAME)
}

/// Number of paths `(a, b) -> (m, n)` weakly above `y = kx`:
/// `sum_{i=0}^{floor((b-ka)/(k+1))} (-1)^i (n+1-km)/(n+1-k(a+i)) C(m+n-(k+1)(a+i), m-a-i) C(b-k(a+i), i)`.
pub fn count_above_line(q: &AboveLineQuery) -> Result<BigInt> {
    const NAME: &str = "above-line path count";
    let AboveLineQuery { a, b, m, n, k } = *q;
    let mut sum = BigRational::zero();
    for i in 0..=(b - k * a) / (k + 1) {
        let den = nonzero_den(n + 1 - k * (a + i), NAME)?;
        let weight = binomial(m + n - (k + 1) * (a + i), m - a - i)? * binomial(b - k * (a + i), i)?;
        sum += signed(ratio(n + 1 - k * m, den) * BigRational::from_integer(weight), i);
    }
    require_integer(sum, NAME)
}

/// Number of paths `(a, b) -> (m, n)` weakly below `y = x/k`:
/// `sum_{i=0}^{floor((a-kb)/(k+1))} (-1)^i (m+1-kn)/(m+1-k(b+i)) C(m+n-(k+1)(b+i), n-b-i) C(a-k(b+i), i)`.
pub fn count_below_line(q: &BelowLineQuery) -> Result<BigInt> {
    const NAME: &str = "below-line path count";
    let BelowLineQuery { a, b, m, n, k } = *q;
    let mut sum = BigRational::zero();
    for i in 0..=(a - k * b) / (k + 1) {
        let den = nonzero_den(m + 1 - k * (b + i), NAME)?;
        let weight = binomial(m + n - (k + 1) * (b + i), n - b - i)? * binomial(a - k * (b + i), i)?;
        sum += signed(ratio(m + 1 - k * n, den) * BigRational::from_integer(weight), i);
    }
    require_integer(sum, NAME)
}

/// The below-line query that a shifted instance `(m, n, u, k)` maps to:
/// start `(u, 0)`, end `(m - 1, n - 1)`, slope `1/(k - 1)`.
///
/// Only defined when `m - 1 >= (k - 1)(n - 1)`; on the line
/// `m = (k - 1)(n - 1)` the count is zero by convention and there is no query.
pub fn shifted_below_query(p: &QueryParams) -> Result<BelowLineQuery> {
    BelowLineQuery::new(p.u(), 0, p.m() - 1, p.n() - 1, p.k() - 1)
}
