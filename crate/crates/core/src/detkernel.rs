//! The binomial matrix `t_ij = C(m - max{u, (k-1)j}, 1 - i + j)`, its exact
//! determinant `D(m, n, u, k)`, and the row/column manipulations that prove
//! `D` obeys the lattice-path recurrence.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::exact::{binomial, BigInt};

/// A validated instance `(m, n, u, k)`.
///
/// Construction enforces `u >= 0`, `k >= 2`, `n >= 2` and
/// `m >= max{u + 1, (k - 1)(n - 1)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct QueryParams {
    m: i64,
    n: i64,
    u: i64,
    k: i64,
}

impl QueryParams {
    pub fn new(m: i64, n: i64, u: i64, k: i64) -> Result<Self> {
        if u < 0 {
            return domain(format!("u must be >= 0 (got u={u})"));
        }
        if k < 2 {
            return domain(format!("k must be >= 2 (got k={k})"));
        }
        if n < 2 {
            return domain(format!("n must be >= 2 (got n={n})"));
        }
        let lo = Self::min_m(n, u, k);
        if m < lo {
            return domain(format!(
                "m must be >= max{{u+1,(k-1)(n-1)}} = {lo} (got m={m}, n={n}, u={u}, k={k})"
            ));
        }
        Ok(QueryParams { m, n, u, k })
    }

    /// Smallest admissible `m` for the given `(n, u, k)`.
    pub fn min_m(n: i64, u: i64, k: i64) -> i64 {
        (u + 1).max((k - 1) * (n - 1))
    }

    pub fn m(&self) -> i64 {
        self.m
    }
    pub fn n(&self) -> i64 {
        self.n
    }
    pub fn u(&self) -> i64 {
        self.u
    }
    pub fn k(&self) -> i64 {
        self.k
    }

    /// `m - max{u, (k-1) j}`, the upper binomial index of column `j`.
    fn column_top(&self, j: i64) -> i64 {
        self.m - self.u.max((self.k - 1) * j)
    }
}

impl fmt::Display for QueryParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={}, n={}, u={}, k={})", self.m, self.n, self.u, self.k)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixVariant {
    Original,
    /// Every row but the last has had the next row added to it.
    RowReduced,
}

/// Dense square integer matrix, indexed from 1 to `order` in both directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialMatrix {
    order: usize,
    entries: Vec<BigInt>,
    variant: MatrixVariant,
}

impl BinomialMatrix {
    /// Wraps explicit rows. Fails if the rows are not square or empty.
    pub fn from_rows(rows: Vec<Vec<BigInt>>, variant: MatrixVariant) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return domain("matrix order must be >= 1");
        }
        if rows.iter().any(|r| r.len() != order) {
            return domain("matrix rows must all have length equal to the row count");
        }
        Ok(BinomialMatrix { order, entries: rows.into_iter().flatten().collect(), variant })
    }

    pub fn from_i64_rows<const N: usize>(rows: [[i64; N]; N]) -> Result<Self> {
        let rows = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        Self::from_rows(rows, MatrixVariant::Original)
    }

    fn from_fn(order: usize, variant: MatrixVariant, mut f: impl FnMut(i64, i64) -> Result<BigInt>) -> Result<Self> {
        let mut entries = Vec::with_capacity(order * order);
        for i in 1..=order as i64 {
            for j in 1..=order as i64 {
                entries.push(f(i, j)?);
            }
        }
        Ok(BinomialMatrix { order, entries, variant })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn variant(&self) -> MatrixVariant {
        self.variant
    }

    /// Entry at 1-based row `i`, column `j`.
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        assert!((1..=self.order).contains(&i) && (1..=self.order).contains(&j), "index ({i},{j}) out of range");
        &self.entries[(i - 1) * self.order + (j - 1)]
    }

    /// 1-based row `i`.
    pub fn row(&self, i: usize) -> &[BigInt] {
        assert!((1..=self.order).contains(&i), "row {i} out of range");
        &self.entries[(i - 1) * self.order..i * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries.chunks(self.order).map(<[BigInt]>::to_vec).collect()
    }

    /// Copy with 1-based column `j` replaced.
    pub fn with_column(&self, j: usize, column: &[BigInt]) -> Self {
        assert_eq!(column.len(), self.order);
        let mut out = self.clone();
        for (i, v) in column.iter().enumerate() {
            out.entries[i * self.order + (j - 1)] = v.clone();
        }
        out
    }

    /// Leading principal submatrix of the given order.
    pub fn leading_minor(&self, order: usize) -> Self {
        assert!(order >= 1 && order <= self.order);
        let mut entries = Vec::with_capacity(order * order);
        for i in 1..=order {
            entries.extend_from_slice(&self.row(i)[..order]);
        }
        BinomialMatrix { order, entries, variant: self.variant }
    }

    /// Replaces row `i` by row `i` plus row `i + 1`, for `i = 1, ..., order - 1`
    /// in increasing order. The result has the same determinant.
    pub fn add_next_rows(&self) -> Self {
        let mut out = self.clone();
        let n = self.order;
        for i in 0..n.saturating_sub(1) {
            for j in 0..n {
                let below = out.entries[(i + 1) * n + j].clone();
                out.entries[i * n + j] += below;
            }
        }
        out.variant = MatrixVariant::RowReduced;
        out
    }
}

impl fmt::Display for BinomialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.order) {
            let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// The `(n-1) x (n-1)` matrix whose determinant is `D(m, n, u, k)`.
pub fn build_matrix(p: &QueryParams) -> BinomialMatrix {
    BinomialMatrix::from_fn((p.n - 1) as usize, MatrixVariant::Original, |i, j| {
        binomial(p.column_top(j), 1 - i + j)
    })
    .expect("validated parameters keep every upper index nonnegative")
}

/// Row-reduced matrix `t*`: rows `1..n-2` use upper index `m + 1 - max{..}`
/// (Pascal merge of adjacent rows), the bottom row is unchanged.
pub fn build_row_reduced(p: &QueryParams) -> Result<BinomialMatrix> {
    if p.n < 3 {
        return domain(format!("row reduction needs n >= 3 (got n={})", p.n));
    }
    let order = p.n - 1;
    BinomialMatrix::from_fn(order as usize, MatrixVariant::RowReduced, |i, j| {
        let top = if i < order { p.column_top(j) + 1 } else { p.column_top(j) };
        binomial(top, 1 - i + j)
    })
}

/// Exact determinant by single-step fraction-free (Bareiss) elimination.
///
/// A zero pivot is swapped with the first lower row that is nonzero in the
/// pivot column; if there is none the determinant is zero.
pub fn determinant(mat: &BinomialMatrix) -> Result<BigInt> {
    let n = mat.order;
    let mut a: Vec<Vec<BigInt>> = mat.rows();
    let mut negate = false;
    let mut prev = BigInt::one();
    for c in 0..n {
        if a[c][c].is_zero() {
            match (c + 1..n).find(|&r| !a[r][c].is_zero()) {
                Some(r) => {
                    a.swap(c, r);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in c + 1..n {
            for j in c + 1..n {
                let num = &a[i][j] * &a[c][c] - &a[i][c] * &a[c][j];
                let (q, r) = num.div_rem(&prev);
                if !r.is_zero() {
                    return Err(Error::Internal(format!(
                        "Bareiss step left remainder {r} at pivot {c}, entry ({i},{j})"
                    )));
                }
                a[i][j] = q;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[c][c].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// `D(m, n, u, k)`.
pub fn evaluate_d(p: &QueryParams) -> BigInt {
    let d = determinant(&build_matrix(p)).expect("integer Bareiss elimination is exact");
    debug_assert!(!d.is_negative(), "D{p} = {d} is negative");
    d
}

/// Expected bottom row `(0, ..., 0, 1, m - max{u, (k-1)(n-1)})`.
pub fn expected_bottom_row(p: &QueryParams) -> Vec<BigInt> {
    let order = (p.n - 1) as usize;
    let mut row = vec![BigInt::zero(); order];
    if order >= 2 {
        row[order - 2] = BigInt::one();
    }
    row[order - 1] = BigInt::from(p.column_top(p.n - 1));
    row
}

/// True iff both the original and the row-reduced matrix end in the
/// expected bottom row.
pub fn check_bottom_row(p: &QueryParams) -> Result<bool> {
    let reduced = build_row_reduced(p)?;
    let original = build_matrix(p);
    let expected = expected_bottom_row(p);
    let last = original.order();
    Ok(original.row(last) == expected.as_slice() && reduced.row(last) == expected.as_slice())
}

/// Splits the last column of `t*` as `alpha + beta` with
/// `beta = (0, ..., 0, -1)` and checks that
///
/// * the `alpha` matrix is exactly the matrix of `D(m + 1, n, u, k)`,
/// * the `beta` determinant is `-D(m + 1, n - 1, u, k)`,
/// * `D(m, n, u, k) = D(m + 1, n, u, k) - D(m + 1, n - 1, u, k)`.
pub fn check_column_decomposition(p: &QueryParams) -> Result<bool> {
    let reduced = build_row_reduced(p)?;
    let order = reduced.order();
    let up = QueryParams::new(p.m + 1, p.n, p.u, p.k)?;
    let up_short = QueryParams::new(p.m + 1, p.n - 1, p.u, p.k)?;

    let mut alpha: Vec<BigInt> = (1..=order).map(|i| reduced.get(i, order).clone()).collect();
    alpha[order - 1] += 1;
    let mut beta = vec![BigInt::zero(); order];
    beta[order - 1] = BigInt::from(-1);

    let alpha_mat = reduced.with_column(order, &alpha);
    let beta_mat = reduced.with_column(order, &beta);

    let alpha_is_shifted = alpha_mat.rows() == build_matrix(&up).rows();
    let beta_minor_is_shorter = reduced.leading_minor(order - 1).rows() == build_matrix(&up_short).rows();

    let d = evaluate_d(p);
    let det_alpha = determinant(&alpha_mat)?;
    let det_beta = determinant(&beta_mat)?;
    let d_up = evaluate_d(&up);
    let d_up_short = evaluate_d(&up_short);

    Ok(alpha_is_shifted
        && beta_minor_is_shorter
        && det_alpha == d_up
        && det_beta == -&d_up_short
        && d == &det_alpha + &det_beta
        && d == d_up - d_up_short)
}
