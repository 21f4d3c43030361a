//! Concrete lattice paths with unit East/North steps: boundary predicates,
//! brute-force enumeration, the grid recurrence for `|L(u+1,1;m,n;k)|`, and
//! the diagonal-reflection and unit-shift bijections.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{domain, Error, Result};
use crate::exact::BigInt;

/// Default bound on the number of steps brute-force enumeration will explore.
pub const DEFAULT_ENUMERATION_CAP: i64 = 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    E,
    N,
}

impl Step {
    fn delta(self) -> (i64, i64) {
        match self {
            Step::E => (1, 0),
            Step::N => (0, 1),
        }
    }

    fn swapped(self) -> Step {
        match self {
            Step::E => Step::N,
            Step::N => Step::E,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::E => 'E',
            Step::N => 'N',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePath {
    pub start: Point,
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start: Point, steps: Vec<Step>) -> Self {
        LatticePath { start, steps }
    }

    /// Parses a string of `E`/`N` characters.
    pub fn parse(start: Point, steps: &str) -> Result<Self> {
        let steps = steps
            .chars()
            .map(|c| match c {
                'E' => Ok(Step::E),
                'N' => Ok(Step::N),
                other => domain(format!("unknown step {other:?}")),
            })
            .collect::<Result<_>>()?;
        Ok(LatticePath { start, steps })
    }

    /// Every visited point, start and end included.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        let mut at = self.start;
        std::iter::once(at).chain(self.steps.iter().map(move |s| {
            let (dx, dy) = s.delta();
            at = Point::new(at.x + dx, at.y + dy);
            at
        }))
    }

    pub fn end(&self) -> Point {
        let east = self.steps.iter().filter(|&&s| s == Step::E).count() as i64;
        let north = self.steps.len() as i64 - east;
        Point::new(self.start.x + east, self.start.y + north)
    }

    pub fn step_string(&self) -> String {
        self.steps.iter().map(|s| s.as_char()).collect()
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.step_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundaryForm {
    /// `y <= (x - 1)/(k - 1) + 1`
    BelowShifted,
    /// `y <= x/k`
    BelowOrigin,
    /// `y >= kx`
    AboveOrigin,
}

/// A weak linear constraint on lattice points, evaluated in integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoundaryLine {
    pub form: BoundaryForm,
    pub k: i64,
}

impl BoundaryLine {
    pub fn below_shifted(k: i64) -> Self {
        BoundaryLine { form: BoundaryForm::BelowShifted, k }
    }
    pub fn below_origin(k: i64) -> Self {
        BoundaryLine { form: BoundaryForm::BelowOrigin, k }
    }
    pub fn above_origin(k: i64) -> Self {
        BoundaryLine { form: BoundaryForm::AboveOrigin, k }
    }

    pub fn admits(&self, p: Point) -> bool {
        let k = self.k;
        match self.form {
            BoundaryForm::BelowShifted => (k - 1) * (p.y - 1) <= p.x - 1,
            BoundaryForm::BelowOrigin => k * p.y <= p.x,
            BoundaryForm::AboveOrigin => p.y >= k * p.x,
        }
    }
}

pub fn path_satisfies(path: &LatticePath, boundary: &BoundaryLine) -> bool {
    path.points().all(|p| boundary.admits(p))
}

/// Endpoints plus boundary for a brute-force count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathQuery {
    pub start: Point,
    pub end: Point,
    pub boundary: BoundaryLine,
}

impl PathQuery {
    /// The start must satisfy the boundary and the end must be reachable
    /// with E/N steps. An end point violating the boundary is allowed and
    /// simply yields no paths.
    pub fn new(start: Point, end: Point, boundary: BoundaryLine) -> Result<Self> {
        if end.x < start.x || end.y < start.y {
            return domain(format!(
                "end ({}, {}) is not reachable from start ({}, {})",
                end.x, end.y, start.x, start.y
            ));
        }
        if !boundary.admits(start) {
            return domain(format!("start ({}, {}) violates the boundary", start.x, start.y));
        }
        Ok(PathQuery { start, end, boundary })
    }

    /// `L(u+1, 1; m, n; k)`.
    pub fn shifted(m: i64, n: i64, u: i64, k: i64) -> Result<Self> {
        Self::new(Point::new(u + 1, 1), Point::new(m, n), BoundaryLine::below_shifted(k))
    }

    pub fn step_count(&self) -> i64 {
        (self.end.x - self.start.x) + (self.end.y - self.start.y)
    }
}

/// All admissible paths for `q`, in lexicographic order with `E < N`.
pub fn enumerate_paths(q: &PathQuery, cap: i64) -> Result<Vec<LatticePath>> {
    let len = q.step_count();
    if len > cap {
        return Err(Error::Size { len, cap });
    }
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(len as usize);
    extend(q, q.start, &mut steps, &mut out);
    Ok(out)
}

fn extend(q: &PathQuery, at: Point, steps: &mut Vec<Step>, out: &mut Vec<LatticePath>) {
    if !q.boundary.admits(at) {
        return;
    }
    if at == q.end {
        out.push(LatticePath::new(q.start, steps.clone()));
        return;
    }
    for step in [Step::E, Step::N] {
        let (dx, dy) = step.delta();
        let next = Point::new(at.x + dx, at.y + dy);
        if next.x <= q.end.x && next.y <= q.end.y {
            steps.push(step);
            extend(q, next, steps, out);
            steps.pop();
        }
    }
}

/// Mirror in the diagonal `y = x`.
pub fn reflect_path(path: &LatticePath) -> LatticePath {
    LatticePath::new(
        Point::new(path.start.y, path.start.x),
        path.steps.iter().map(|s| s.swapped()).collect(),
    )
}

pub fn shift_path(path: &LatticePath, dx: i64, dy: i64) -> LatticePath {
    LatticePath::new(Point::new(path.start.x + dx, path.start.y + dy), path.steps.clone())
}

/// Counts `|L(u+1, 1; m, n; k)|` for `u + 1 <= m <= m_max`, `2 <= n <= n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpTable {
    u: i64,
    k: i64,
    m_max: i64,
    n_max: i64,
    // rows[n - 2][m - u - 1]
    rows: Vec<Vec<BigInt>>,
}

impl DpTable {
    pub fn u(&self) -> i64 {
        self.u
    }
    pub fn k(&self) -> i64 {
        self.k
    }
    pub fn m_range(&self) -> std::ops::RangeInclusive<i64> {
        self.u + 1..=self.m_max
    }
    pub fn n_range(&self) -> std::ops::RangeInclusive<i64> {
        2..=self.n_max
    }

    /// Count at `(m, n)`; cells strictly above the boundary hold zero.
    pub fn get(&self, m: i64, n: i64) -> Option<&BigInt> {
        if !self.m_range().contains(&m) || !self.n_range().contains(&n) {
            return None;
        }
        Some(&self.rows[(n - 2) as usize][(m - self.u - 1) as usize])
    }

    /// `(m, n, count)` in row-major order: increasing `n`, then increasing `m`.
    pub fn cells(&self) -> impl Iterator<Item = (i64, i64, &BigInt)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(r, row)| {
            row.iter().enumerate().map(move |(c, v)| (self.u + 1 + c as i64, r as i64 + 2, v))
        })
    }
}

/// Fills the table from the three families of initial conditions and the
/// recurrence `L(m, n) = L(m - 1, n) + L(m, n - 1)`:
///
/// * the zero line `m = (k-1)(n-1)` (and everything left of it),
/// * the start column `m = u + 1`, which holds 1 wherever it is admissible
///   (only possible when `u >= k - 1`),
/// * the bottom row `n = 2`, equal to `m - max{u, k-1}`.
pub fn count_paths_dp(u: i64, k: i64, m_max: i64, n_max: i64) -> Result<DpTable> {
    if u < 0 {
        return domain(format!("u must be >= 0 (got {u})"));
    }
    if k < 2 {
        return domain(format!("k must be >= 2 (got {k})"));
    }
    if n_max < 2 {
        return domain(format!("n_max must be >= 2 (got {n_max})"));
    }
    let lo = (u + 1).max((k - 1) * (n_max - 1));
    if m_max < lo {
        return domain(format!("m_max must be >= max{{u+1,(k-1)(n_max-1)}} = {lo} (got {m_max})"));
    }

    let width = (m_max - u) as usize;
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity((n_max - 1) as usize);
    for n in 2..=n_max {
        let zero_line = (k - 1) * (n - 1);
        let mut row: Vec<BigInt> = Vec::with_capacity(width);
        for m in u + 1..=m_max {
            let c = (m - u - 1) as usize;
            let value = if m <= zero_line {
                BigInt::zero()
            } else if m == u + 1 {
                debug_assert!(u >= k - 1 && n <= u / (k - 1) + 1);
                BigInt::one()
            } else if n == 2 {
                BigInt::from(m - u.max(k - 1))
            } else {
                &row[c - 1] + &rows[(n - 3) as usize][c]
            };
            row.push(value);
        }
        rows.push(row);
    }
    Ok(DpTable { u, k, m_max, n_max, rows })
}

/// `|L(u+1, 1; m, n; k)|` read off a table sized exactly for `(m, n)`.
pub fn count_paths_dp_single(m: i64, n: i64, u: i64, k: i64) -> Result<BigInt> {
    let table = count_paths_dp(u, k, m, n)?;
    table
        .get(m, n)
        .cloned()
        .ok_or_else(|| Error::Internal(format!("cell ({m}, {n}) missing from table")))
}
