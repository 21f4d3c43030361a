//! Cross-validation of the four counting routes plus every recurrence,
//! initial condition, matrix identity and bijection over a parameter sweep.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::closedform::{closed_form_d, count_above_line, count_below_line, shifted_below_query};
use crate::detkernel::{check_bottom_row, check_column_decomposition, evaluate_d, QueryParams};
use crate::error::{domain, Error, Result};
use crate::exact::BigInt;
use crate::families::{ballot, catalan, fuss_catalan, generalized_ballot};
use crate::latticepath::{
    count_paths_dp_single, enumerate_paths, path_satisfies, reflect_path, shift_path, BoundaryLine, LatticePath,
    PathQuery, Point, Step, DEFAULT_ENUMERATION_CAP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Det,
    Sum,
    Dp,
    Brute,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Det, Method::Sum, Method::Dp, Method::Brute];

    pub fn name(self) -> &'static str {
        match self {
            Method::Det => "det",
            Method::Sum => "sum",
            Method::Dp => "dp",
            Method::Brute => "brute",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "det" => Ok(Method::Det),
            "sum" => Ok(Method::Sum),
            "dp" => Ok(Method::Dp),
            "brute" => Ok(Method::Brute),
            other => domain(format!("unknown method {other:?}")),
        }
    }
}

/// One exact count and the route that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub params: QueryParams,
    pub method: Method,
    pub value: BigInt,
    pub elapsed: Duration,
}

/// The four counting routes. Swappable so the sweep reporter can be tested
/// against a deliberately broken route.
#[derive(Clone, Copy)]
pub struct Evaluators {
    pub det: fn(&QueryParams) -> Result<BigInt>,
    pub sum: fn(&QueryParams) -> Result<BigInt>,
    pub dp: fn(&QueryParams) -> Result<BigInt>,
    pub brute: fn(&QueryParams, i64) -> Result<BigInt>,
}

impl Default for Evaluators {
    fn default() -> Self {
        Evaluators { det: det_route, sum: closed_form_d, dp: dp_route, brute: brute_route }
    }
}

impl Evaluators {
    pub fn run(&self, p: &QueryParams, method: Method, cap: i64) -> Result<BigInt> {
        match method {
            Method::Det => (self.det)(p),
            Method::Sum => (self.sum)(p),
            Method::Dp => (self.dp)(p),
            Method::Brute => (self.brute)(p, cap),
        }
    }

    pub fn timed(&self, p: &QueryParams, method: Method, cap: i64) -> Result<CountResult> {
        let start = Instant::now();
        let value = self.run(p, method, cap)?;
        Ok(CountResult { params: *p, method, value, elapsed: start.elapsed() })
    }
}

fn det_route(p: &QueryParams) -> Result<BigInt> {
    Ok(evaluate_d(p))
}

fn dp_route(p: &QueryParams) -> Result<BigInt> {
    count_paths_dp_single(p.m(), p.n(), p.u(), p.k())
}

/// Number of enumerated paths in `L(u+1, 1; m, n; k)`.
pub fn brute_route(p: &QueryParams, cap: i64) -> Result<BigInt> {
    let q = PathQuery::shifted(p.m(), p.n(), p.u(), p.k())?;
    Ok(BigInt::from(enumerate_paths(&q, cap)?.len()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub u_max: i64,
    pub k_max: i64,
    pub n_max: i64,
    pub m_extra: i64,
    /// Brute-force enumeration runs only where `m + n <= brute_cap`.
    pub brute_cap: i64,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.u_max < 0 || self.k_max < 2 || self.n_max < 2 || self.m_extra < 0 || self.brute_cap < 0 {
            return domain("sweep needs u_max >= 0, k_max >= 2, n_max >= 2, m_extra >= 0, brute_cap >= 0");
        }
        Ok(())
    }

    /// Every valid quadruple in parameter order `(u, k, n, m)`.
    pub fn instances(&self) -> Vec<QueryParams> {
        let mut out = Vec::new();
        for u in 0..=self.u_max {
            for k in 2..=self.k_max {
                for n in 2..=self.n_max {
                    let lo = QueryParams::min_m(n, u, k);
                    for m in lo..=lo + self.m_extra {
                        out.push(QueryParams::new(m, n, u, k).expect("m starts at the domain minimum"));
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub params: QueryParams,
    pub check: String,
    /// Named values that took part in the check, as decimal strings or error text.
    pub values: BTreeMap<String, String>,
    /// Methods that disagree with the majority (only for the `methods` check).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub disagreeing: Vec<Method>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub ranges: SweepConfig,
    pub instances_checked: usize,
    /// How many times each named check ran.
    pub checks_run: BTreeMap<String, usize>,
    pub integrality_errors: usize,
    pub mismatches: Vec<Mismatch>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[derive(Default)]
struct InstanceOutcome {
    checks: BTreeMap<String, usize>,
    integrality_errors: usize,
    mismatches: Vec<Mismatch>,
}

impl InstanceOutcome {
    fn record(&mut self, p: &QueryParams, check: &str, values: Vec<(&str, Result<BigInt>)>, ok: impl FnOnce(&[BigInt]) -> bool) {
        *self.checks.entry(check.to_string()).or_default() += 1;
        let mut shown = BTreeMap::new();
        let mut plain = Vec::with_capacity(values.len());
        for (name, v) in values {
            match v {
                Ok(v) => {
                    shown.insert(name.to_string(), v.to_string());
                    plain.push(v);
                }
                Err(e) => {
                    if matches!(e, Error::Integrality { .. }) {
                        self.integrality_errors += 1;
                    }
                    shown.insert(name.to_string(), format!("error: {e}"));
                }
            }
        }
        let all_ok = plain.len() == shown.len();
        if !all_ok || !ok(&plain) {
            self.mismatches.push(Mismatch { params: *p, check: check.to_string(), values: shown, disagreeing: vec![] });
        }
    }

    fn record_bool(&mut self, p: &QueryParams, check: &str, outcome: Result<bool>) {
        *self.checks.entry(check.to_string()).or_default() += 1;
        match outcome {
            Ok(true) => {}
            Ok(false) => self.mismatches.push(Mismatch {
                params: *p,
                check: check.to_string(),
                values: BTreeMap::from([("holds".to_string(), "false".to_string())]),
                disagreeing: vec![],
            }),
            Err(e) => self.mismatches.push(Mismatch {
                params: *p,
                check: check.to_string(),
                values: BTreeMap::from([("error".to_string(), e.to_string())]),
                disagreeing: vec![],
            }),
        }
    }
}

fn all_equal(v: &[BigInt]) -> bool {
    v.windows(2).all(|w| w[0] == w[1])
}

fn qp(m: i64, n: i64, u: i64, k: i64) -> QueryParams {
    QueryParams::new(m, n, u, k).expect("neighbour stays inside the domain")
}

/// Compares the requested methods on one instance. Methods that disagree with
/// the most common value are named in the mismatch.
pub fn compare_methods(
    p: &QueryParams,
    methods: &[Method],
    evaluators: &Evaluators,
    cap: i64,
) -> (Vec<(Method, Result<BigInt>)>, Option<Mismatch>) {
    let results: Vec<(Method, Result<BigInt>)> = methods.iter().map(|&m| (m, evaluators.run(p, m, cap))).collect();
    let mut tally: Vec<(&BigInt, usize)> = Vec::new();
    for v in results.iter().filter_map(|(_, r)| r.as_ref().ok()) {
        match tally.iter_mut().find(|(x, _)| *x == v) {
            Some(entry) => entry.1 += 1,
            None => tally.push((v, 1)),
        }
    }
    // first-seen wins ties, so the earlier method in `methods` is the reference
    let majority = tally.iter().fold(None, |best: Option<(&BigInt, usize)>, &(v, c)| match best {
        Some((_, bc)) if bc >= c => best,
        _ => Some((v, c)),
    });
    let disagreeing: Vec<Method> = results
        .iter()
        .filter(|(_, r)| match (r, majority) {
            (Ok(v), Some((maj, _))) => v != maj,
            _ => true,
        })
        .map(|(m, _)| *m)
        .collect();
    let mismatch = if disagreeing.is_empty() {
        None
    } else {
        let values = results
            .iter()
            .map(|(m, r)| {
                let shown = match r {
                    Ok(v) => v.to_string(),
                    Err(e) => format!("error: {e}"),
                };
                (m.name().to_string(), shown)
            })
            .collect();
        Some(Mismatch { params: *p, check: "methods".to_string(), values, disagreeing })
    };
    (results, mismatch)
}

fn check_instance(p: &QueryParams, cfg: &SweepConfig, ev: &Evaluators) -> InstanceOutcome {
    let mut out = InstanceOutcome::default();
    let (m, n, u, k) = (p.m(), p.n(), p.u(), p.k());
    let brute = m + n <= cfg.brute_cap;

    let methods: &[Method] = if brute { &Method::ALL } else { &Method::ALL[..3] };
    let (results, mismatch) = compare_methods(p, methods, ev, DEFAULT_ENUMERATION_CAP.max(cfg.brute_cap));
    *out.checks.entry("methods".to_string()).or_default() += 1;
    for (_, r) in &results {
        if matches!(r, Err(Error::Integrality { .. })) {
            out.integrality_errors += 1;
        }
    }
    out.mismatches.extend(mismatch);

    let d = (ev.det)(p);

    // the shift + reflection chain through both origin-line formulas
    if let Ok(below) = shifted_below_query(p) {
        out.record(
            p,
            "shifted-line-formulas",
            vec![
                ("sum", (ev.sum)(p)),
                ("below_line", count_below_line(&below)),
                ("above_line_reflected", count_above_line(&below.reflected())),
            ],
            all_equal,
        );
    }

    // D(m,n) = D(m-1,n) + D(m,n-1)
    if n >= 3 && m >= (u + 2).max((k - 1) * (n - 1) + 1) {
        out.record(
            p,
            "recurrence",
            vec![("d", d.clone()), ("d_left", (ev.det)(&qp(m - 1, n, u, k))), ("d_below", (ev.det)(&qp(m, n - 1, u, k)))],
            |v| v[0] == &v[1] + &v[2],
        );
    }

    if n == 2 && m >= (u + 2).max(k) {
        out.record(
            p,
            "initial-bottom-row",
            vec![("d", d.clone()), ("dp", (ev.dp)(p)), ("expected", Ok(BigInt::from(m - u.max(k - 1))))],
            all_equal,
        );
    }
    if m == u + 1 && u >= k - 1 && n <= u / (k - 1) + 1 {
        out.record(p, "initial-start-column", vec![("d", d.clone()), ("dp", (ev.dp)(p))], |v| {
            v.iter().all(One::is_one)
        });
    }
    if m == (k - 1) * (n - 1) {
        out.record(p, "initial-zero-line", vec![("d", d.clone()), ("dp", (ev.dp)(p))], |v| {
            v.iter().all(Zero::is_zero)
        });
    }

    if n >= 3 {
        out.record_bool(p, "bottom-row", check_bottom_row(p));
        out.record_bool(p, "column-decomposition", check_column_decomposition(p));
    }

    if u == 0 && m > (k - 1) * (n - 1) {
        out.record(
            p,
            "generalized-ballot",
            vec![("d", d.clone()), ("family", generalized_ballot(m - 1, n - 1, k - 1))],
            all_equal,
        );
        if k == 2 {
            out.record(p, "ballot", vec![("d", d.clone()), ("family", ballot(m - 1, n - 1))], all_equal);
            if m == n {
                out.record(p, "catalan", vec![("d", d.clone()), ("family", catalan(n - 1))], all_equal);
            }
        }
        if m == (k - 1) * (n - 1) + 1 {
            out.record(p, "fuss-catalan", vec![("d", d.clone()), ("family", fuss_catalan(n - 1, k))], all_equal);
        }
    }

    if brute {
        out.record_bool(p, "bijections", check_bijections(p, cfg.brute_cap.max(DEFAULT_ENUMERATION_CAP)));
        if n == 2 && u < k - 1 && m > u + 1 {
            out.record_bool(p, "forced-prefix", check_forced_prefix(p));
        }
    }
    out
}

/// Shifting `L(u+1,1;m,n;k)` by `(-1,-1)` gives exactly the paths from
/// `(u, 0)` to `(m-1, n-1)` below `y = x/(k-1)`, and reflecting those gives
/// exactly the paths from `(0, u)` to `(n-1, m-1)` above `y = (k-1)x`.
pub fn check_bijections(p: &QueryParams, cap: i64) -> Result<bool> {
    let (m, n, u, k) = (p.m(), p.n(), p.u(), p.k());
    let original = enumerate_paths(&PathQuery::shifted(m, n, u, k)?, cap)?;

    let mut shifted: Vec<LatticePath> = original.iter().map(|path| shift_path(path, -1, -1)).collect();
    shifted.sort();
    let below_q = PathQuery::new(Point::new(u, 0), Point::new(m - 1, n - 1), BoundaryLine::below_origin(k - 1))?;
    let below = enumerate_paths(&below_q, cap)?;
    if shifted != below {
        return Ok(false);
    }

    let mut reflected: Vec<LatticePath> = below.iter().map(reflect_path).collect();
    reflected.sort();
    let above_q = PathQuery::new(Point::new(0, u), Point::new(n - 1, m - 1), BoundaryLine::above_origin(k - 1))?;
    let above = enumerate_paths(&above_q, cap)?;
    Ok(reflected == above && above.iter().all(|path| path_satisfies(path, &above_q.boundary)))
}

/// With `n = 2` and `u < k - 1`, every path begins with `k - 1 - u` East steps.
pub fn check_forced_prefix(p: &QueryParams) -> Result<bool> {
    let (m, u, k) = (p.m(), p.u(), p.k());
    let prefix = (k - 1 - u) as usize;
    let paths = enumerate_paths(&PathQuery::shifted(m, 2, u, k)?, DEFAULT_ENUMERATION_CAP)?;
    Ok(paths.iter().all(|path| path.steps.len() >= prefix && path.steps[..prefix].iter().all(|&s| s == Step::E)))
}

/// Runs every check on every instance. Instances are checked in parallel and
/// merged back in parameter order.
pub fn run_sweep(cfg: &SweepConfig, evaluators: &Evaluators) -> Result<SweepReport> {
    cfg.validate()?;
    let instances = cfg.instances();
    let outcomes: Vec<InstanceOutcome> = instances.par_iter().map(|p| check_instance(p, cfg, evaluators)).collect();

    let mut report = SweepReport {
        ranges: *cfg,
        instances_checked: instances.len(),
        checks_run: BTreeMap::new(),
        integrality_errors: 0,
        mismatches: Vec::new(),
    };
    for o in outcomes {
        for (name, c) in o.checks {
            *report.checks_run.entry(name).or_default() += c;
        }
        report.integrality_errors += o.integrality_errors;
        report.mismatches.extend(o.mismatches);
    }
    Ok(report)
}
