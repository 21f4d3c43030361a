//! Command-line front end. Data goes to `out`, timings and summaries to
//! `err`. Exit codes: 0 success, 2 usage or domain error, 3 disagreement.

use std::ffi::OsString;
use std::io::Write;

use ballotdet::latticepath::DEFAULT_ENUMERATION_CAP;
use ballotdet::{
    ballot, catalan, count_paths_dp, enumerate_paths, evaluate_d, fuss_catalan, generalized_ballot, run_sweep,
    verify::compare_methods, Error, Evaluators, Family, Method, PathQuery, QueryParams, SweepConfig,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "ballotdet", version, about = "Exact ballot-type determinant and lattice path counts")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate D(m,n,u,k) by one or more methods
    Eval(EvalArgs),
    /// Cross-validate all methods and identities over a parameter sweep
    Verify(VerifyArgs),
    /// Print the first terms of a named family
    Sequence(SequenceArgs),
    /// Tabulate |L(u+1,1;m,n;k)| over a rectangle
    Table(TableArgs),
    /// List the paths counted by D(m,n,u,k)
    Paths(PathsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Det,
    Sum,
    Dp,
    Brute,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct Quad {
    #[arg(long, allow_negative_numbers = true)]
    pub m: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub n: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub u: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub k: i64,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub quad: Quad,
    /// Methods to run; repeat or comma-separate
    #[arg(long = "method", value_enum, value_delimiter = ',', default_value = "all")]
    pub methods: Vec<MethodArg>,
    /// Brute force only runs when m + n <= cap
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub cap: i64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 6)]
    pub u_max: i64,
    #[arg(long, default_value_t = 5)]
    pub k_max: i64,
    #[arg(long, default_value_t = 7)]
    pub n_max: i64,
    #[arg(long, default_value_t = 6)]
    pub m_extra: i64,
    #[arg(long, default_value_t = 16)]
    pub brute_cap: i64,
    #[arg(long, value_enum, default_value = "json")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct SequenceArgs {
    /// catalan, fuss-catalan, ballot or generalized-ballot
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub count: i64,
    /// k for fuss-catalan and generalized-ballot
    #[arg(long)]
    pub k: Option<i64>,
    /// m for ballot and generalized-ballot
    #[arg(long)]
    pub m: Option<i64>,
    /// First n for ballot and generalized-ballot
    #[arg(long, default_value_t = 1)]
    pub n_start: i64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub u: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub k: i64,
    #[arg(long)]
    pub m_max: i64,
    #[arg(long)]
    pub n_max: i64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct PathsArgs {
    #[command(flatten)]
    pub quad: Quad,
    /// Maximum number of paths to print; 0 prints only the total
    #[arg(long, default_value_t = 20)]
    pub limit: usize,
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub cap: i64,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &Evaluators::default(), out, err)
}

/// As [`run`], with the counting routes supplied by the caller.
pub fn run_with<I, T>(args: I, evaluators: &Evaluators, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Eval(a) => cmd_eval(&a, evaluators, out, err),
        Command::Verify(a) => cmd_verify(&a, evaluators, out, err),
        Command::Sequence(a) => cmd_sequence(&a, out, err),
        Command::Table(a) => cmd_table(&a, out),
        Command::Paths(a) => cmd_paths(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Integrality { .. } | Error::Internal(_) => EXIT_MISMATCH,
                Error::Domain(_) | Error::Size { .. } => EXIT_USAGE,
            }
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

#[derive(Debug)]
enum CliError {
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult = Result<i32, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Lib(Error::Domain(msg.into()))
}

fn params(q: &Quad) -> Result<QueryParams, Error> {
    QueryParams::new(q.m, q.n, q.u, q.k)
}

#[derive(Serialize)]
struct EvalJson {
    params: QueryParams,
    results: Vec<MethodValue>,
    agree: bool,
}

#[derive(Serialize)]
struct MethodValue {
    method: Method,
    value: String,
}

fn cmd_eval(a: &EvalArgs, evaluators: &Evaluators, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let p = params(&a.quad)?;
    let mut methods: Vec<Method> = Vec::new();
    let explicit_brute = a.methods.contains(&MethodArg::Brute);
    for arg in &a.methods {
        let add: &[Method] = match arg {
            MethodArg::Det => &[Method::Det],
            MethodArg::Sum => &[Method::Sum],
            MethodArg::Dp => &[Method::Dp],
            MethodArg::Brute => &[Method::Brute],
            MethodArg::All => &Method::ALL,
        };
        for m in add {
            if !methods.contains(m) {
                methods.push(*m);
            }
        }
    }
    methods.sort();
    if p.m() + p.n() > a.cap && methods.contains(&Method::Brute) {
        if explicit_brute {
            return Err(usage(format!("brute force needs m + n <= {} (got {})", a.cap, p.m() + p.n())));
        }
        writeln!(err, "skipping brute: m + n = {} exceeds cap {}", p.m() + p.n(), a.cap)?;
        methods.retain(|&m| m != Method::Brute);
    }

    let mut values = Vec::with_capacity(methods.len());
    for &method in &methods {
        let r = evaluators.timed(&p, method, a.cap)?;
        writeln!(err, "{method}: {:.3} ms", r.elapsed.as_secs_f64() * 1e3)?;
        values.push((method, r.value));
    }
    let (_, mismatch) = compare_methods(&p, &methods, evaluators, a.cap);
    let agree = values.windows(2).all(|w| w[0].1 == w[1].1) && mismatch.is_none();

    match a.format {
        OutputFormat::Json => {
            let doc = EvalJson {
                params: p,
                results: values.iter().map(|(m, v)| MethodValue { method: *m, value: v.to_string() }).collect(),
                agree,
            };
            writeln!(out, "{}", serde_json::to_string(&doc).expect("serializable"))?;
        }
        _ => {
            for (m, v) in &values {
                writeln!(out, "{m} {v}")?;
            }
        }
    }
    if agree {
        Ok(EXIT_OK)
    } else {
        writeln!(err, "methods disagree for {p}")?;
        Ok(EXIT_MISMATCH)
    }
}

fn cmd_verify(a: &VerifyArgs, evaluators: &Evaluators, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let cfg = SweepConfig {
        u_max: a.u_max,
        k_max: a.k_max,
        n_max: a.n_max,
        m_extra: a.m_extra,
        brute_cap: a.brute_cap,
    };
    let started = std::time::Instant::now();
    let report = run_sweep(&cfg, evaluators)?;
    match a.format {
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("serializable"))?,
        _ => {
            writeln!(out, "instances_checked {}", report.instances_checked)?;
            for (name, count) in &report.checks_run {
                writeln!(out, "check {name} {count}")?;
            }
            writeln!(out, "integrality_errors {}", report.integrality_errors)?;
            writeln!(out, "mismatches {}", report.mismatches.len())?;
        }
    }
    writeln!(
        err,
        "checked {} instances in {:.2} s, {} mismatches",
        report.instances_checked,
        started.elapsed().as_secs_f64(),
        report.mismatches.len()
    )?;
    if let Some(first) = report.mismatches.first() {
        let methods: Vec<&str> = first.disagreeing.iter().map(|m| m.name()).collect();
        writeln!(err, "first mismatch: check {} at {} values {:?} disagreeing {:?}", first.check, first.params, first.values, methods)?;
        return Ok(EXIT_MISMATCH);
    }
    Ok(EXIT_OK)
}

/// `(term, D parameters the term must equal)` for the family.
fn family_terms(a: &SequenceArgs, family: Family) -> Result<Vec<(BigInt, QueryParams)>, Error> {
    let need = |v: Option<i64>, name: &str| {
        v.ok_or_else(|| Error::Domain(format!("family {} needs --{name}", family.name())))
    };
    let mut terms = Vec::with_capacity(a.count as usize);
    for i in 0..a.count {
        let term = match family {
            Family::Catalan => {
                let n = i + 1;
                (catalan(n)?, QueryParams::new(n + 1, n + 1, 0, 2)?)
            }
            Family::FussCatalan => {
                let (n, k) = (i + 1, need(a.k, "k")?);
                (fuss_catalan(n, k)?, QueryParams::new((k - 1) * n + 1, n + 1, 0, k)?)
            }
            Family::Ballot => {
                let (m, n) = (need(a.m, "m")?, a.n_start + i);
                (ballot(m, n)?, QueryParams::new(m + 1, n + 1, 0, 2)?)
            }
            Family::GeneralizedBallot => {
                let (m, n, k) = (need(a.m, "m")?, a.n_start + i, need(a.k, "k")?);
                (generalized_ballot(m, n, k)?, QueryParams::new(m + 1, n + 1, 0, k + 1)?)
            }
        };
        terms.push(term);
    }
    Ok(terms)
}

fn cmd_sequence(a: &SequenceArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    if a.count < 1 {
        return Err(usage(format!("count must be >= 1 (got {})", a.count)));
    }
    let family: Family = a.family.parse()?;
    let terms = family_terms(a, family)?;
    for (value, p) in &terms {
        let d = evaluate_d(p);
        if &d != value {
            writeln!(err, "{} term {value} disagrees with D{p} = {d}", family.name())?;
            return Ok(EXIT_MISMATCH);
        }
    }
    match a.format {
        OutputFormat::Json => {
            let strings: Vec<String> = terms.iter().map(|(v, _)| v.to_string()).collect();
            writeln!(out, "{}", serde_json::to_string(&strings).expect("serializable"))?;
        }
        _ => {
            for (v, _) in &terms {
                writeln!(out, "{v}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct Cell {
    m: i64,
    n: i64,
    count: String,
}

fn cmd_table(a: &TableArgs, out: &mut dyn Write) -> CliResult {
    let table = count_paths_dp(a.u, a.k, a.m_max, a.n_max)?;
    match a.format {
        OutputFormat::Json => {
            let cells: Vec<Cell> = table.cells().map(|(m, n, c)| Cell { m, n, count: c.to_string() }).collect();
            writeln!(out, "{}", serde_json::to_string(&cells).expect("serializable"))?;
        }
        _ => {
            writeln!(out, "m,n,count")?;
            for (m, n, c) in table.cells() {
                writeln!(out, "{m},{n},{c}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_paths(a: &PathsArgs, out: &mut dyn Write) -> CliResult {
    let p = params(&a.quad)?;
    if p.m() + p.n() > a.cap {
        return Err(usage(format!("path listing needs m + n <= {} (got {})", a.cap, p.m() + p.n())));
    }
    let q = PathQuery::shifted(p.m(), p.n(), p.u(), p.k())?;
    let paths = enumerate_paths(&q, a.cap)?;
    for path in paths.iter().take(a.limit) {
        writeln!(out, "{path}")?;
    }
    writeln!(out, "total {}", paths.len())?;
    Ok(EXIT_OK)
}
