//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use ballotdet::latticepath::count_paths_dp_single;
use ballotdet::{
    ballot, catalan, closed_form_d, count_above_line, count_below_line, enumerate_paths, evaluate_d, fuss_catalan,
    generalized_ballot, reflect_path, run_sweep, AboveLineQuery, BigInt, BoundaryLine, Error, Evaluators,
    LatticePath, PathQuery, Point, QueryParams, SweepConfig,
};
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn d(m: i64, n: i64, u: i64, k: i64) -> BigInt {
    evaluate_d(&QueryParams::new(m, n, u, k).unwrap())
}

fn criterion_2_config() -> SweepConfig {
    SweepConfig { u_max: 6, k_max: 5, n_max: 7, m_extra: 6, brute_cap: 16 }
}

/// Every number printed in the figure for rows y = 2..5, as (x, y, value).
fn figure_values() -> Vec<(i64, i64, i64)> {
    let rows: [(i64, i64, &[i64]); 4] = [
        (2, 2, &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9]),
        (3, 4, &[0, 3, 7, 12, 18, 25, 33, 42]),
        (4, 6, &[0, 12, 30, 55, 88, 130]),
        (5, 8, &[0, 55, 143, 273]),
    ];
    let mut out = Vec::new();
    for (y, x0, vals) in rows {
        for (i, v) in vals.iter().enumerate() {
            out.push((x0 + i as i64, y, *v));
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_ballotdet");
    let start = Instant::now();
    let output = Command::new(bin)
        .args(["table", "--u", "1", "--k", "3", "--m-max", "11", "--n-max", "5"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(output.status.success(), || format!("exit status {:?}", output.status))?;
    let text = String::from_utf8(output.stdout).map_err(|e| e.to_string())?;
    let mut lines = text.lines();
    ensure(lines.next() == Some("m,n,count"), || "missing CSV header".into())?;
    let mut cells = BTreeMap::new();
    for line in lines {
        let parts: Vec<&str> = line.split(',').collect();
        ensure(parts.len() == 3, || format!("bad row {line:?}"))?;
        let m: i64 = parts[0].parse().map_err(|_| format!("bad m in {line:?}"))?;
        let n: i64 = parts[1].parse().map_err(|_| format!("bad n in {line:?}"))?;
        cells.insert((m, n), parts[2].to_string());
    }
    let expected = figure_values();
    for &(x, y, v) in &expected {
        let got = cells.get(&(x, y)).ok_or_else(|| format!("no cell ({x},{y})"))?;
        ensure(got == &v.to_string(), || format!("({x},{y}): got {got}, figure shows {v}"))?;
    }
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("{} figure values matched in {:?}", expected.len(), elapsed))
}

fn criterion_2() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_ballotdet");
    let start = Instant::now();
    let output = Command::new(bin)
        .args(["verify", "--u-max", "6", "--k-max", "5", "--n-max", "7", "--m-extra", "6", "--brute-cap", "16"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(output.status.code() == Some(0), || format!("exit status {:?}", output.status))?;
    let report: serde_json::Value = serde_json::from_slice(&output.stdout).map_err(|e| e.to_string())?;
    let checked = report["instances_checked"].as_u64().unwrap_or(0);
    ensure(checked > 0, || "no instances checked".into())?;
    ensure(report["mismatches"].as_array().is_some_and(Vec::is_empty), || format!("mismatches: {}", report["mismatches"]))?;
    let brute_runs = report["checks_run"]["bijections"].as_u64().unwrap_or(0);
    ensure(brute_runs > 0, || "brute force never ran".into())?;
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{checked} instances, {brute_runs} with enumeration, 0 mismatches in {elapsed:?}"))
}

fn criterion_3() -> Outcome {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_1111);
    let start = Instant::now();
    let mut done = 0;
    let mut largest = BigInt::from(0);
    while done < 200 {
        let k = rng.gen_range(2..=6);
        let u = rng.gen_range(0..=30);
        let n = rng.gen_range(2..=30);
        let lo = QueryParams::min_m(n, u, k);
        if lo + n > 60 {
            continue;
        }
        let m = rng.gen_range(lo..=60 - n);
        let p = QueryParams::new(m, n, u, k).map_err(|e| e.to_string())?;
        let det = evaluate_d(&p);
        let sum = closed_form_d(&p).map_err(|e| format!("{p}: {e}"))?;
        let dp = count_paths_dp_single(m, n, u, k).map_err(|e| format!("{p}: {e}"))?;
        ensure(det == sum && sum == dp, || format!("{p}: det {det}, sum {sum}, dp {dp}"))?;
        if det > largest {
            largest = det;
        }
        done += 1;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    Ok(format!("200 random quadruples agree (largest value {} digits) in {elapsed:?}", largest.to_string().len()))
}

fn criterion_4() -> Outcome {
    let catalans = [1, 2, 5, 14, 42, 132, 429, 1430, 4862];
    for n in 1..=10 {
        let c = catalan(n).map_err(|e| e.to_string())?;
        ensure(c == d(n + 1, n + 1, 0, 2), || format!("catalan({n}) = {c} != D"))?;
        if let Some(&v) = catalans.get((n - 1) as usize) {
            ensure(c == BigInt::from(v), || format!("catalan({n}) = {c}, expected {v}"))?;
        }
    }
    let fuss3 = [1, 3, 12, 55, 273, 1428];
    for n in 1..=6 {
        let f = fuss_catalan(n, 3).map_err(|e| e.to_string())?;
        ensure(f == d(2 * n + 1, n + 1, 0, 3), || format!("fuss_catalan({n},3) = {f} != D"))?;
        ensure(f == BigInt::from(fuss3[(n - 1) as usize]), || format!("fuss_catalan({n},3) = {f}"))?;
        for k in 2..=5 {
            let f = fuss_catalan(n, k).map_err(|e| e.to_string())?;
            ensure(f == d((k - 1) * n + 1, n + 1, 0, k), || format!("fuss_catalan({n},{k}) != D"))?;
        }
        ensure(fuss_catalan(n, 2).unwrap() == catalan(n).unwrap(), || format!("fuss_catalan({n},2) != catalan"))?;
    }
    let mut ballots = 0;
    for m in 1..=10 {
        for n in 1..=m {
            let b = ballot(m, n).map_err(|e| e.to_string())?;
            ensure(b == d(m + 1, n + 1, 0, 2), || format!("ballot({m},{n}) != D"))?;
            ballots += 1;
        }
    }
    let mut generalized = 0;
    for k in 1..=4 {
        for n in 1..=6 {
            for m in k * n..=k * n + 8 {
                let g = generalized_ballot(m, n, k).map_err(|e| e.to_string())?;
                ensure(g == d(m + 1, n + 1, 0, k + 1), || format!("generalized_ballot({m},{n},{k}) != D"))?;
                generalized += 1;
            }
        }
    }
    Ok(format!("catalan 1..10, fuss-catalan k=2..5, {ballots} ballot, {generalized} generalized ballot identities"))
}

fn criterion_5() -> Outcome {
    let report = run_sweep(&criterion_2_config(), &Evaluators::default()).map_err(|e| e.to_string())?;
    let wanted = [
        "bottom-row",
        "column-decomposition",
        "recurrence",
        "initial-bottom-row",
        "initial-start-column",
        "initial-zero-line",
    ];
    let mut counts = Vec::new();
    for name in wanted {
        let runs = report.checks_run.get(name).copied().unwrap_or(0);
        ensure(runs > 0, || format!("check {name} never ran"))?;
        let failures = report.mismatches.iter().filter(|m| m.check == name).count();
        ensure(failures == 0, || format!("check {name} failed {failures} times"))?;
        counts.push(format!("{name}={runs}"));
    }
    ensure(report.passed(), || format!("{} mismatches in sweep", report.mismatches.len()))?;
    Ok(counts.join(", "))
}

fn criterion_6() -> Outcome {
    let cfg = criterion_2_config();
    let report = run_sweep(&cfg, &Evaluators::default()).map_err(|e| e.to_string())?;
    ensure(report.integrality_errors == 0, || format!("{} integrality errors", report.integrality_errors))?;
    let mut calls = 0;
    for p in cfg.instances() {
        let (m, n, k) = (p.m(), p.n(), p.k());
        let mut check = |r: Result<BigInt, Error>, what: &str| -> Result<(), String> {
            calls += 1;
            match r {
                Err(e @ Error::Integrality { .. }) => Err(format!("{what} at {p}: {e}")),
                _ => Ok(()),
            }
        };
        check(closed_form_d(&p), "closed_form_d")?;
        if m > (k - 1) * (n - 1) {
            let below = ballotdet::closedform::shifted_below_query(&p).map_err(|e| e.to_string())?;
            check(count_below_line(&below), "count_below_line")?;
            check(count_above_line(&below.reflected()), "count_above_line")?;
        }
        if m >= n {
            check(ballot(m - 1, n - 1), "ballot")?;
        }
        if m > (k - 1) * (n - 1) {
            check(generalized_ballot(m - 1, n - 1, k - 1), "generalized_ballot")?;
        }
    }
    Ok(format!("{calls} formula evaluations, no integrality error"))
}

fn criterion_7() -> Outcome {
    let mut checked = 0;
    for k in 1..=6i64 {
        for m in 0..=12i64 {
            for n in k * m..=12 - m {
                for a in 0..=m {
                    for b in k * a..=n {
                        let q = AboveLineQuery::new(a, b, m, n, k).map_err(|e| e.to_string())?;
                        let above = PathQuery::new(Point::new(a, b), Point::new(m, n), BoundaryLine::above_origin(k))
                            .map_err(|e| e.to_string())?;
                        let below = PathQuery::new(Point::new(b, a), Point::new(n, m), BoundaryLine::below_origin(k))
                            .map_err(|e| e.to_string())?;
                        let above_paths = enumerate_paths(&above, 22).map_err(|e| e.to_string())?;
                        let below_paths = enumerate_paths(&below, 22).map_err(|e| e.to_string())?;
                        let enumerated = BigInt::from(above_paths.len());
                        let eq4 = count_above_line(&q).map_err(|e| e.to_string())?;
                        let eq5 = count_below_line(&q.reflected()).map_err(|e| e.to_string())?;
                        let reflected = BigInt::from(below_paths.len());
                        ensure(enumerated == eq4 && eq4 == eq5 && eq5 == reflected, || {
                            format!("{q:?}: enumerated {enumerated}, above formula {eq4}, below formula {eq5}, reflected {reflected}")
                        })?;
                        let mut mapped: Vec<LatticePath> = above_paths.iter().map(reflect_path).collect();
                        mapped.sort();
                        ensure(mapped == below_paths, || format!("{q:?}: reflection is not a bijection"))?;
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{checked} above-line queries with m+n <= 12"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("1 figure table reproduction", criterion_1),
        ("2 four-way oracle agreement sweep", criterion_2),
        ("3 determinant = sum = dp at scale", criterion_3),
        ("4 family identities", criterion_4),
        ("5 proof machinery on sweep", criterion_5),
        ("6 integrality over sweep", criterion_6),
        ("7 reflection bijection", criterion_7),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
