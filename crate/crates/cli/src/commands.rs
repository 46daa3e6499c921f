//! Command implementations: thin wrappers over `verlinde-core`.

use std::fmt;

use serde_json::{json, Value};
use verlinde_core::powers::{
    classical_invariant_count, decompose_from_dims, ext_power_simple, invariant_dim, length_identity_check,
    multiplicity_terms, padic_dims, sym_power_simple, trd,
};
use verlinde_core::verify::{self, VerifyOptions};
use verlinde_core::{check_prime, parse_laurent, VerObj, WeightA};

use crate::output::Report;
use crate::{Cli, Command};

pub const THREADS_ENV: &str = "VERLINDE_KIT_THREADS";

#[derive(Debug)]
pub enum CliError {
    Core(verlinde_core::Error),
    Usage(String),
}

impl CliError {
    /// 2 for bad input, 3 for a failed internal integrality assertion.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_internal() => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

impl From<verlinde_core::Error> for CliError {
    fn from(e: verlinde_core::Error) -> Self {
        CliError::Core(e)
    }
}

pub struct Outcome {
    pub report: Report,
    /// Process exit code; 4 when a verification sweep found failures.
    pub code: u8,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome { report, code: 0 }
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub fn run(cli: &Cli) -> Result<Outcome> {
    let p = || -> Result<u32> {
        let p = cli.p.ok_or_else(|| CliError::Usage("this command needs --p".into()))?;
        check_prime(p)?;
        Ok(p)
    };
    Ok(match &cli.command {
        Command::FusionTable => fusion_table(p()?)?.into(),
        Command::Sympow { m, i } => sympow(p()?, *m, *i)?.into(),
        Command::Extpow { r, i } => extpow(p()?, *r, *i)?.into(),
        Command::Decompose { fpdim, sfpdim } => decompose(p()?, fpdim, sfpdim, cli.explain)?.into(),
        Command::Weyl { m, parts } => weyl(p()?, *m, parts, cli.explain)?.into(),
        Command::Padic { mults } => padic(p()?, mults, cli.explain)?.into(),
        Command::Invariants { m, i } => invariants(p()?, *m, *i)?.into(),
        Command::Verify { primes, samples, seed, tensor_oracle } => {
            let primes = match (primes, cli.p) {
                (Some(list), _) => parse_primes(list)?,
                (None, Some(p)) => vec![p],
                (None, None) => VerifyOptions::default().primes,
            };
            let opts = VerifyOptions {
                primes,
                max_dim: cli.max_dim,
                tensor_oracle: *tensor_oracle,
                samples: *samples,
                seed: *seed,
            };
            verify_cmd(&opts, cli.explain)?
        }
    })
}

fn mults_json(x: &VerObj) -> Value {
    json!(x.mults())
}

fn fusion_table(p: u32) -> Result<Report> {
    let n = p as usize - 1;
    let simples: Vec<VerObj> = (1..=n).map(|r| VerObj::simple(p, r)).collect::<verlinde_core::Result<_>>()?;
    let mut rows = Vec::with_capacity(n);
    let mut entries = Vec::with_capacity(n * n);
    for (r, x) in simples.iter().enumerate() {
        let mut row = vec![format!("L{}", r + 1)];
        for (s, y) in simples.iter().enumerate() {
            let prod = x.fuse(y)?;
            row.push(prod.to_string());
            entries.push(json!({"r": r + 1, "s": s + 1, "mults": mults_json(&prod)}));
        }
        rows.push(row);
    }
    let mut headers = vec!["⊗".to_string()];
    headers.extend((1..=n).map(|s| format!("L{s}")));
    let headers: Vec<&str> = headers.iter().map(String::as_str).collect();
    Ok(Report::table(&headers, rows, json!({"p": p, "entries": entries})))
}

fn power_rows(
    range: impl Iterator<Item = usize>,
    power: impl Fn(usize) -> verlinde_core::Result<VerObj>,
    invariants: impl Fn(usize, &VerObj) -> verlinde_core::Result<i64>,
) -> Result<(Vec<Vec<String>>, Vec<Value>)> {
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    for i in range {
        let x = power(i)?;
        let (fp, sfp) = if x.is_zero() {
            ("0".to_string(), "0".to_string())
        } else {
            (x.fpdim()?.to_string(), x.sfpdim()?.to_string())
        };
        rows.push(vec![i.to_string(), x.to_string(), fp, sfp, invariants(i, &x)?.to_string()]);
        json_rows.push(json!({"i": i, "mults": mults_json(&x)}));
    }
    Ok((rows, json_rows))
}

const POWER_HEADERS: [&str; 5] = ["i", "object", "FPdim", "SFPdim", "invariants"];

fn sympow(p: u32, m: usize, i: Option<usize>) -> Result<Report> {
    check_index("m", m, p)?;
    let range: Box<dyn Iterator<Item = usize>> = match i {
        Some(i) => Box::new(std::iter::once(i)),
        // S^i L_1 = L_1 for every i; list the same range as for L_2
        None => Box::new(0..=p as usize - m.max(2)),
    };
    let (rows, json_rows) = power_rows(
        range,
        |i| sym_power_simple(i, m, p),
        |i, x| if m >= 2 && p > 2 && i + m <= p as usize { invariant_dim(i, m, p) } else { Ok(x.mult(1)) },
    )?;
    Ok(Report::table(&POWER_HEADERS, rows, json!({"p": p, "m": m, "rows": json_rows})))
}

fn extpow(p: u32, r: usize, i: Option<usize>) -> Result<Report> {
    check_index("r", r, p)?;
    let range: Box<dyn Iterator<Item = usize>> = match i {
        Some(i) => Box::new(std::iter::once(i)),
        None => Box::new(0..=r),
    };
    let (rows, json_rows) = power_rows(range, |i| ext_power_simple(i, r, p), |_, x| Ok(x.mult(1)))?;
    Ok(Report::table(&POWER_HEADERS, rows, json!({"p": p, "r": r, "rows": json_rows})))
}

fn check_index(name: &str, v: usize, p: u32) -> Result<()> {
    if v == 0 || v >= p as usize {
        return Err(CliError::Usage(format!("{name} must lie in 1..={}, got {v}", p - 1)));
    }
    Ok(())
}

fn decompose(p: u32, fp: &str, sfp: &str, explain: bool) -> Result<Report> {
    let fp = parse_laurent(fp)?;
    let sfp = parse_laurent(sfp)?;
    let mut json = json!({"p": p});
    let mut notes = Vec::new();
    if explain {
        let terms = multiplicity_terms(&fp, &sfp, p)?;
        notes.push("r  Σ(-1)^j h_pj  h(-1)  τ(h)  a_r = τ(h)/4p".to_string());
        let mut json_terms = Vec::new();
        for t in &terms {
            notes.push(format!(
                "{}  {}  {}  {}  {}",
                t.r, t.alternating_sum, t.value_at_minus_one, t.tau, t.multiplicity
            ));
            json_terms.push(json!({
                "r": t.r,
                "alternating_sum": t.alternating_sum.to_string(),
                "value_at_minus_one": t.value_at_minus_one.to_string(),
                "tau": t.tau.to_string(),
                "multiplicity": t.multiplicity.to_string(),
            }));
        }
        json["terms"] = Value::Array(json_terms);
    }
    let x = decompose_from_dims(&fp, &sfp, p)?;
    json["mults"] = mults_json(&x);
    let mut report = Report::single(x.to_string(), json);
    report.notes = notes;
    Ok(report)
}

fn weyl(p: u32, m: usize, parts: &str, explain: bool) -> Result<Report> {
    let w = WeightA::parse(m, parts)?;
    let x = w.decompose(p)?;
    let mut json = json!({"p": p, "m": m, "parts": w.parts(), "mults": mults_json(&x)});
    let mut report_notes = Vec::new();
    if explain {
        let qdim = w.qweyl_dim()?;
        report_notes.push(format!("q-dimension: {qdim}"));
        report_notes.push(format!("super sign: {}", w.super_sign()));
        json["qdim"] = serde_json::to_value(&qdim).expect("Laurent polynomials serialize");
        json["super_sign"] = json!(w.super_sign());
    }
    let mut report = Report::single(x.to_string(), json);
    report.notes = report_notes;
    Ok(report)
}

fn padic(p: u32, mults: &str, explain: bool) -> Result<Report> {
    let x = VerObj::parse(p, mults)?;
    let (plus, minus) = padic_dims(&x)?;
    let mut json = json!({"p": p, "mults": mults_json(&x), "dim_plus": plus, "dim_minus": minus});
    let mut report = Report::single(format!("Dim+={plus} Dim-={minus}"), json.clone());
    report.headers = vec!["dim_plus".into(), "dim_minus".into()];
    report.rows = vec![vec![plus.to_string(), minus.to_string()]];
    if explain {
        let (t_plus, t_minus) = trd(&x)?;
        report.notes.push(format!("Trd+={t_plus} Trd-={t_minus}"));
        report.notes.push(format!("length={} identity holds: {}", x.length(), length_identity_check(&x)?));
        json["trd_plus"] = json!(t_plus);
        json["trd_minus"] = json!(t_minus);
        report.json = json;
    }
    Ok(report)
}

fn invariants(p: u32, m: usize, i: Option<usize>) -> Result<Report> {
    if p == 2 {
        return Err(CliError::Usage("invariants needs an odd prime".into()));
    }
    check_index("m", m, p)?;
    if m < 2 {
        return Err(CliError::Usage("invariants needs m >= 2".into()));
    }
    let range: Vec<usize> = match i {
        Some(i) => vec![i],
        None => (0..=p as usize - m).collect(),
    };
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    for i in range {
        let ours = invariant_dim(i, m, p)?;
        let classical = classical_invariant_count(i, m);
        rows.push(vec![i.to_string(), ours.to_string(), classical.to_string()]);
        json_rows.push(json!({"i": i, "invariant_dim": ours, "classical": classical}));
    }
    Ok(Report::table(&["i", "invariant_dim", "classical"], rows, json!({"p": p, "m": m, "rows": json_rows})))
}

fn parse_primes(list: &str) -> Result<Vec<u32>> {
    list.split(',')
        .map(|s| s.trim().parse::<u32>().map_err(|_| CliError::Usage(format!("bad prime {s:?} in {list:?}"))))
        .collect()
}

fn verify_cmd(opts: &VerifyOptions, explain: bool) -> Result<Outcome> {
    let threads = match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| CliError::Usage(format!("{THREADS_ENV} must be a positive integer, got {v:?}")))?,
        Err(_) => 0,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start thread pool: {e}")))?;
    let report = pool.install(|| verify::run(opts))?;
    let passed = report.passed();
    let rows: Vec<Vec<String>> = report
        .summary()
        .into_iter()
        .map(|(check, ok, total)| vec![check.to_string(), ok.to_string(), total.to_string()])
        .collect();
    let mut out = Report::table(&["check", "passed", "total"], rows, report.to_json());
    let verdict = if passed { "PASS" } else { "FAIL" };
    if explain {
        let mut notes = Vec::new();
        for (check, ok, total) in report.summary() {
            notes.push(format!("{check}: {ok}/{total}"));
        }
        out.notes = notes;
    }
    for f in report.failures() {
        out.notes.push(format!("failed {} p={} {}: {}", f.check, f.p, f.cell, f.detail.as_deref().unwrap_or("")));
    }
    out.headline = Some(verdict.to_string());
    Ok(Outcome { report: out, code: if passed { 0 } else { 4 } })
}
