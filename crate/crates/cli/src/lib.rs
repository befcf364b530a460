//! Library side of the `semisimplicity` command: argument handling, the four
//! subcommands and their renderings. `main.rs` only maps the outcome to an
//! exit code.

pub mod args;
pub mod render;
pub mod verify;

use std::fmt::{self, Write as _};
use std::time::Instant;

use serde::Serialize;

use semisimplicity::criteria::decide;
use semisimplicity::gram::{first_degenerate_level, gram_rank, GramReport};
use semisimplicity::params::{DeltaSpec, Family, ParamSpec};
use semisimplicity::partitions::partitions_of;
use semisimplicity::weights::{evaluate_weight, factored_display};

pub use args::Cli;
use args::{Command, Format};
use render::{finish_csv, verdict_csv, verdict_text, verdict_to_json};
use verify::{run_suite, CheckResult};

/// Largest level accepted by `weights`.
pub const MAX_WEIGHT_LEVEL: usize = 16;

/// Exit status 0 on success, 1 when a verification suite fails, 2 on bad
/// arguments or parameters.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Library(semisimplicity::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Library(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<semisimplicity::Error> for CliError {
    fn from(e: semisimplicity::Error) -> Self {
        CliError::Library(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// What a command prints, and whether it succeeded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub success: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, success: true }
    }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes")
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Decide { family, params, format } => cmd_decide(&params.to_spec(family.into())?, format),
        Command::Weights { family, params, n, symbolic, format } => {
            cmd_weights(&params.to_spec(family.into())?, n, symbolic, format)
        }
        Command::Gram { characteristic, delta, n, n_max, format } => {
            cmd_gram(&ParamSpec::brauer(characteristic, DeltaSpec::Integer(delta))?, n, n_max, format)
        }
        Command::Verify { suite, max_n, format } => Ok(cmd_verify(suite, max_n, format)),
    }
}

pub fn cmd_decide(spec: &ParamSpec, format: Format) -> Result<Output, CliError> {
    let v = decide(spec)?;
    Ok(Output::ok(match format {
        Format::Text => verdict_text(&v),
        Format::Json => verdict_to_json(&v) + "\n",
        Format::Csv => verdict_csv(&v)?,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightRow {
    pub level: usize,
    pub partition: Vec<usize>,
    pub label: String,
    pub factored: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expanded: Option<String>,
    pub value: Option<String>,
    pub zero: bool,
    #[serde(rename = "box")]
    pub vanishing_box: Option<[usize; 2]>,
    /// `ok`, or the reason the weight cannot be evaluated.
    pub status: String,
}

pub fn weight_rows(spec: &ParamSpec, n: usize, symbolic: bool) -> Result<Vec<WeightRow>, CliError> {
    if n > MAX_WEIGHT_LEVEL {
        return Err(CliError::Usage(format!("--n is limited to {MAX_WEIGHT_LEVEL}")));
    }
    let mut rows = Vec::new();
    for level in (n % 2..=n).rev().step_by(2) {
        for shape in partitions_of(level) {
            let mut row = WeightRow {
                level: n,
                partition: shape.parts().to_vec(),
                label: shape.to_string(),
                factored: factored_display(&shape, spec),
                expanded: None,
                value: None,
                zero: false,
                vanishing_box: None,
                status: "ok".into(),
            };
            match evaluate_weight(&shape, spec) {
                Ok(w) => {
                    if symbolic {
                        row.expanded = w.symbolic.as_ref().map(ToString::to_string);
                    }
                    row.value = w.value.as_ref().map(ToString::to_string);
                    row.zero = w.is_zero;
                    row.vanishing_box = w.vanishing_box.map(|c| [c.row, c.col]);
                }
                Err(semisimplicity::Error::NotEvaluable(why)) => row.status = format!("not evaluable: {why}"),
                Err(e) => return Err(e.into()),
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

pub fn cmd_weights(spec: &ParamSpec, n: usize, symbolic: bool, format: Format) -> Result<Output, CliError> {
    let rows = weight_rows(spec, n, symbolic)?;
    let text = match format {
        Format::Json => json(&rows) + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["partition", "weight", "expanded", "value", "zero", "box", "status"])?;
            for r in &rows {
                let cell = r.vanishing_box.map(|[i, j]| format!("({i},{j})")).unwrap_or_default();
                w.write_record([
                    r.label.as_str(),
                    &r.factored,
                    r.expanded.as_deref().unwrap_or(""),
                    r.value.as_deref().unwrap_or(""),
                    if r.zero { "true" } else { "false" },
                    &cell,
                    &r.status,
                ])?;
            }
            finish_csv(w)?
        }
        Format::Text => {
            let mut out = String::new();
            let width = rows.iter().map(|r| r.label.chars().count()).max().unwrap_or(0);
            for r in &rows {
                let pad = " ".repeat(width - r.label.chars().count());
                let _ = write!(out, "{}{pad}  {}", r.label, r.factored);
                if let Some(e) = &r.expanded {
                    let _ = write!(out, "  = {e}");
                }
                if let Some(v) = &r.value {
                    let _ = write!(out, "  value {v}");
                }
                if let Some([i, j]) = r.vanishing_box {
                    let _ = write!(out, "  zero at box ({i},{j})");
                }
                if r.status != "ok" {
                    let _ = write!(out, "  {}", r.status);
                }
                out.push('\n');
            }
            out
        }
    };
    Ok(Output::ok(text))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
struct GramJson {
    characteristic: u64,
    delta: i64,
    #[serde(flatten)]
    report: Option<GramReport>,
    corank: Option<usize>,
    n_max: Option<usize>,
    first_degenerate_level: Option<usize>,
}

pub fn cmd_gram(spec: &ParamSpec, n: Option<usize>, n_max: Option<usize>, format: Format) -> Result<Output, CliError> {
    let Some(DeltaSpec::Integer(delta)) = spec.delta else {
        return Err(CliError::Usage("gram needs an integer --delta".into()));
    };
    let p = spec.characteristic;
    let out = match (n, n_max) {
        (Some(n), _) => {
            let r = gram_rank(spec, n)?;
            let j = GramJson {
                characteristic: p,
                delta,
                report: Some(r),
                corank: Some(r.corank()),
                n_max: None,
                first_degenerate_level: None,
            };
            match format {
                Format::Text => format!(
                    "Br_{n} at δ = {delta}, characteristic {p}: dimension {}, rank {}, corank {}\n",
                    r.dim,
                    r.rank,
                    r.corank()
                ),
                Format::Json => json(&j) + "\n",
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(["n", "dim", "rank", "corank"])?;
                    w.write_record([n, r.dim, r.rank, r.corank()].map(|x| x.to_string()))?;
                    finish_csv(w)?
                }
            }
        }
        (None, Some(n_max)) => {
            let r = first_degenerate_level(spec, n_max)?;
            let j = GramJson {
                characteristic: p,
                delta,
                report: r,
                corank: r.map(|r| r.corank()),
                n_max: Some(n_max),
                first_degenerate_level: r.map(|r| r.n),
            };
            match format {
                Format::Text => match r {
                    Some(r) => format!(
                        "first degenerate level at δ = {delta}, characteristic {p}: n = {} (rank {} of {}, corank {})\n",
                        r.n,
                        r.rank,
                        r.dim,
                        r.corank()
                    ),
                    None => format!("trace form nondegenerate for all n ≤ {n_max} at δ = {delta}, characteristic {p}\n"),
                },
                Format::Json => json(&j) + "\n",
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(["n_max", "first_degenerate_level", "corank"])?;
                    let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
                    w.write_record([n_max.to_string(), opt(j.first_degenerate_level), opt(j.corank)])?;
                    finish_csv(w)?
                }
            }
        }
        (None, None) => return Err(CliError::Usage("gram needs --n or --n-max".into())),
    };
    Ok(Output::ok(out))
}

#[derive(Debug, Clone, Serialize)]
struct VerifyJson<'a> {
    passed: bool,
    seconds: f64,
    checks: &'a [CheckResult],
}

pub fn cmd_verify(suite: args::Suite, max_n: usize, format: Format) -> Output {
    let start = Instant::now();
    let results = run_suite(suite, max_n);
    let seconds = start.elapsed().as_secs_f64();
    let passed = results.iter().all(|r| r.passed);
    let text = match format {
        Format::Json => json(&VerifyJson { passed, seconds, checks: &results }) + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut write = || -> Result<String, CliError> {
                w.write_record(["suite", "check", "status", "detail"])?;
                for r in &results {
                    w.write_record([r.suite.as_str(), &r.check, if r.passed { "pass" } else { "FAIL" }, &r.detail])?;
                }
                finish_csv(std::mem::replace(&mut w, csv::Writer::from_writer(Vec::new())))
            };
            write().unwrap_or_else(|e| format!("{e}\n"))
        }
        Format::Text => {
            let mut out = String::new();
            let width = results.iter().map(|r| r.suite.len() + r.check.len() + 2).max().unwrap_or(0);
            for r in &results {
                let name = format!("{}: {}", r.suite, r.check);
                let pad = " ".repeat(width.saturating_sub(name.chars().count()));
                let status = if r.passed { "pass" } else { "FAIL" };
                let _ = writeln!(out, "{name}{pad}  {status}  {}", r.detail);
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            let _ = writeln!(out, "{} of {} checks passed in {seconds:.2} s", results.len() - failed, results.len());
            out
        }
    };
    Output { text, success: passed }
}

/// Family names as accepted on the command line.
pub fn family_name(f: Family) -> &'static str {
    match f {
        Family::Brauer => "brauer",
        Family::QBrauer => "qbrauer",
        Family::Bmw => "bmw",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    fn run_args(args: &[&str]) -> Result<Output, CliError> {
        run(Cli::try_parse_from(std::iter::once("semisimplicity").chain(args.iter().copied())).unwrap())
    }

    #[test]
    fn decide_examples() {
        let out = run_args(&["decide", "brauer", "--char", "0", "--delta", "2"]).unwrap();
        assert!(out.text.contains("n ≤ 3"), "{}", out.text);
        let out = run_args(&["decide", "bmw", "--e", "5", "--f", "10", "--eps", "-1", "--N", "-2"]).unwrap();
        assert!(out.text.contains("n ≤ 4"), "{}", out.text);
        let out = run_args(&["decide", "qbrauer", "--not-root", "--r-generic"]).unwrap();
        assert!(out.text.contains("semisimple for all n"), "{}", out.text);
    }

    #[test]
    fn weights_examples() {
        let spec = ParamSpec::brauer(0, DeltaSpec::Generic).unwrap();
        let rows = weight_rows(&spec, 2, true).unwrap();
        let shown: Vec<_> = rows.iter().map(|r| (r.label.as_str(), r.factored.as_str())).collect();
        assert_eq!(shown, [("(2)", "(δ+2)(δ−1)/2"), ("(1,1)", "δ(δ−1)/2"), ("∅", "1")]);
        let rows = weight_rows(&spec, 1, false).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].factored, "δ");
        let out = run_args(&["weights", "qbrauer", "--n", "2", "--N", "3"]).unwrap();
        assert!(out.text.contains("[5]_q[2]_q/([2]_q[1]_q)"), "{}", out.text);
        assert!(weight_rows(&spec, MAX_WEIGHT_LEVEL + 1, false).is_err());
    }

    #[test]
    fn weights_report_vanishing_and_evaluability() {
        let spec = ParamSpec::brauer(3, DeltaSpec::Integer(1)).unwrap();
        let rows = weight_rows(&spec, 3, false).unwrap();
        assert!(rows.iter().any(|r| r.status.starts_with("not evaluable")));
        let spec = ParamSpec::brauer(0, DeltaSpec::Integer(1)).unwrap();
        let rows = weight_rows(&spec, 2, false).unwrap();
        assert_eq!(rows[0].vanishing_box, Some([1, 2]));
    }

    #[test]
    fn gram_example() {
        let out = run_args(&["gram", "--char", "0", "--delta", "1", "--n", "2"]).unwrap();
        assert!(out.text.contains("rank 1, corank 2"), "{}", out.text);
        let out = run_args(&["gram", "--delta", "2", "--n-max", "4", "--format", "json"]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(v["first_degenerate_level"], 3);
        assert!(run_args(&["gram", "--delta", "2", "--n", "5"]).is_err());
    }

    #[test]
    fn csv_has_a_header() {
        let out = run_args(&["weights", "brauer", "--n", "2", "--delta", "3", "--format", "csv"]).unwrap();
        let first = out.text.lines().next().unwrap();
        assert!(first.starts_with("partition,weight"));
        assert_eq!(out.text.lines().count(), 4);
    }
}
