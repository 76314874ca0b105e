//! The `radicals` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

pub mod fmt;
pub mod table;

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use periodic_radicals::chebyshev::fixed_points;
use periodic_radicals::closedform::{alpha_exact, beta_of, closed_form_of, sin_form, ClosedForm};
use periodic_radicals::counting::{brute_force_count, count_minimal_period, MAX_COUNT_PERIOD};
use periodic_radicals::numeric::limit_numeric;
use periodic_radicals::pattern::parse_pattern;
use periodic_radicals::verify::{CheckOutcome, Verifier, MAX_VERIFY_PERIOD};
use periodic_radicals::{Result as CoreResult, SignPattern};

use crate::fmt::{g15, round15};
use crate::table::{table_rows, MAX_TABLE_PERIOD};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Discrepancies below this always pass `eval`, whatever `--tol` says.
pub const EVAL_FLOOR: f64 = 1e-10;
const BRUTE_FORCE_IN_COUNT: u32 = 16;
const MAX_FIXED_POINTS_PERIOD: u32 = 16;

#[derive(Debug, Parser)]
#[command(name = "radicals", version, about = "Exact limits of periodic continued radicals over 2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Pretty,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed form and certified numeric limit of one radical
    Eval {
        /// Sign pattern of one period, e.g. "+-+"
        #[arg(allow_hyphen_values = true)]
        pattern: String,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Value table for every pattern of period N
    Table {
        n: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Number of patterns with minimal period n, for n = 1..=NMAX
    Count {
        n_max: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Fixed points of the N-fold iterate of x^2 - 2
    FixedPoints {
        n: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run every verification sweep for periods 1..=NMAX
    Verify { n_max: u32 },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Eval { pattern, tol, format } => cmd_eval(&pattern, tol, format, out, err),
        Command::Table { n, format } => cmd_table(n, format, out, err),
        Command::Count { n_max, format } => cmd_count(n_max, format, out, err),
        Command::FixedPoints { n, format } => cmd_fixed_points(n, format, out, err),
        Command::Verify { n_max } => cmd_verify(n_max, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: writing output: {e}");
            EXIT_FAILED
        }
    }
}

fn usage_error(err: &mut dyn Write, message: impl std::fmt::Display) -> io::Result<i32> {
    writeln!(err, "error: {message}")?;
    Ok(EXIT_USAGE)
}

fn check_range(err: &mut dyn Write, what: &str, n: u32, max: u32) -> io::Result<Option<i32>> {
    if (1..=max).contains(&n) {
        Ok(None)
    } else {
        usage_error(err, format!("{what} must be in 1..={max}, got {n}")).map(Some)
    }
}

/// A header plus string cells, rendered as an aligned table or as CSV.
struct Records {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Records {
    fn write(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.header)?;
                for row in &self.rows {
                    w.write_record(row)?;
                }
                w.flush()
            }
            _ => {
                let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
                for row in &self.rows {
                    for (w, cell) in widths.iter_mut().zip(row) {
                        *w = (*w).max(cell.chars().count());
                    }
                }
                let line = |cells: Vec<&str>| {
                    let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
                    padded.join("  ").trim_end().to_string()
                };
                writeln!(out, "{}", line(self.header.clone()))?;
                for row in &self.rows {
                    writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
                }
                Ok(())
            }
        }
    }
}

fn write_json(out: &mut dyn Write, value: &Value) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn closed_form_json(cf: &ClosedForm) -> Value {
    let mut v = serde_json::to_value(cf).expect("closed form serializes");
    v["value"] = json!(round15(cf.value()));
    v
}

pub fn cmd_eval(pattern: &str, tol: f64, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let p = match parse_pattern(pattern) {
        Ok(p) => p,
        Err(e) => return usage_error(err, e),
    };
    let evaluated = (|| {
        let numeric = limit_numeric(&p, tol)?;
        Ok::<_, periodic_radicals::Error>((closed_form_of(&p)?, alpha_exact(&p)?, beta_of(&p)?, sin_form(&p)?, numeric))
    })();
    let (cf, alpha, beta, sine, numeric) = match evaluated {
        Ok(v) => v,
        Err(e) => return usage_error(err, e),
    };
    let value = cf.value();
    let discrepancy = (value - numeric.value).abs();
    let passed = discrepancy < tol.max(EVAL_FLOOR);
    let status = if passed { "ok" } else { "MISMATCH" };

    match format {
        Format::Pretty => {
            let rows = [
                ("pattern", p.to_string()),
                ("period", format!("{} (minimal {})", p.len(), p.minimal_period())),
                ("parity", format!("{:+}", p.parity().value())),
                ("alpha", alpha.to_string()),
                ("beta", beta.to_string()),
                ("closed form", format!("2*{}  [ell = {}, denominator = {}]", cf.cos_form(), cf.ell, cf.denominator)),
                ("sine form", format!("2*{sine}")),
                ("value", g15(value)),
                (
                    "numeric",
                    format!("{} (depth {}, error <= {})", g15(numeric.value), numeric.depth, g15(numeric.error_bound)),
                ),
                ("discrepancy", g15(discrepancy)),
                ("status", status.to_string()),
            ];
            for (k, v) in rows {
                writeln!(out, "{k:<12} {v}")?;
            }
        }
        Format::Csv => Records {
            header: vec![
                "pattern",
                "n",
                "parity",
                "alpha",
                "beta",
                "ell",
                "denominator",
                "sin_form",
                "cos_form",
                "value",
                "numeric_value",
                "depth",
                "error_bound",
                "discrepancy",
                "passed",
            ],
            rows: vec![vec![
                p.to_string(),
                p.len().to_string(),
                p.parity().value().to_string(),
                alpha.to_string(),
                beta.to_string(),
                cf.ell.to_string(),
                cf.denominator.to_string(),
                sine,
                cf.cos_form(),
                g15(value),
                g15(numeric.value),
                numeric.depth.to_string(),
                g15(numeric.error_bound),
                g15(discrepancy),
                passed.to_string(),
            ]],
        }
        .write(format, out)?,
        Format::Json => write_json(
            out,
            &json!({
                "pattern": p.to_string(),
                "alpha": alpha.to_string(),
                "beta": beta.to_string(),
                "closed_form": closed_form_json(&cf),
                "sin_form": sine,
                "cos_form": cf.cos_form(),
                "numeric": {
                    "depth": numeric.depth,
                    "value": round15(numeric.value),
                    "error_bound": round15(numeric.error_bound),
                },
                "discrepancy": round15(discrepancy),
                "passed": passed,
            }),
        )?,
    }
    Ok(if passed { EXIT_OK } else { EXIT_FAILED })
}

pub fn cmd_table(n: u32, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    if let Some(code) = check_range(err, "table period", n, MAX_TABLE_PERIOD)? {
        return Ok(code);
    }
    let rows = table_rows(n).expect("periods up to 16 are exact");
    match format {
        Format::Json => write_json(out, &json!({ "n": n, "rows": rows }))?,
        _ => Records {
            header: vec!["pattern", "parity", "alpha", "ell", "denominator", "sin_form", "cos_form", "value"],
            rows: rows
                .iter()
                .map(|r| {
                    vec![
                        r.pattern.clone(),
                        format!("{:+}", r.parity),
                        r.alpha.clone(),
                        r.ell.to_string(),
                        r.denominator.to_string(),
                        r.sin_form.clone(),
                        r.cos_form.clone(),
                        g15(r.value),
                    ]
                })
                .collect(),
        }
        .write(format, out)?,
    }
    Ok(EXIT_OK)
}

pub fn cmd_count(n_max: u32, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    if let Some(code) = check_range(err, "NMAX", n_max, MAX_COUNT_PERIOD)? {
        return Ok(code);
    }
    let mut all_match = true;
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let formula = count_minimal_period(n).expect("n within range");
        let brute = (n <= BRUTE_FORCE_IN_COUNT).then(|| brute_force_count(n).expect("n within range"));
        let matches = brute.map(|b| b == formula);
        all_match &= matches.unwrap_or(true);
        rows.push((n, formula, brute, matches));
    }
    match format {
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(n, formula, brute, matches)| json!({ "n": n, "count": formula, "brute_force": brute, "matches": matches }))
                .collect();
            write_json(out, &json!({ "rows": rows }))?
        }
        _ => Records {
            header: vec!["n", "count", "brute_force", "matches"],
            rows: rows
                .iter()
                .map(|(n, formula, brute, matches)| {
                    vec![
                        n.to_string(),
                        formula.to_string(),
                        brute.map(|b| b.to_string()).unwrap_or_default(),
                        matches.map(|m| m.to_string()).unwrap_or_default(),
                    ]
                })
                .collect(),
        }
        .write(format, out)?,
    }
    Ok(if all_match { EXIT_OK } else { EXIT_FAILED })
}

pub fn cmd_fixed_points(n: u32, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    if let Some(code) = check_range(err, "fixed-point period", n, MAX_FIXED_POINTS_PERIOD)? {
        return Ok(code);
    }
    let set = fixed_points(n).expect("n within range");
    match format {
        Format::Json => {
            let points: Vec<Value> = set
                .points
                .iter()
                .map(|p| {
                    json!({
                        "branch": p.branch.as_str(),
                        "ell": p.ell,
                        "value": round15(p.value()),
                        "angle": p.angle_text(),
                        "residual": round15(p.residual()),
                    })
                })
                .collect();
            write_json(out, &json!({ "n": n, "points": points }))?
        }
        _ => Records {
            header: vec!["branch", "ell", "angle", "value", "residual"],
            rows: set
                .points
                .iter()
                .map(|p| {
                    vec![p.branch.to_string(), p.ell.to_string(), p.angle_text(), g15(p.value()), g15(p.residual())]
                })
                .collect(),
        }
        .write(format, out)?,
    }
    Ok(EXIT_OK)
}

pub fn cmd_verify(n_max: u32, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    cmd_verify_with(n_max, &Verifier::default(), out, err)
}

/// `verify` with a caller-supplied verifier; tests use this to inject faults.
pub fn cmd_verify_with<F>(
    n_max: u32,
    verifier: &Verifier<F>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32>
where
    F: Fn(&SignPattern) -> CoreResult<ClosedForm> + Sync + Send,
{
    if let Some(code) = check_range(err, "NMAX", n_max, MAX_VERIFY_PERIOD)? {
        return Ok(code);
    }
    let outcomes = match verifier.run(n_max) {
        Ok(o) => o,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_FAILED);
        }
    };
    report_outcomes(&outcomes, out, err)
}

fn report_outcomes(outcomes: &[CheckOutcome], out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    for o in outcomes {
        writeln!(out, "{o}")?;
    }
    let failed: Vec<&CheckOutcome> = outcomes.iter().filter(|o| !o.passed).collect();
    if failed.is_empty() {
        writeln!(out, "all {} checks passed", outcomes.len())?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "{} of {} checks failed", failed.len(), outcomes.len())?;
        for o in failed {
            writeln!(err, "failed: n={} {}: {}", o.n, o.kind, o.detail)?;
        }
        Ok(EXIT_FAILED)
    }
}
