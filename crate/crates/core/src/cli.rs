//! The `qforms` command line: `expand`, `mu`, `rep` and `verify`.
//!
//! Exit codes: 0 success, 1 a verification or oracle check failed, 2 usage error.

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::double::{z_double, ParityPair};
use crate::eisenstein::{t8, theta_unit, Parity, SeriesKey};
use crate::error::{Error, Result};
use crate::mu::{r8s_table, solve_mu, t8s_table};
use crate::qseries::QSeries;
use crate::report::VerificationReport;
use crate::verify::oracle::{r_oracle, t_oracle};
use crate::verify::suite::{all_passed, run_suite, Suite, SuiteConfig};
use crate::zeta_ext::ExtScalar;

#[derive(Parser, Debug)]
#[command(name = "qforms", version, about = "Exact q-series for level-2 Eisenstein series, sums of squares and double shuffle checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dump the coefficients of a single or double series.
    Expand(ExpandArgs),
    /// Solve for the coefficients μ_s(l).
    Mu(MuArgs),
    /// Tabulate r_{8s}(n) or t_{8s}(n) from the closed formulas.
    Rep(RepArgs),
    /// Run identity checks.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("what").required(true).args(["series", "double"]))]
pub struct ExpandArgs {
    /// One of: g, g2tau, giinf, g0, phi, f-odd, f-even, fbar-odd, fbar-even, theta, triangular, t8
    #[arg(long)]
    pub series: Option<String>,
    #[arg(long)]
    pub k: Option<u32>,
    /// eo, oe or oo
    #[arg(long, requires_all = ["r", "s"])]
    pub double: Option<String>,
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long)]
    pub s: Option<u32>,
    #[arg(long)]
    pub order: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug)]
pub struct MuArgs {
    #[arg(long)]
    pub s: u32,
    /// Defaults to 2s + 10.
    #[arg(long)]
    pub verify_order: Option<usize>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RepKind {
    Squares,
    Triangular,
}

#[derive(Args, Debug)]
pub struct RepArgs {
    #[arg(long, value_enum)]
    pub kind: RepKind,
    #[arg(long)]
    pub s: u32,
    #[arg(long)]
    pub n_max: u64,
    /// Add an `oracle` column from brute-force convolution; exit 1 on any mismatch.
    #[arg(long)]
    pub check: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = parse_suite)]
    pub suite: Suite,
    #[arg(long, default_value_t = 30)]
    pub order: usize,
    /// Override the tolerance of every numeric check.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Include wall-clock time per report (output is then not reproducible).
    #[arg(long)]
    pub timing: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

fn parse_suite(s: &str) -> std::result::Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Output of one command and whether its checks passed.
struct Outcome {
    text: String,
    ok: bool,
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout(), &mut std::io::stderr())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let (result, target) = match &cli.command {
        Command::Expand(a) => (expand(a), &a.out),
        Command::Mu(a) => (mu(a), &a.out),
        Command::Rep(a) => (rep(a), &a.out),
        Command::Verify(a) => (verify(a), &a.out),
    };
    match result {
        Ok(outcome) => {
            let written = match &target.output {
                Some(path) => std::fs::write(path, &outcome.text),
                None => out.write_all(outcome.text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: cannot write output: {e}");
                return 2;
            }
            if outcome.ok {
                0
            } else {
                1
            }
        }
        Err(e @ (Error::VerificationFailed { .. } | Error::NonIntegerResult { .. } | Error::RankDeficient { .. } | Error::Inconsistent { .. })) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}\n\n{}", usage_of(&cli.command));
            2
        }
    }
}

fn usage_of(cmd: &Command) -> String {
    use clap::CommandFactory;
    let name = match cmd {
        Command::Expand(_) => "expand",
        Command::Mu(_) => "mu",
        Command::Rep(_) => "rep",
        Command::Verify(_) => "verify",
    };
    let mut root = Cli::command();
    root.find_subcommand_mut(name)
        .map(|c| c.render_usage().to_string())
        .unwrap_or_default()
}

fn need_k(name: &str, k: Option<u32>) -> Result<u32> {
    // f̄ series start at k = 0, the others at k = 1
    let least = if name.starts_with("fbar") { 0 } else { 1 };
    k.filter(|&k| k >= least)
        .ok_or_else(|| Error::InvalidArgument(format!("--series {name} needs --k >= {least}")))
}

/// Builds a named single series.
pub fn series_by_name(name: &str, k: Option<u32>, order: usize) -> Result<QSeries<ExtScalar>> {
    let key = |f: fn(u32) -> SeriesKey| need_k(name, k).map(f);
    let built = match name {
        "theta" => return Ok(theta_unit(order).to_ext()),
        "triangular" => return Ok(crate::eisenstein::triangular_unit(order).to_ext()),
        "t8" => return Ok(t8(order).to_ext()),
        "g" => key(SeriesKey::G)?,
        "g2tau" => key(SeriesKey::G2Tau)?,
        "giinf" => key(SeriesKey::GIinf)?,
        "g0" => key(SeriesKey::G0)?,
        "phi" => key(SeriesKey::Phi)?,
        "f-odd" => key(|k| SeriesKey::F(Parity::Odd, k))?,
        "f-even" => key(|k| SeriesKey::F(Parity::Even, k))?,
        "fbar-odd" => key(|k| SeriesKey::FBar(Parity::Odd, k))?,
        "fbar-even" => key(|k| SeriesKey::FBar(Parity::Even, k))?,
        _ => {
            return Err(Error::InvalidArgument(format!(
                "unknown series {name:?}; expected g|g2tau|giinf|g0|phi|f-odd|f-even|fbar-odd|fbar-even|theta|triangular|t8"
            )))
        }
    };
    Ok(built.build(order))
}

fn csv_quote(v: impl Display) -> String {
    format!("\"{}\"", v.to_string().replace('"', "\"\""))
}

/// `[{"n": 0, "coeff": "..."}, ...]`
pub fn series_to_json(series: &QSeries<ExtScalar>) -> Value {
    Value::Array(
        series
            .coeffs()
            .iter()
            .enumerate()
            .map(|(n, c)| json!({"n": n, "coeff": c.to_string()}))
            .collect(),
    )
}

/// Inverse of [`series_to_json`]; the order is the largest `n` present.
pub fn series_from_json(v: &Value) -> Result<QSeries<ExtScalar>> {
    let rows = v.as_array().ok_or_else(|| Error::Parse("expected a JSON array".into()))?;
    let mut coeffs = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let n = row["n"].as_u64().ok_or_else(|| Error::Parse(format!("row {i}: missing n")))?;
        if n as usize != i {
            return Err(Error::Parse(format!("row {i}: expected n = {i}, got {n}")));
        }
        let c = row["coeff"].as_str().ok_or_else(|| Error::Parse(format!("row {i}: missing coeff")))?;
        coeffs.push(c.parse::<ExtScalar>()?);
    }
    if coeffs.is_empty() {
        return Err(Error::Parse("empty series".into()));
    }
    let order = coeffs.len() - 1;
    Ok(QSeries::new(coeffs, order))
}

pub fn series_to_csv(series: &QSeries<ExtScalar>) -> String {
    let mut s = String::from("n,value\n");
    for (n, c) in series.coeffs().iter().enumerate() {
        s += &format!("{n},{}\n", csv_quote(c));
    }
    s
}

fn render_series(series: &QSeries<ExtScalar>, format: Format) -> String {
    match format {
        Format::Json => pretty_json(&series_to_json(series)),
        Format::Csv => series_to_csv(series),
        Format::Pretty => {
            let mut s = String::new();
            for (n, c) in series.coeffs().iter().enumerate() {
                s += &format!("{n:>5}  {c}\n");
            }
            s
        }
    }
}

fn pretty_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn expand(a: &ExpandArgs) -> Result<Outcome> {
    let series = match (&a.series, &a.double) {
        (Some(name), None) => series_by_name(name, a.k, a.order)?,
        (None, Some(pp)) => {
            let pp: ParityPair = pp.parse()?;
            let (r, s) = (a.r.unwrap_or(0), a.s.unwrap_or(0));
            crate::double::DoubleIndex::new(r, s)?;
            z_double(pp, r, s, a.order)
        }
        _ => return Err(Error::InvalidArgument("give exactly one of --series or --double".into())),
    };
    Ok(Outcome {
        text: render_series(&series, a.out.format),
        ok: true,
    })
}

fn mu(a: &MuArgs) -> Result<Outcome> {
    let order = a.verify_order.unwrap_or(2 * a.s as usize + 10);
    let table = solve_mu(a.s, order)?;
    let text = match a.out.format {
        Format::Json => pretty_json(&table.to_json()),
        Format::Csv => table.to_csv(),
        Format::Pretty => {
            let mut s = format!("s = {}, rows = {}, rank = {}, verified to q^{}\n", table.s, table.system_rows, table.rank, table.verified_order);
            for (l, v) in &table.mu {
                s += &format!("mu_{}({l}) = {v}\n", table.s);
            }
            s
        }
    };
    Ok(Outcome { text, ok: true })
}

fn rep(a: &RepArgs) -> Result<Outcome> {
    let table = solve_mu(a.s, 2 * a.s as usize + 10)?;
    let (counts, oracle): (Vec<BigInt>, Option<Vec<BigInt>>) = match a.kind {
        RepKind::Squares => (r8s_table(a.s, a.n_max, &table)?, a.check.then(|| r_oracle(8 * a.s, a.n_max))),
        RepKind::Triangular => (t8s_table(a.s, a.n_max, &table)?, a.check.then(|| t_oracle(8 * a.s, a.n_max))),
    };
    let ok = oracle.as_ref().map_or(true, |o| o == &counts);
    let text = match a.out.format {
        Format::Json => pretty_json(&Value::Array(
            counts
                .iter()
                .enumerate()
                .map(|(n, c)| {
                    let mut row = json!({"n": n, "count": c.to_string()});
                    if let Some(o) = &oracle {
                        row["oracle"] = json!(o[n].to_string());
                    }
                    row
                })
                .collect(),
        )),
        Format::Csv => {
            let mut s = String::from(if oracle.is_some() { "n,count,oracle\n" } else { "n,count\n" });
            for (n, c) in counts.iter().enumerate() {
                s += &format!("{n},{}", csv_quote(c));
                if let Some(o) = &oracle {
                    s += &format!(",{}", csv_quote(&o[n]));
                }
                s.push('\n');
            }
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            for (n, c) in counts.iter().enumerate() {
                s += &format!("{n:>5}  {c}");
                if let Some(o) = &oracle {
                    s += if &o[n] == c { "  ok" } else { "  MISMATCH" };
                }
                s.push('\n');
            }
            s
        }
    };
    Ok(Outcome { text, ok })
}

fn verify(a: &VerifyArgs) -> Result<Outcome> {
    let cfg = SuiteConfig {
        order: a.order,
        tol: a.tol,
        ..SuiteConfig::default()
    };
    let mut reports = run_suite(a.suite, &cfg);
    if !a.timing {
        reports.iter_mut().for_each(|r| r.elapsed_ms = None);
    }
    let ok = all_passed(&reports);
    Ok(Outcome {
        text: render_reports(&reports, a.out.format),
        ok,
    })
}

fn render_reports(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Json => pretty_json(&serde_json::to_value(reports).expect("reports serialize")),
        Format::Csv => {
            let mut s = String::from("identity,status,parameters,convention,detail\n");
            for r in reports {
                let detail = match (&r.first_mismatch, &r.numeric) {
                    (Some(m), _) => format!("{} at q^{}: {} != {}", m.equality, m.exponent, m.lhs, m.rhs),
                    (None, Some(w)) => format!("rel_err={:.3e} tol={:.1e}", w.relative_error, w.tolerance),
                    _ => r.note.clone().unwrap_or_default(),
                };
                s += &format!(
                    "{},{},{},{},{}\n",
                    r.identity,
                    serde_json::to_value(r.status).expect("status").as_str().unwrap_or(""),
                    csv_quote(serde_json::to_string(&r.parameters).expect("params")),
                    r.convention.map(|c| c.to_string()).unwrap_or_default(),
                    csv_quote(detail)
                );
            }
            s
        }
        Format::Pretty => {
            let mut s: String = reports.iter().map(|r| r.summary() + "\n").collect();
            let failed = reports.iter().filter(|r| !r.passed()).count();
            s += &format!("{} checks, {} failed\n", reports.len(), failed);
            s
        }
    }
}
