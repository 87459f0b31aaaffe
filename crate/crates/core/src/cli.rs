//! Command-line front end. `main` forwards to [`run`].
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 domain or numeric error, 4 no root found.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::calculus::{lucas_integral, Polynomial};
use crate::error::Error;
use crate::field::{Field, Rational};
use crate::functions::{find_pi_u, fn_value, FnKind, PiUOptions, DEFAULT_EPS};
use crate::harness::{self, SuiteConfig, DEFAULT_ORDER, DEFAULT_TRIALS};
use crate::lucas::{lucas_u, lucas_v, LucasParams, SeqCache};
use crate::scalar::Scalar;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_NO_ROOT: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "lucas-pantograph", version, about = "Lucas sequences, Lucas-Pantograph functions and identity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print {0..n} (or <0..n> with --companion).
    Seq(SeqArgs),
    /// Evaluate one function at one point.
    Eval(EvalArgs),
    /// Tabulate a function on a grid.
    Table(TableArgs),
    /// Run the identity suite.
    Verify(VerifyArgs),
    /// Find the first positive zero of sin(x,u).
    Piu(PiuArgs),
    /// Lucas integral of a polynomial over [a, b].
    Integrate(IntegrateArgs),
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value = "plain")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct SeqArgs {
    #[arg(long)]
    pub s: String,
    #[arg(long)]
    pub t: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub companion: bool,
    /// Use exact rationals; "p/q" and decimals are read exactly.
    #[arg(long)]
    pub exact: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct EvalArgs {
    #[arg(long = "fn")]
    pub kind: String,
    #[arg(long)]
    pub s: String,
    #[arg(long)]
    pub t: String,
    #[arg(long)]
    pub u: String,
    #[arg(long)]
    pub x: String,
    #[arg(long, default_value_t = 1e-12)]
    pub eps: f64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct TableArgs {
    #[arg(long = "fn")]
    pub kind: String,
    #[arg(long)]
    pub s: String,
    #[arg(long)]
    pub t: String,
    #[arg(long)]
    pub u: String,
    #[arg(long)]
    pub from: String,
    #[arg(long)]
    pub to: String,
    #[arg(long)]
    pub step: String,
    #[arg(long, default_value_t = 1e-12)]
    pub eps: f64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// `all`, a group name or an identity id; comma-separated lists allowed.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    pub order: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct PiuArgs {
    #[arg(long)]
    pub s: String,
    #[arg(long)]
    pub t: String,
    #[arg(long)]
    pub u: String,
    #[arg(long, default_value_t = 10.0)]
    pub xmax: f64,
    #[arg(long, default_value_t = 0.05)]
    pub step: f64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct IntegrateArgs {
    /// Coefficients `c0,c1,...`, constant first.
    #[arg(long, allow_hyphen_values = true)]
    pub poly: String,
    #[arg(long)]
    pub s: String,
    #[arg(long)]
    pub t: String,
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub b: String,
    #[arg(long, default_value_t = DEFAULT_EPS)]
    pub eps: f64,
    #[command(flatten)]
    pub common: Common,
}

/// A failed command: message and exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidArgument(_) | Error::UnknownIdentityId(_) => EXIT_USAGE,
            Error::NoRootFound { .. } => EXIT_NO_ROOT,
            _ => EXIT_DOMAIN,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Output rows, each an ordered set of named values.
struct Output {
    rows: Vec<Map<String, Value>>,
    /// A single record rather than a table.
    record: bool,
}

impl Output {
    fn record(value: Value) -> Self {
        Output {
            rows: vec![into_map(value)],
            record: true,
        }
    }

    fn table(rows: Vec<Value>) -> Self {
        Output {
            rows: rows.into_iter().map(into_map).collect(),
            record: false,
        }
    }
}

fn into_map(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        other => {
            let mut m = Map::new();
            m.insert("value".into(), other);
            m
        }
    }
}

/// Parse the arguments and run. Errors go to `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: &Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Seq(a) => emit(out, a.common.format, &seq(a)?),
        Command::Eval(a) => emit(out, a.common.format, &eval(a)?),
        Command::Table(a) => emit(out, a.common.format, &table(a)?),
        Command::Piu(a) => emit(out, a.common.format, &piu(a)?),
        Command::Integrate(a) => emit(out, a.common.format, &integrate(a)?),
        Command::Verify(a) => return verify(a, out),
    }
    .map_err(io_failure)?;
    Ok(EXIT_OK)
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_DOMAIN,
        message: format!("write failed: {e}"),
    }
}

fn real(text: &str, name: &str) -> Result<f64, Failure> {
    match Scalar::parse(text, false) {
        Ok(Scalar::Real(v)) => Ok(v),
        _ => Err(usage(format!("--{name}: cannot parse {text:?} as a number"))),
    }
}

fn exact(text: &str, name: &str) -> Result<Rational, Failure> {
    match Scalar::parse(text, true) {
        Ok(Scalar::Rational(v)) => Ok(v),
        _ => Err(usage(format!("--{name}: cannot parse {text:?} as a rational"))),
    }
}

fn float_params(s: &str, t: &str) -> Result<LucasParams<f64>, Failure> {
    Ok(LucasParams::new(real(s, "s")?, real(t, "t")?)?)
}

fn kind(text: &str) -> Result<FnKind, Failure> {
    text.parse::<FnKind>().map_err(|e| usage(e.to_string()))
}

/// Integers that fit stay JSON integers; other rationals become `"p/q"`.
fn rational_json(r: &Rational) -> Value {
    if r.is_integer() {
        if let Ok(v) = i64::try_from(r.to_integer()) {
            return json!(v);
        }
    }
    json!(r.to_string())
}

fn float_json(v: f64) -> Value {
    // NaN and infinities have no JSON form
    serde_json::Number::from_f64(v).map(Value::Number).unwrap_or(Value::Null)
}

fn seq(a: &SeqArgs) -> Result<Output, Failure> {
    let rows = if a.exact {
        let params = LucasParams::new(exact(&a.s, "s")?, exact(&a.t, "t")?)?;
        sequence(&params, a.n, a.companion, rational_json)
    } else {
        sequence(&float_params(&a.s, &a.t)?, a.n, a.companion, |v: &f64| float_json(*v))
    };
    Ok(Output::table(rows))
}

fn sequence<F: Field>(params: &LucasParams<F>, n: usize, companion: bool, show: impl Fn(&F) -> Value) -> Vec<Value> {
    // one pass of the recurrence, same values as lucas_u / lucas_v
    let (mut a, mut b) = if companion {
        (lucas_v(0, params), lucas_v(1, params))
    } else {
        (lucas_u(0, params), lucas_u(1, params))
    };
    let mut rows = Vec::with_capacity(n + 1);
    for k in 0..=n {
        rows.push(json!({"k": k, "value": show(&a)}));
        let next = params.s().clone() * b.clone() + params.t().clone() * a;
        a = b;
        b = next;
    }
    rows
}

fn eval(a: &EvalArgs) -> Result<Output, Failure> {
    let kind = kind(&a.kind)?;
    let params = float_params(&a.s, &a.t)?;
    let (u, x) = (real(&a.u, "u")?, real(&a.x, "x")?);
    let cache = SeqCache::new(params.clone());
    let e = fn_value(kind, x, u, &cache, a.eps)?;
    Ok(Output::record(json!({
        "fn": kind.name(),
        "s": params.s(),
        "t": params.t(),
        "u": u,
        "x": x,
        "value": float_json(e.value),
        "termsUsed": e.terms,
    })))
}

fn table(a: &TableArgs) -> Result<Output, Failure> {
    let kind = kind(&a.kind)?;
    let params = float_params(&a.s, &a.t)?;
    let u = real(&a.u, "u")?;
    let (from, to, step) = (real(&a.from, "from")?, real(&a.to, "to")?, real(&a.step, "step")?);
    if step.is_nan() || step <= 0.0 || from > to {
        return Err(usage("the grid needs step > 0 and from <= to"));
    }
    let count = ((to - from) / step + 1e-9).floor() as usize + 1;
    let cache = SeqCache::new(params);
    let rows = (0..count)
        .map(|i| {
            let x = from + i as f64 * step;
            match fn_value(kind, x, u, &cache, a.eps) {
                Ok(e) => json!({"x": x, "value": float_json(e.value), "diverged": false}),
                Err(_) => json!({"x": x, "value": null, "diverged": true}),
            }
        })
        .collect();
    Ok(Output::table(rows))
}

fn piu(a: &PiuArgs) -> Result<Output, Failure> {
    let params = float_params(&a.s, &a.t)?;
    let u = real(&a.u, "u")?;
    let opts = PiUOptions {
        step: a.step,
        x_max: a.xmax,
        ..PiUOptions::default()
    };
    let root = find_pi_u(&SeqCache::new(params), u, &opts)?;
    Ok(Output::record(json!({
        "s": root.s,
        "t": root.t,
        "u": root.u,
        "piU": float_json(root.value),
        "residual": float_json(root.residual),
    })))
}

fn integrate(a: &IntegrateArgs) -> Result<Output, Failure> {
    let coeffs = a
        .poly
        .split(',')
        .map(|c| real(c, "poly"))
        .collect::<Result<Vec<f64>, Failure>>()?;
    let params = float_params(&a.s, &a.t)?;
    let (lo, hi) = (real(&a.a, "a")?, real(&a.b, "b")?);
    let value = lucas_integral(&Polynomial::new(coeffs), lo, hi, &params, a.eps)?;
    Ok(Output::record(json!({
        "s": params.s(),
        "t": params.t(),
        "a": lo,
        "b": hi,
        "value": float_json(value),
    })))
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let selection: Vec<&str> = a.suite.split(',').map(str::trim).collect();
    let records = harness::select_many(&selection)?;
    let config = SuiteConfig {
        trials: a.trials,
        order: a.order,
        seed: a.seed,
    };
    let report = harness::run_records(&records, &config);
    match a.common.format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, &report).map_err(|e| io_failure(e.into()))?;
            writeln!(out).map_err(io_failure)?;
        }
        format => {
            let rows = report
                .identities
                .iter()
                .map(|r| {
                    json!({
                        "id": r.id,
                        "group": r.group,
                        "expect": r.expect,
                        "status": r.status,
                        "applicable": r.applicable,
                        "mismatches": r.mismatches,
                    })
                })
                .collect();
            emit(out, format, &Output::table(rows)).map_err(io_failure)?;
            if format == OutputFormat::Plain {
                writeln!(
                    out,
                    "passed {} refuted {} failed {} (seed {}, {} ms)",
                    report.passed, report.refuted, report.failed, report.seed, report.wall_time_ms
                )
                .map_err(io_failure)?;
            }
        }
    }
    Ok(if report.all_ok() { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn emit(out: &mut dyn Write, format: OutputFormat, output: &Output) -> std::io::Result<()> {
    match format {
        OutputFormat::Json => {
            let value = if output.record {
                Value::Object(output.rows[0].clone())
            } else {
                Value::Array(output.rows.iter().cloned().map(Value::Object).collect())
            };
            serde_json::to_writer_pretty(&mut *out, &value)?;
            writeln!(out)
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            if let Some(first) = output.rows.first() {
                w.write_record(first.keys())?;
            }
            for row in &output.rows {
                w.write_record(row.values().map(cell))?;
            }
            w.flush()
        }
        OutputFormat::Plain => {
            if output.record {
                for (k, v) in &output.rows[0] {
                    writeln!(out, "{k}: {}", cell(v))?;
                }
            } else {
                if let Some(first) = output.rows.first() {
                    let header: Vec<&str> = first.keys().map(String::as_str).collect();
                    writeln!(out, "{}", header.join("\t"))?;
                }
                for row in &output.rows {
                    let cells: Vec<String> = row.values().map(cell).collect();
                    writeln!(out, "{}", cells.join("\t"))?;
                }
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["lucas-pantograph"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn seq_plain_and_json() {
        let (code, text) = call(&["seq", "--s", "3", "--t", "-2", "--n", "6", "--exact"]);
        assert_eq!(code, 0);
        let values: Vec<&str> = text.lines().skip(1).map(|l| l.split('\t').nth(1).unwrap()).collect();
        assert_eq!(values, ["0", "1", "3", "7", "15", "31", "63"]);
        let (_, text) = call(&["seq", "--s", "1/2", "--t", "1", "--n", "2", "--exact", "--format", "json"]);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v[2]["value"], json!("1/2"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["seq", "--s", "0", "--t", "1", "--n", "3"]).0, EXIT_DOMAIN);
        assert_eq!(call(&["seq", "--s", "x", "--t", "1", "--n", "3"]).0, EXIT_USAGE);
        assert_eq!(call(&["eval", "--fn", "cot", "--s", "1", "--t", "1", "--u", "1", "--x", "0"]).0, EXIT_DOMAIN);
        assert_eq!(call(&["verify", "--suite", "nosuch"]).0, EXIT_USAGE);
        assert_eq!(call(&["table", "--fn", "sin", "--s", "1", "--t", "1", "--u", "1", "--from", "1", "--to", "0", "--step", "0.1"]).0, EXIT_USAGE);
        assert_eq!(call(&["bogus"]).0, EXIT_USAGE);
    }

    #[test]
    fn table_formats_agree() {
        let base = ["table", "--fn", "sin", "--s", "1", "--t", "1", "--u", "1", "--from", "0", "--to", "1", "--step", "0.1"];
        let (_, json_text) = call(&[&base[..], &["--format", "json"]].concat());
        let (_, csv_text) = call(&[&base[..], &["--format", "csv"]].concat());
        let rows: Vec<Value> = serde_json::from_str(&json_text).unwrap();
        assert_eq!(rows.len(), 11);
        assert_eq!(rows[0]["value"], json!(0.0));
        let mut reader = csv::Reader::from_reader(csv_text.as_bytes());
        let parsed: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
        assert_eq!(parsed.len(), rows.len());
        for (row, rec) in rows.iter().zip(&parsed) {
            assert_eq!(rec[0].parse::<f64>().unwrap(), row["x"].as_f64().unwrap());
            assert_eq!(rec[1].parse::<f64>().unwrap(), row["value"].as_f64().unwrap());
        }
    }
}
