//! The `fitzgerald` command line.
//!
//! Exit codes: 0 when the computation finished (the verdict is part of the
//! output), 2 for usage, parse and size errors, 3 when the input is outside
//! the criterion's hypotheses, 4 when an internal invariant fails.

pub mod parse;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::criterion::{
    require_irreducible, time_streams, FitzgeraldReport, FitzgeraldTester, GDivision,
    DEFAULT_DENSE_CAP,
};
use crate::enumeration::{
    classify_all_with, enumerate_monic, ClassificationRow, SweepOptions, DEFAULT_ENUMERATION_CAP,
};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, FqElem};
use crate::poly::Poly;
use crate::verify::{verify_sweep, VerifyOptions};

use parse::{parse_coeff_list, parse_poly};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_APPLICABLE: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

/// CSV header of `enumerate`.
pub const CSV_HEADER: [&str; 9] = [
    "poly",
    "irreducible",
    "applicable",
    "actual_count",
    "expected_count",
    "order_e",
    "fitz",
    "order",
    "agree",
];

#[derive(Debug, Parser)]
#[command(
    name = "fitzgerald",
    version,
    about = "Primitive-polynomial testing by counting nonzero terms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the criterion and its cross-checks on one polynomial.
    Test(TestArgs),
    /// Compute g(x) = (x^m - 1) / ((x - 1) p(x)) or just its nonzero count.
    Gpoly(GpolyArgs),
    /// List every monic polynomial of degree k, optionally classified.
    Enumerate(EnumerateArgs),
    /// Run the invariant suite over every polynomial of degree k.
    Verify(VerifyArgs),
    /// Time the division and trace routes to the coefficients of g.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct FieldArgs {
    /// Characteristic of the base field.
    #[arg(long)]
    p: u64,
    /// Extension degree of the base field over F_p.
    #[arg(long, default_value_t = 1)]
    ext: u32,
}

impl FieldArgs {
    fn field(&self) -> Result<FieldSpec> {
        match self.ext {
            0 => Err(Error::InvalidArgument("--ext must be at least 1".into())),
            1 => FieldSpec::prime(self.p),
            e => FieldSpec::extension(self.p, e),
        }
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct PolyInput {
    /// Polynomial expression such as "x^4+x+1" or "[0,1]*x^2+x+1".
    #[arg(long)]
    poly: Option<String>,
    /// Coefficient list c0,c1,...,ck, constant term first.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
}

impl PolyInput {
    fn poly(&self, field: &FieldSpec) -> Result<Poly> {
        match (&self.poly, &self.coeffs) {
            (Some(text), _) => parse_poly(text, field),
            (None, Some(text)) => parse_coeff_list(text, field),
            (None, None) => Err(Error::InvalidArgument("missing --poly or --coeffs".into())),
        }
    }
}

#[derive(Debug, Args)]
struct TestArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[command(flatten)]
    input: PolyInput,
    /// Print one JSON object instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct GpolyArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[command(flatten)]
    input: PolyInput,
    /// Stream the division and print only the nonzero count; ignores --cap.
    #[arg(long)]
    count_only: bool,
    #[arg(long)]
    json: bool,
    /// Largest number of coefficients of g to materialize.
    #[arg(long, default_value_t = DEFAULT_DENSE_CAP)]
    cap: u64,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    k: usize,
    /// Run the criterion and the order test on each irreducible.
    #[arg(long)]
    classify: bool,
    /// Write the rows to this file and the summary to stdout.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Largest number of candidates to enumerate.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: u64,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Largest stream to materialize for the stream comparison.
    #[arg(long, default_value_t = DEFAULT_DENSE_CAP)]
    cap: u64,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    k: usize,
    /// Polynomial to time; defaults to the first applicable irreducible of degree k.
    #[arg(long)]
    poly: Option<String>,
}

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NotApplicable(_)
        | Error::NotIrreducible
        | Error::NotMonic
        | Error::ZeroConstantTerm => EXIT_NOT_APPLICABLE,
        Error::NonzeroRemainder => EXIT_INVARIANT,
        _ => EXIT_USAGE,
    }
}

/// Runs the command line on `argv` (program name first) with the process's
/// standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Test(a) => cmd_test(a, out),
        Command::Gpoly(a) => cmd_gpoly(a, out),
        Command::Enumerate(a) => cmd_enumerate(a, out, err),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Bench(a) => cmd_bench(a, out),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

enum CliError {
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

type CliResult = std::result::Result<i32, CliError>;

fn elem_json(field: &FieldSpec, a: FqElem) -> Value {
    if field.is_prime_field() {
        json!(a.index())
    } else {
        json!(field.residues(a))
    }
}

fn modulus_json(field: &FieldSpec) -> Value {
    match field.modulus() {
        Some(m) => json!(m.to_string()),
        None => Value::Null,
    }
}

/// The JSON object printed by `test --json`.
pub fn report_json(p: &Poly, report: &FitzgeraldReport) -> Value {
    let f = p.field();
    json!({
        "poly": p.to_string(),
        "p": f.p(),
        "ext": f.e(),
        "q": f.q(),
        "modulus": modulus_json(f),
        "k": report.k,
        "m": report.m,
        "expected_count": report.expected_count,
        "actual_count": report.actual_count,
        "fitzgerald_primitive": report.fitzgerald_primitive,
        "order_e": report.order_e,
        "order_primitive": report.order_primitive,
        "agree": report.agree,
        "trace_of_beta": report.trace_of_beta.map(|t| elem_json(f, t)),
        "lagrange_ok": report.lagrange_ok,
    })
}

fn verdict(primitive: bool) -> &'static str {
    if primitive {
        "primitive"
    } else {
        "not primitive"
    }
}

fn write_field_line(out: &mut dyn Write, field: &FieldSpec) -> io::Result<()> {
    writeln!(out, "field: {field}")
}

fn cmd_test(a: &TestArgs, out: &mut dyn Write) -> CliResult {
    let field = a.field.field()?;
    let p = a.input.poly(&field)?;
    let report = crate::criterion::fitzgerald_test(&p)?;
    if a.json {
        writeln!(out, "{}", report_json(&p, &report))?;
    } else {
        writeln!(out, "poly: {p}")?;
        write_field_line(out, &field)?;
        writeln!(out, "k={} m={}", report.k, report.m)?;
        writeln!(
            out,
            "nonzero terms of g: {} (primitive needs {})",
            report.actual_count, report.expected_count
        )?;
        writeln!(out, "criterion: {}", verdict(report.fitzgerald_primitive))?;
        if let (Some(e), Some(prim)) = (report.order_e, report.order_primitive) {
            writeln!(out, "order of x: {e} ({})", verdict(prim))?;
        }
        if let Some(agree) = report.agree {
            writeln!(out, "agree: {agree}")?;
        }
        if let (Some(t), Some(ok)) = (report.trace_of_beta, report.lagrange_ok) {
            writeln!(
                out,
                "trace of beta: {} (1/q(1) check {})",
                field.format_elem(t),
                ok
            )?;
        }
    }
    let code = if report.agree == Some(false) || report.lagrange_ok == Some(false) {
        EXIT_INVARIANT
    } else {
        EXIT_OK
    };
    Ok(code)
}

fn cmd_gpoly(a: &GpolyArgs, out: &mut dyn Write) -> CliResult {
    let field = a.field.field()?;
    let p = a.input.poly(&field)?;
    let division = GDivision::new(&p)?;
    require_irreducible(&p)?;
    let k = p.degree().unwrap_or(0);
    let expected = FitzgeraldTester::count_only(&field, k)?.expected_count();
    let mut body = json!({
        "poly": p.to_string(),
        "p": field.p(),
        "ext": field.e(),
        "q": field.q(),
        "modulus": modulus_json(&field),
        "k": k,
        "m": division.m(),
        "window_len": division.window_len(),
        "expected_count": expected,
    });
    let (count, g) = if a.count_only {
        (division.count_nonzero()?, None)
    } else {
        let g = division.quotient(a.cap)?;
        (g.nonzero_count() as u64, Some(g))
    };
    body["nonzero_count"] = json!(count);
    body["fitzgerald_primitive"] = json!(count == expected);
    if a.json {
        if let Some(g) = &g {
            body["g"] = json!(g.to_string());
            body["degree"] = json!(g.degree());
        }
        writeln!(out, "{body}")?;
    } else {
        writeln!(out, "poly: {p}")?;
        write_field_line(out, &field)?;
        writeln!(
            out,
            "m={} window_len={}",
            division.m(),
            division.window_len()
        )?;
        if let Some(g) = &g {
            writeln!(out, "g: {g}")?;
        }
        writeln!(out, "nonzero terms: {count} (primitive needs {expected})")?;
        writeln!(out, "criterion: {}", verdict(count == expected))?;
    }
    Ok(EXIT_OK)
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn csv_record(row: &ClassificationRow) -> [String; 9] {
    let r = row.report.as_ref();
    [
        row.poly.to_string(),
        row.irreducible.to_string(),
        row.applicable.to_string(),
        opt(r.map(|r| r.actual_count)),
        opt(r.map(|r| r.expected_count)),
        opt(row.order_e),
        opt(r.map(|r| r.fitzgerald_primitive)),
        opt(row.order_primitive),
        opt(r.and_then(|r| r.agree)),
    ]
}

/// Writes `rows` as CSV with [`CSV_HEADER`].
pub fn write_csv(
    rows: &[ClassificationRow],
    sink: impl Write,
) -> std::result::Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        w.write_record(csv_record(row))?;
    }
    w.flush()?;
    Ok(())
}

fn cmd_enumerate(a: &EnumerateArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let field = a.field.field()?;
    let opts = SweepOptions {
        classify: a.classify,
        jobs: a.jobs.max(1),
        cap: a.cap,
    };
    let (rows, summary) = classify_all_with(&field, a.k, opts)?;
    match &a.csv {
        Some(path) => {
            write_csv(&rows, File::create(path)?)?;
            write_field_line(out, &field)?;
            writeln!(out, "{summary}")?;
        }
        None => {
            write_csv(&rows, &mut *out)?;
            writeln!(err, "{summary}")?;
        }
    }
    Ok(if summary.all_agree() {
        EXIT_OK
    } else {
        EXIT_INVARIANT
    })
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CliResult {
    let field = a.field.field()?;
    let opts = VerifyOptions {
        jobs: a.jobs.max(1),
        dense_cap: a.cap,
        ..Default::default()
    };
    let report = verify_sweep(&field, a.k, opts)?;
    write_field_line(out, &field)?;
    for prop in &report.properties {
        writeln!(out, "{prop}")?;
    }
    writeln!(out, "{}", report.summary)?;
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_INVARIANT
    })
}

/// First monic irreducible of degree `k` that the criterion accepts.
pub fn first_applicable_irreducible(field: &FieldSpec, k: usize) -> Result<Poly> {
    for p in enumerate_monic(field, k)? {
        if crate::criterion::check_applicable(&p).is_ok() && p.is_irreducible()? {
            return Ok(p);
        }
    }
    Err(Error::InvalidArgument(format!(
        "no applicable irreducible of degree {k} over {field}"
    )))
}

fn cmd_bench(a: &BenchArgs, out: &mut dyn Write) -> CliResult {
    let field = a.field.field()?;
    let p = match &a.poly {
        Some(text) => parse_poly(text, &field)?,
        None => first_applicable_irreducible(&field, a.k)?,
    };
    if p.degree() != Some(a.k) {
        return Err(Error::InvalidArgument(format!("{p} does not have degree {}", a.k)).into());
    }
    require_irreducible(&p)?;
    let t = time_streams(&p)?;
    writeln!(out, "poly: {p}")?;
    write_field_line(out, &field)?;
    writeln!(
        out,
        "division: count={} secs={:.6}",
        t.division_count, t.division_secs
    )?;
    writeln!(
        out,
        "trace:    count={} secs={:.6}",
        t.trace_count, t.trace_secs
    )?;
    if t.division_secs > 0.0 {
        writeln!(
            out,
            "trace/division time ratio: {:.3}",
            t.trace_secs / t.division_secs
        )?;
    }
    Ok(if t.division_count == t.trace_count {
        EXIT_OK
    } else {
        EXIT_INVARIANT
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("fitzgerald").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn test_json_fields() {
        let (code, out, _) = run_capture(&["test", "--p", "2", "--poly", "x^4+x+1", "--json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["actual_count"], 7);
        assert_eq!(v["expected_count"], 7);
        assert_eq!(v["fitzgerald_primitive"], true);
        assert_eq!(v["order_e"], 15);
        assert_eq!(v["agree"], true);
        assert_eq!(v["trace_of_beta"], 1);
        assert_eq!(v["modulus"], Value::Null);
    }

    #[test]
    fn not_primitive_is_still_success() {
        let (code, out, _) = run_capture(&["test", "--p", "2", "--coeffs", "1,1,1,1,1", "--json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["actual_count"], 3);
        assert_eq!(v["fitzgerald_primitive"], false);
        assert_eq!(v["order_e"], 5);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_capture(&["test", "--p", "2", "--poly", "x+1"]).0, 3);
        let (code, _, err) = run_capture(&["test", "--p", "2", "--poly", "x^3+x"]);
        assert_eq!(code, 3);
        assert!(err.contains("cannot be primitive"), "{err}");
        assert_eq!(
            run_capture(&["test", "--p", "2", "--poly", "x^4+x^2+1"]).0,
            3
        );
        assert_eq!(run_capture(&["test", "--p", "2", "--poly", "x^4+"]).0, 2);
        assert_eq!(run_capture(&["test", "--p", "4", "--poly", "x+1"]).0, 2);
        assert_eq!(run_capture(&["frobnicate"]).0, 2);
        assert_eq!(run_capture(&["test", "--p", "2"]).0, 2);
        assert_eq!(run_capture(&["--help"]).0, 0);
    }

    #[test]
    fn extension_output_shows_modulus() {
        let (code, out, _) = run_capture(&[
            "test",
            "--p",
            "2",
            "--ext",
            "2",
            "--poly",
            "x^2+x+[0,1]",
            "--json",
        ]);
        assert_eq!(code, 0, "{out}");
        let v: Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["q"], 4);
        assert_eq!(v["modulus"], "x^2+x+1");
        assert!(v["trace_of_beta"].is_array());
    }

    #[test]
    fn gpoly_dense_and_streaming() {
        let (code, out, _) =
            run_capture(&["gpoly", "--p", "2", "--poly", "x^4+x^3+x^2+x+1", "--json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["g"], "x^10+x^5+1");
        assert_eq!(v["nonzero_count"], 3);
        let (code, out, _) = run_capture(&[
            "gpoly",
            "--p",
            "2",
            "--poly",
            "x^4+x^3+x^2+x+1",
            "--count-only",
            "--cap",
            "0",
            "--json",
        ]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["nonzero_count"], 3);
        assert_eq!(v["window_len"], 5);
        assert!(v.get("g").is_none());
        assert_eq!(
            run_capture(&["gpoly", "--p", "2", "--poly", "x^4+x+1", "--cap", "3"]).0,
            2
        );
    }

    #[test]
    fn enumerate_csv_and_summary() {
        let (code, out, err) = run_capture(&["enumerate", "--p", "2", "--k", "4", "--classify"]);
        assert_eq!(code, 0);
        let mut lines = out.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER.join(","));
        assert_eq!(lines.count(), 16);
        assert!(err.contains("classified=3"), "{err}");
        assert!(err.contains("primitive=2 expected=2"), "{err}");
        let (_, again, _) = run_capture(&[
            "enumerate",
            "--p",
            "2",
            "--k",
            "4",
            "--classify",
            "--jobs",
            "3",
        ]);
        assert_eq!(out, again);
    }

    #[test]
    fn verify_and_bench() {
        let (code, out, _) = run_capture(&["verify", "--p", "3", "--k", "3"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("PASS stream_equality"));
        assert!(!out.contains("FAIL"));
        let (code, out, _) = run_capture(&["bench", "--p", "2", "--k", "6"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("division: count="));
    }
}
