use std::fs;
use std::io::{self, Read, Write};
use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use one_radical::verify::numeric::format_scientific;
use one_radical::verify::{numeric_cross_check, verify_certificate, CorpusLine, InstanceSampler, DEFAULT_DIGITS};
use one_radical::{Certificate, QPoly};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::parse::{parse_coeffs, parse_poly, ParseError};
use crate::report::{exit, DecisionReport};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] one_radical::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Input(String),
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io { path: path.to_path_buf(), source }
}

#[derive(Debug, Parser)]
#[command(name = "one-radical", version, about = "Decide whether a polynomial of degree ≤ 4 has a root in Q[t^(1/n)]")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide a single polynomial.
    Decide(DecideArgs),
    /// Decide one polynomial (or corpus JSON line) per input line.
    Batch(BatchArgs),
    /// Generate a corpus of instances with known 1-radical roots.
    Generate(GenerateArgs),
    /// Check a certificate file against a polynomial.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Degree {
    #[value(name = "3")]
    Cubic,
    #[value(name = "4")]
    Quartic,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct PolyInput {
    /// Expression such as "x^3 + 6x - 2".
    #[arg(long, allow_hyphen_values = true)]
    pub poly: Option<String>,
    /// Coefficients, highest degree first: "1,0,6,-2".
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: Option<String>,
}

impl PolyInput {
    fn parse(&self) -> Result<QPoly, ParseError> {
        match (&self.poly, &self.coeffs) {
            (Some(p), _) => parse_poly(p),
            (None, Some(c)) => parse_coeffs(c),
            (None, None) => unreachable!("clap enforces one input"),
        }
    }
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Emit JSON.
    #[arg(long, conflicts_with = "text")]
    pub json: bool,
    /// Emit human-readable text (default).
    #[arg(long)]
    pub text: bool,
    /// Precision of the numeric cross-check, in decimal digits.
    #[arg(long, default_value_t = DEFAULT_DIGITS, value_parser = clap::value_parser!(u32).range(1..=10_000))]
    pub verify_digits: u32,
    /// Omit wall-clock timing from reports.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Args)]
pub struct DecideArgs {
    #[command(flatten)]
    pub input: PolyInput,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct BatchArgs {
    /// Input file, or "-" for stdin.
    #[arg(long = "in")]
    pub input: PathBuf,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub degree: Degree,
    #[arg(long)]
    pub count: u64,
    #[arg(long)]
    pub seed: u64,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: PolyInput,
    /// JSON certificate: a bare certificate, a corpus line or a decision report.
    #[arg(long)]
    pub cert: PathBuf,
    #[arg(long, default_value_t = DEFAULT_DIGITS, value_parser = clap::value_parser!(u32).range(1..=10_000))]
    pub verify_digits: u32,
    #[arg(long)]
    pub json: bool,
}

/// Runs a parsed command line, returning the exit status. Errors are
/// reported on `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Decide(a) => run_decide(&a, out),
        Command::Batch(a) => run_batch(&a, out, err),
        Command::Generate(a) => run_generate(&a, out, err),
        Command::Verify(a) => run_verify(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit::ERROR
        }
    }
}

fn write_out(out: &mut dyn Write, s: &str) -> Result<(), CliError> {
    out.write_all(s.as_bytes()).map_err(io_err(Path::new("<stdout>")))
}

fn finish(mut report: DecisionReport, o: &OutputArgs) -> DecisionReport {
    if o.no_timing {
        report.timing = None;
    }
    report
}

pub fn run_decide(a: &DecideArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let f = a.input.parse()?;
    let report = finish(DecisionReport::build(&f, a.output.verify_digits)?, &a.output);
    if a.output.json {
        write_out(out, &format!("{}\n", report.to_json()))?;
    } else {
        write_out(out, &report.to_text())?;
    }
    Ok(report.exit_code())
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err(path))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io_err(path))
    }
}

fn parse_batch_line(line: &str) -> Result<QPoly, String> {
    if line.starts_with('{') {
        CorpusLine::from_json(line).map(|c| c.polynomial()).map_err(|e| e.to_string())
    } else {
        parse_poly(line).map_err(|e| e.to_string())
    }
}

#[derive(Serialize)]
struct BatchEntry<'a> {
    line: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<&'a DecisionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<&'a str>,
}

#[derive(Debug, Default, Serialize, PartialEq, Eq)]
pub struct BatchSummary {
    pub total: usize,
    pub rational_root: usize,
    pub one_radical: usize,
    pub not_one_solvable: usize,
    pub unknown: usize,
    pub errors: usize,
}

/// Decides every non-blank, non-`#` line. Lines run in parallel; output
/// keeps input order and a failing line never affects the others.
pub fn run_batch(a: &BatchArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let text = read_input(&a.input)?;
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let digits = a.output.verify_digits;
    let results: Vec<(usize, Result<DecisionReport, String>)> = lines
        .par_iter()
        .map(|&(n, line)| {
            let r = panic::catch_unwind(AssertUnwindSafe(|| {
                let f = parse_batch_line(line)?;
                DecisionReport::build(&f, digits).map_err(|e| e.to_string())
            }))
            .unwrap_or_else(|_| Err("internal panic while deciding this line".into()));
            (n, r.map(|rep| finish(rep, &a.output)))
        })
        .collect();

    let mut summary = BatchSummary { total: results.len(), ..Default::default() };
    for (n, r) in &results {
        match r {
            Ok(rep) => {
                match rep.verdict.as_str() {
                    "rational_root" => summary.rational_root += 1,
                    "one_radical" => summary.one_radical += 1,
                    "not_one_solvable" => summary.not_one_solvable += 1,
                    _ => summary.unknown += 1,
                }
                if a.output.json {
                    let e = BatchEntry { line: *n, report: Some(rep), error: None };
                    write_out(out, &format!("{}\n", serde_json::to_string(&e).expect("serializes")))?;
                } else {
                    let root = rep.root.as_deref().map(|r| format!("  {r}")).unwrap_or_default();
                    write_out(out, &format!("{n}: {} -> {}{root}\n", rep.input, rep.verdict))?;
                }
            }
            Err(msg) => {
                summary.errors += 1;
                let _ = writeln!(err, "line {n}: {msg}");
                if a.output.json {
                    let e = BatchEntry { line: *n, report: None, error: Some(msg) };
                    write_out(out, &format!("{}\n", serde_json::to_string(&e).expect("serializes")))?;
                } else {
                    write_out(out, &format!("{n}: error: {msg}\n"))?;
                }
            }
        }
    }
    if a.output.json {
        let s = serde_json::json!({ "summary": summary });
        write_out(out, &format!("{s}\n"))?;
    } else {
        write_out(
            out,
            &format!(
                "total {}: rational_root {}, one_radical {}, not_one_solvable {}, unknown {}, errors {}\n",
                summary.total,
                summary.rational_root,
                summary.one_radical,
                summary.not_one_solvable,
                summary.unknown,
                summary.errors
            ),
        )?;
    }
    Ok(if summary.errors > 0 { exit::ERROR } else { exit::SOLVABLE })
}

pub fn run_generate(a: &GenerateArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let degree = match a.degree {
        Degree::Cubic => 3,
        Degree::Quartic => 4,
    };
    let mut sampler = InstanceSampler::new(a.seed);
    let mut body = String::new();
    for i in 0..a.count {
        let inst = sampler.next_instance(degree)?;
        body.push_str(&CorpusLine::from_instance(&inst, a.seed, i).to_json());
        body.push('\n');
    }
    match &a.out {
        Some(path) => fs::write(path, body).map_err(io_err(path))?,
        None => write_out(out, &body)?,
    }
    let stats = sampler.stats();
    let _ = writeln!(err, "generated {} instances ({} degenerate samples rejected)", stats.accepted, stats.rejected);
    Ok(exit::SOLVABLE)
}

fn load_certificate(path: &Path) -> Result<Certificate, CliError> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    let value: serde_json::Value =
        serde_json::from_str(text.trim()).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let value = match value.get("certificate") {
        Some(inner) => inner.clone(),
        None => value,
    };
    serde_json::from_value(value).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct VerifyOutput {
    exact: bool,
    numeric_residual: String,
    digits: u32,
}

/// Exit 0 when the certificate is an exact root, 1 otherwise.
pub fn run_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let f = a.input.parse()?;
    let cert = load_certificate(&a.cert)?;
    let exact = verify_certificate(&f, &cert)?;
    let residual = format_scientific(&numeric_cross_check(&f, &cert, a.verify_digits));
    if a.json {
        let v = VerifyOutput { exact, numeric_residual: residual, digits: a.verify_digits };
        write_out(out, &format!("{}\n", serde_json::to_string(&v).expect("serializes")))?;
    } else {
        write_out(
            out,
            &format!("root:     {cert}\nexact:    {exact}\nnumeric:  {residual} ({} digits)\n", a.verify_digits),
        )?;
    }
    Ok(if exact { exit::SOLVABLE } else { exit::NOT_SOLVABLE })
}
