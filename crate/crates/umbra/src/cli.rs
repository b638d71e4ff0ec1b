//! Command-line front end: every pipeline stage as a subcommand with
//! machine-readable JSON or CSV output.
//!
//! Exit status is 0 on success or pass, 1 when a verification or identity
//! check fails, and 2 on usage errors. Reports are deterministic: the same
//! invocation produces byte-identical output.

use std::env;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num::{Signed, Zero};
use serde::Serialize;

use crate::algebra::LatticeFunction;
use crate::euler::{self, DiscreteEulerEquation, EulerProblem};
use crate::identities::{default_samples, run_identity_suite, IdentityReport};
use crate::operator::{DeltaKind, DeltaSeries};
use crate::rational::{format_rational, parse_rational, Rat};
use crate::DEFAULT_TRUNCATION_BOUND;

const CSV_NOTES: &str = "\
CSV layouts (fixed column orders; '#'-prefixed metadata lines precede the header):
  basic-polys  n,c0,...,cN        one row per polynomial, ascending degree,
                                  padded with 0/1 to the requested degree
  discretize   n,c_nm2,c_nm1,c_nn one row per recurrence index
  solve        n,u[r1],u[r2],...  one basis column per free index, ascending
  verify       n,residual         residuals for n = 2..n_max
  limit-study  h,error,ratio      ratio = previous error / current error
  identities   identity,range,pass,counterexample

All rationals are rendered canonically as p/q in lowest terms with q > 0.
The environment variable UMBRA_TRUNCATION_BOUND (default 64) caps the series
degree accepted by basic-polys.";

/// Exact umbral calculus toolkit.
#[derive(Debug, Parser)]
#[command(
    name = "umbra",
    version,
    about = "Exact finite-operator calculus and the discrete Euler equation",
    after_long_help = CSV_NOTES
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Write the report to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate the basic polynomial sequence of a delta operator.
    BasicPolys {
        /// Delta operator kind.
        #[arg(long, value_enum)]
        op: OpArg,
        /// Lattice spacing as p/q or an integer.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        h: String,
        /// Highest polynomial index to generate.
        #[arg(long)]
        degree: usize,
    },
    /// Emit the three-term recurrence coefficients and the indicial-root
    /// classification for parameters (a, b).
    Discretize {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Highest recurrence index tabulated.
        #[arg(long)]
        n_max: usize,
    },
    /// Solve the recurrence exactly, one basis element per nonnegative
    /// integer indicial root.
    Solve {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Highest lattice index computed.
        #[arg(long)]
        n_max: usize,
    },
    /// Check lattice values against the recurrence and report residuals.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// JSON file holding {"h": "p/q", "values": ["p/q", ...]}.
        #[arg(long, value_name = "FILE")]
        values: PathBuf,
    },
    /// Compare a basic polynomial against its monomial limit across
    /// spacings.
    LimitStudy {
        /// Polynomial degree.
        #[arg(long)]
        r: usize,
        /// Evaluation point as p/q or an integer; every spacing must tile it.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Comma-separated spacings, e.g. 1/8,1/16,1/32.
        #[arg(long, value_name = "H1,H2,...")]
        h_list: String,
    },
    /// Run the alternating binomial identity suite.
    Identities {
        /// Highest n checked for each identity.
        #[arg(long, default_value_t = 50)]
        n_max: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OpArg {
    Forward,
    Backward,
    Symmetric,
    Derivative,
}

impl From<OpArg> for DeltaKind {
    fn from(op: OpArg) -> Self {
        match op {
            OpArg::Forward => DeltaKind::Forward,
            OpArg::Backward => DeltaKind::Backward,
            OpArg::Symmetric => DeltaKind::Symmetric,
            OpArg::Derivative => DeltaKind::Derivative,
        }
    }
}

/// A rendered report plus the process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub report: String,
}

/// Usage error: printed to stderr with exit status 2, naming the offending
/// flag or variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Usage {
    pub message: String,
}

impl Usage {
    fn new(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
        }
    }
}

/// Parses arguments, dispatches, and writes the report to standard output
/// or `--output`. Returns the process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let status = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return status;
        }
    };
    let outcome = match dispatch(&cli) {
        Ok(outcome) => outcome,
        Err(usage) => {
            eprintln!("umbra: {}", usage.message);
            return 2;
        }
    };
    match &cli.output {
        Some(path) => {
            if let Err(err) = fs::write(path, &outcome.report) {
                eprintln!("umbra: --output: {}", err);
                return 2;
            }
        }
        None => print!("{}", outcome.report),
    }
    outcome.status
}

/// Builds the report for a parsed invocation without touching the
/// filesystem (except for reading `--values` input).
pub fn dispatch(cli: &Cli) -> Result<Outcome, Usage> {
    match &cli.command {
        Command::BasicPolys { op, h, degree } => basic_polys(cli.format, *op, h, *degree),
        Command::Discretize { a, b, n_max } => discretize(cli.format, a, b, *n_max),
        Command::Solve { a, b, n_max } => solve(cli.format, a, b, *n_max),
        Command::Verify { a, b, values } => verify(cli.format, a, b, values),
        Command::LimitStudy { r, x, h_list } => limit_study(cli.format, *r, x, h_list),
        Command::Identities { n_max } => identities(cli.format, *n_max),
    }
}

fn truncation_bound() -> Result<usize, Usage> {
    match env::var("UMBRA_TRUNCATION_BOUND") {
        Ok(raw) => raw
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&bound| bound >= 1)
            .ok_or_else(|| {
                Usage::new(format!(
                    "UMBRA_TRUNCATION_BOUND: '{}' is not a positive integer",
                    raw
                ))
            }),
        Err(env::VarError::NotPresent) => Ok(DEFAULT_TRUNCATION_BOUND),
        Err(env::VarError::NotUnicode(_)) => {
            Err(Usage::new("UMBRA_TRUNCATION_BOUND: value is not valid unicode"))
        }
    }
}

fn flag_rational(flag: &str, value: &str) -> Result<Rat, Usage> {
    parse_rational(value).map_err(|err| Usage::new(format!("{}: {}", flag, err)))
}

fn flag_positive_rational(flag: &str, value: &str) -> Result<Rat, Usage> {
    let parsed = flag_rational(flag, value)?;
    if parsed.is_positive() {
        Ok(parsed)
    } else {
        Err(Usage::new(format!("{}: '{}' must be positive", flag, value)))
    }
}

fn csv_field(value: &str) -> String {
    if value.contains([',', '"', '\n']) {
        format!("\"{}\"", value.replace('"', "\"\""))
    } else {
        value.to_string()
    }
}

fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut rendered = serde_json::to_string_pretty(value).expect("report serialization");
    rendered.push('\n');
    rendered
}

// ---- basic-polys ----

#[derive(Serialize)]
struct BasicPolysDoc {
    op: &'static str,
    h: String,
    degree: usize,
    /// Coefficient rows by ascending degree, padded to `degree + 1`.
    polynomials: Vec<Vec<String>>,
}

fn basic_polys(format: Format, op: OpArg, h: &str, degree: usize) -> Result<Outcome, Usage> {
    let bound = truncation_bound()?;
    if degree > bound {
        return Err(Usage::new(format!(
            "--degree: {} exceeds the truncation bound {} (raise UMBRA_TRUNCATION_BOUND to override)",
            degree, bound
        )));
    }
    let h = flag_positive_rational("--h", h)?;
    let kind = DeltaKind::from(op);
    let operator = DeltaSeries::delta(kind, &h, degree.max(1))
        .map_err(|err| Usage::new(format!("--degree: {}", err)))?;
    let sequence = operator
        .basic_sequence(degree)
        .map_err(|err| Usage::new(format!("--degree: {}", err)))?;

    let rows: Vec<Vec<String>> = sequence
        .polys()
        .iter()
        .map(|p| (0..=degree).map(|k| format_rational(&p.coeff(k))).collect())
        .collect();

    let report = match format {
        Format::Json => to_pretty_json(&BasicPolysDoc {
            op: kind.as_str(),
            h: format_rational(&h),
            degree,
            polynomials: rows,
        }),
        Format::Csv => {
            let mut out = String::new();
            let _ = writeln!(out, "# op={}", kind.as_str());
            let _ = writeln!(out, "# h={}", format_rational(&h));
            let _ = writeln!(out, "# degree={}", degree);
            let header: Vec<String> = (0..=degree).map(|k| format!("c{}", k)).collect();
            let _ = writeln!(out, "n,{}", header.join(","));
            for (n, row) in rows.iter().enumerate() {
                let _ = writeln!(out, "{},{}", n, row.join(","));
            }
            out
        }
    };
    Ok(Outcome { status: 0, report })
}

// ---- discretize ----

fn discretize(format: Format, a: &str, b: &str, n_max: usize) -> Result<Outcome, Usage> {
    let a = flag_rational("--a", a)?;
    let b = flag_rational("--b", b)?;
    let problem = EulerProblem::new(a, b);
    let indicial = problem.indicial_roots();
    let table = DiscreteEulerEquation::new(problem).table(n_max);

    let report = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct DiscretizeDoc<'a> {
                #[serde(flatten)]
                table: &'a crate::euler::EquationTable,
                indicial: &'a crate::euler::IndicialData,
            }
            to_pretty_json(&DiscretizeDoc {
                table: &table,
                indicial: &indicial,
            })
        }
        Format::Csv => {
            let mut out = String::new();
            let _ = writeln!(out, "# a={}", format_rational(&table.a));
            let _ = writeln!(out, "# b={}", format_rational(&table.b));
            let _ = writeln!(out, "# class={}", indicial.class.as_str());
            let roots: Vec<String> = indicial
                .roots
                .iter()
                .flat_map(|(root, mult)| vec![format_rational(root); *mult])
                .collect();
            let _ = writeln!(out, "# roots={}", roots.join(";"));
            let integer_roots: Vec<String> = indicial
                .integer_roots
                .iter()
                .map(ToString::to_string)
                .collect();
            let _ = writeln!(out, "# integer_roots={}", integer_roots.join(";"));
            let _ = writeln!(out, "n,c_nm2,c_nm1,c_nn");
            for row in &table.rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    row.n,
                    format_rational(&row.c_nm2),
                    format_rational(&row.c_nm1),
                    format_rational(&row.c_nn)
                );
            }
            out
        }
    };
    Ok(Outcome { status: 0, report })
}

// ---- solve ----

fn solve(format: Format, a: &str, b: &str, n_max: usize) -> Result<Outcome, Usage> {
    let a = flag_rational("--a", a)?;
    let b = flag_rational("--b", b)?;
    let problem = EulerProblem::new(a, b);
    let space = euler::solve_recurrence(&problem, n_max)
        .map_err(|err| Usage::new(format!("solve: {}", err)))?;

    let report = match format {
        Format::Json => to_pretty_json(&space),
        Format::Csv => {
            let mut out = String::new();
            let _ = writeln!(out, "# dimension={}", space.dimension());
            let free: Vec<String> = space.free_indices.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "# free_indices={}", free.join(";"));
            let _ = writeln!(out, "# diagnostic={}", space.indicial.diagnostic());
            let _ = writeln!(out, "# h=1/1");
            let header: Vec<String> = space
                .free_indices
                .iter()
                .map(|r| format!("u[{}]", r))
                .collect();
            if header.is_empty() {
                let _ = writeln!(out, "n");
            } else {
                let _ = writeln!(out, "n,{}", header.join(","));
            }
            for n in 0..=space.n_max {
                let row: Vec<String> = space
                    .basis
                    .iter()
                    .map(|basis| format_rational(&basis.values[n]))
                    .collect();
                if row.is_empty() {
                    let _ = writeln!(out, "{}", n);
                } else {
                    let _ = writeln!(out, "{},{}", n, row.join(","));
                }
            }
            out
        }
    };
    Ok(Outcome { status: 0, report })
}

// ---- verify ----

fn verify(format: Format, a: &str, b: &str, values_path: &PathBuf) -> Result<Outcome, Usage> {
    let a = flag_rational("--a", a)?;
    let b = flag_rational("--b", b)?;
    let raw = fs::read_to_string(values_path)
        .map_err(|err| Usage::new(format!("--values: {}: {}", values_path.display(), err)))?;
    let lattice: LatticeFunction = serde_json::from_str(&raw)
        .map_err(|err| Usage::new(format!("--values: {}: {}", values_path.display(), err)))?;

    let problem = EulerProblem::new(a, b);
    let residuals = euler::residuals(&lattice, &problem);
    let pass = residuals.iter().all(Zero::is_zero);

    let report = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct ResidualRow {
                n: usize,
                residual: String,
            }
            #[derive(Serialize)]
            struct VerifyDoc {
                a: String,
                b: String,
                residuals: Vec<ResidualRow>,
                pass: bool,
            }
            to_pretty_json(&VerifyDoc {
                a: format_rational(&problem.a),
                b: format_rational(&problem.b),
                residuals: residuals
                    .iter()
                    .enumerate()
                    .map(|(i, r)| ResidualRow {
                        n: i + 2,
                        residual: format_rational(r),
                    })
                    .collect(),
                pass,
            })
        }
        Format::Csv => {
            let mut out = String::new();
            let _ = writeln!(out, "# a={}", format_rational(&problem.a));
            let _ = writeln!(out, "# b={}", format_rational(&problem.b));
            let _ = writeln!(out, "# pass={}", pass);
            let _ = writeln!(out, "n,residual");
            for (i, r) in residuals.iter().enumerate() {
                let _ = writeln!(out, "{},{}", i + 2, format_rational(r));
            }
            out
        }
    };
    Ok(Outcome {
        status: i32::from(!pass),
        report,
    })
}

// ---- limit-study ----

fn limit_study(format: Format, r: usize, x: &str, h_list: &str) -> Result<Outcome, Usage> {
    let x = flag_positive_rational("--x", x)?;
    let spacings: Vec<Rat> = h_list
        .split(',')
        .map(|part| flag_positive_rational("--h-list", part.trim()))
        .collect::<Result<_, _>>()?;
    if spacings.is_empty() {
        return Err(Usage::new("--h-list: at least one spacing is required"));
    }
    let rows = euler::limit_study(r, &x, &spacings).map_err(|err| {
        Usage::new(format!("--h-list: {}", err))
    })?;

    let report = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct LimitRowDoc {
                h: String,
                error: String,
                ratio: Option<String>,
            }
            #[derive(Serialize)]
            struct LimitDoc {
                r: usize,
                x: String,
                rows: Vec<LimitRowDoc>,
            }
            to_pretty_json(&LimitDoc {
                r,
                x: format_rational(&x),
                rows: rows
                    .iter()
                    .map(|row| LimitRowDoc {
                        h: format_rational(&row.h),
                        error: format_rational(&row.error),
                        ratio: row.ratio.as_ref().map(format_rational),
                    })
                    .collect(),
            })
        }
        Format::Csv => {
            let mut out = String::new();
            let _ = writeln!(out, "# r={}", r);
            let _ = writeln!(out, "# x={}", format_rational(&x));
            let _ = writeln!(out, "h,error,ratio");
            for row in &rows {
                let ratio = row.ratio.as_ref().map(format_rational).unwrap_or_default();
                let _ = writeln!(
                    out,
                    "{},{},{}",
                    format_rational(&row.h),
                    format_rational(&row.error),
                    ratio
                );
            }
            out
        }
    };
    Ok(Outcome { status: 0, report })
}

// ---- identities ----

fn identities(format: Format, n_max: usize) -> Result<Outcome, Usage> {
    let reports = run_identity_suite(n_max, &default_samples());
    let pass = reports.iter().all(|r| r.pass);

    let report = match format {
        Format::Json => {
            let mut out = String::new();
            for r in &reports {
                let line = serde_json::to_string(r).expect("report serialization");
                let _ = writeln!(out, "{}", line);
            }
            out
        }
        Format::Csv => {
            let mut out = String::new();
            let _ = writeln!(out, "identity,range,pass,counterexample");
            for r in &reports {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    r.identity,
                    csv_field(&r.range),
                    r.pass,
                    csv_field(&render_counterexample(r))
                );
            }
            out
        }
    };
    Ok(Outcome {
        status: i32::from(!pass),
        report,
    })
}

fn render_counterexample(report: &IdentityReport) -> String {
    match &report.counterexample {
        None => String::new(),
        Some(ce) => {
            let mut parts = vec![format!("n={}", ce.n)];
            if let Some(a) = &ce.a {
                parts.push(format!("a={}", format_rational(a)));
            }
            if let Some(b) = &ce.b {
                parts.push(format!("b={}", format_rational(b)));
            }
            parts.push(format!("lhs={}", format_rational(&ce.lhs)));
            parts.push(format!("rhs={}", format_rational(&ce.rhs)));
            parts.join(" ")
        }
    }
}
