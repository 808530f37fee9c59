//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage error,
//! 3 an internal invariant was violated.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{generator_matrix, Generator, Shape};
use crate::module::{verma_vector, SparseVector};
use crate::tableau::enumerate_kn;
use crate::verify::{parse_suites, run_sweep, Suite, SuiteReport, DEFAULT_BUDGET};
use crate::verma::{enumerate_b, verma_weight, BVector, KnCorrespondence};
use crate::Integer;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "spo41",
    version,
    about = "Verma bases of irreducible spo(4|1)-modules"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Ascii,
}

#[derive(Debug, Clone, Args)]
pub struct ShapeArgs {
    /// Partition form `l1,l2` of the highest weight.
    #[arg(long, conflicts_with_all = ["m1", "m2"])]
    pub shape: Option<Shape>,
    /// Number of one-box columns (use together with --m2).
    #[arg(long, requires = "m2")]
    pub m1: Option<u32>,
    /// Number of two-box columns.
    #[arg(long, requires = "m1")]
    pub m2: Option<u32>,
}

impl ShapeArgs {
    fn resolve(&self) -> Option<Shape> {
        match (self.shape, self.m1, self.m2) {
            (Some(s), _, _) => Some(s),
            (None, Some(m1), Some(m2)) => Some(Shape::from_m(m1, m2)),
            _ => None,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension of L(lambda), counted by KN tableaux.
    Dim {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
    /// KN tableaux of a shape, in increasing order.
    Kn {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Exponent vectors with their weights and tableaux.
    Verma {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
    /// Expansion of f1^b4 f2^b3 f1^b2 f2^b1 v in the tensor basis.
    Expand {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Exponents `b1,b2,b3,b4`.
        #[arg(long)]
        b: Option<BVector>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run verification suites on one shape.
    Verify {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Comma-separated suite names, or `all`.
        #[arg(long, default_value = "all")]
        suites: String,
        /// Skip the closure suite when 5^m1 * 11^m2 exceeds this.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// The six generator matrices.
    Matrix {
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Run verification suites on every shape with m1 <= max-m1, m2 <= max-m2.
    Sweep {
        #[arg(long, default_value_t = 3)]
        max_m1: u32,
        #[arg(long, default_value_t = 3)]
        max_m2: u32,
        #[arg(long, default_value = "all")]
        suites: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_cli<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli.command, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            code
        }
    }
}

fn usage(err: &mut dyn Write, msg: &str) -> i32 {
    let _ = writeln!(err, "error: {msg}");
    EXIT_USAGE
}

fn internal(err: &mut dyn Write, msg: &str) -> i32 {
    let _ = writeln!(err, "internal error: {msg}");
    EXIT_INTERNAL
}

pub fn run(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cmd, out, err) {
        Ok(code) => code,
        Err(e) => internal(err, &format!("write failed: {e}")),
    }
}

fn codes(row: &[crate::Letter]) -> String {
    row.iter()
        .map(|l| l.code().to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn execute(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let need_shape = |a: &ShapeArgs| a.resolve();
    match cmd {
        Command::Dim { shape, format } => {
            let Some(s) = need_shape(shape) else {
                return Ok(usage(err, "dim needs --shape or --m1/--m2"));
            };
            let d = enumerate_kn(s).len();
            match format {
                Format::Json => writeln!(out, "{}", json!({"shape": s, "dim": d}))?,
                _ => writeln!(out, "{d}")?,
            }
        }
        Command::Kn { shape, format } => {
            let Some(s) = need_shape(shape) else {
                return Ok(usage(err, "kn needs --shape or --m1/--m2"));
            };
            for (i, t) in enumerate_kn(s).iter().enumerate() {
                match format {
                    Format::Json => writeln!(out, "{}", t.to_json())?,
                    Format::Tsv => writeln!(out, "{}\t{}", codes(t.row1()), codes(t.row2()))?,
                    Format::Ascii => {
                        if i > 0 {
                            writeln!(out)?;
                        }
                        writeln!(out, "{}", t.to_ascii())?
                    }
                }
            }
        }
        Command::Verma { shape, format } => {
            let Some(s) = need_shape(shape) else {
                return Ok(usage(err, "verma needs --shape or --m1/--m2"));
            };
            let corr = KnCorrespondence::new(s);
            for b in enumerate_b(s) {
                let t = match corr.tableau(b) {
                    Ok(t) => t,
                    Err(e) => return Ok(internal(err, &e.to_string())),
                };
                let w = verma_weight(b, s);
                match format {
                    Format::Json => writeln!(
                        out,
                        "{}",
                        json!({"b": b, "weight": [w.c1, w.c2], "tableau": t})
                    )?,
                    Format::Tsv => writeln!(
                        out,
                        "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                        b.b1,
                        b.b2,
                        b.b3,
                        b.b4,
                        w.c1,
                        w.c2,
                        t.to_json()
                    )?,
                    Format::Ascii => writeln!(
                        out,
                        "f1^{} f2^{} f1^{} f2^{} v  weight {}\n{}\n",
                        b.b4,
                        b.b3,
                        b.b2,
                        b.b1,
                        w,
                        t.to_ascii()
                    )?,
                }
            }
        }
        Command::Expand { shape, b, format } => {
            let Some(s) = need_shape(shape) else {
                return Ok(usage(err, "expand needs --shape or --m1/--m2"));
            };
            let Some(b) = b else {
                return Ok(usage(err, "expand needs --b b1,b2,b3,b4"));
            };
            let v: SparseVector<Integer> = verma_vector(*b, s);
            match format {
                Format::Json => writeln!(out, "{}", v.to_json())?,
                Format::Tsv => {
                    for (idx, c) in v.terms().rev() {
                        let pairs: Vec<String> = idx
                            .pairs()
                            .map(|p| format!("{},{}", p.lo().code(), p.hi().code()))
                            .collect();
                        writeln!(out, "{c}\t{}\t{}", codes(idx.singles()), pairs.join(";"))?;
                    }
                }
                Format::Ascii => writeln!(out, "{v}")?,
            }
        }
        Command::Verify {
            shape,
            suites,
            budget,
            format,
        } => {
            let Some(s) = need_shape(shape) else {
                return Ok(usage(err, "verify needs --shape or --m1/--m2"));
            };
            let suites = match parse_suites(suites) {
                Ok(x) => x,
                Err(e) => return Ok(usage(err, &e.to_string())),
            };
            return emit_reports(&run_sweep(&suites, &[s], *budget), *format, out);
        }
        Command::Sweep {
            max_m1,
            max_m2,
            suites,
            budget,
            format,
        } => {
            let suites: Vec<Suite> = match parse_suites(suites) {
                Ok(x) => x,
                Err(e) => return Ok(usage(err, &e.to_string())),
            };
            let shapes = Shape::sweep(*max_m1, *max_m2);
            return emit_reports(&run_sweep(&suites, &shapes, *budget), *format, out);
        }
        Command::Matrix { format } => {
            for g in Generator::ALL {
                let m = generator_matrix::<Integer>(g);
                match format {
                    Format::Json => writeln!(
                        out,
                        "{}",
                        json!({
                            "generator": g.to_string(),
                            "parity": g.parity(),
                            "entries": generator_matrix::<i64>(g).entries(),
                        })
                    )?,
                    Format::Tsv => {
                        for row in m.entries() {
                            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                            writeln!(out, "{g}\t{}", cells.join("\t"))?;
                        }
                    }
                    Format::Ascii => writeln!(out, "{g} (parity {})\n{m}", g.parity())?,
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn emit_reports(
    reports: &[SuiteReport],
    format: Format,
    out: &mut dyn Write,
) -> std::io::Result<i32> {
    for r in reports {
        match format {
            Format::Json => writeln!(out, "{}", r.to_json())?,
            _ => {
                let shape = r.shape.map_or_else(|| "-".to_owned(), |s| s.to_string());
                let status = if r.skipped {
                    "skipped"
                } else if r.passed() {
                    "pass"
                } else {
                    "FAIL"
                };
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}ms",
                    r.suite,
                    shape,
                    status,
                    r.checks_run,
                    r.failures.len(),
                    r.wall_time_ms
                )?
            }
        }
    }
    Ok(if reports.iter().all(SuiteReport::passed) {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}
