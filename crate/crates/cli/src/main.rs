//! `syt`: count, enumerate and factor standard Young tableaux of ordinary,
//! shifted and truncated shapes, and check the product identities behind
//! their closed forms.
//!
//! Shapes are written `part:3,3,2`, `shifted:4,1`, `stair:4/1` or
//! `rect:6x7/2` (six rows of seven cells, two removed from the first row).
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on a usage or input
//! error.

mod error;
mod render;
mod scan;
mod verify;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use syt_core::arith::factorize;
use syt_core::exact_count::SytIter;
use syt_core::truncated::{formula_count, Family};
use syt_core::{count_syt, CellRegion, ExactCount, ShapeSpec};

use error::{CliError, CliResult};

#[derive(Debug, Parser)]
#[command(name = "syt", version, about = "Exact counts of standard Young tableaux")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of standard Young tableaux of a shape
    Count {
        shape: String,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Print the closed form and the oracle side by side
        #[arg(long)]
        check: bool,
    },
    /// Count, its prime factorization and whether it is N-smooth
    Factor {
        shape: String,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Check an identity for given parameters
    Verify(verify::VerifyArgs),
    /// Tabulate a shape family over parameter ranges
    Scan(scan::ScanArgs),
    /// Print tableaux of a shape as grids
    Enumerate {
        shape: String,
        #[arg(long)]
        limit: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// A proven closed form when one is known, else the oracle
    Auto,
    /// The closed form; fails when none is known
    Formula,
    /// Dynamic programming over order ideals
    Oracle,
}

fn parse_shape(text: &str) -> CliResult<(ShapeSpec, CellRegion)> {
    let bad = |e: syt_core::Error| CliError::BadArgument(format!("`{text}`: {e}"));
    let spec: ShapeSpec = text.parse().map_err(bad)?;
    let region = spec.build_region().map_err(bad)?;
    Ok((spec, region))
}

fn is_conjecture(spec: &ShapeSpec) -> bool {
    Family::detect(spec).is_some_and(|f| f.is_conjecture())
}

fn formula(spec: &ShapeSpec) -> CliResult<ExactCount> {
    match formula_count(spec) {
        Some(v) => Ok(v?),
        None => Err(CliError::NoFormulaAvailable(spec.to_string())),
    }
}

fn evaluate(spec: &ShapeSpec, region: &CellRegion, method: Method) -> CliResult<ExactCount> {
    match method {
        Method::Oracle => Ok(count_syt(region)),
        Method::Formula => formula(spec),
        Method::Auto if is_conjecture(spec) => Ok(count_syt(region)),
        Method::Auto => match formula_count(spec) {
            Some(v) => Ok(v?),
            None => Ok(count_syt(region)),
        },
    }
}

/// Runs a command; `Ok(false)` means a check ran and failed.
fn run(cli: Cli, out: &mut impl Write) -> CliResult<bool> {
    match cli.command {
        Command::Count { shape, method, check } => {
            let (spec, region) = parse_shape(&shape)?;
            if check {
                let f = formula(&spec)?;
                let o = count_syt(&region);
                writeln!(out, "formula {}", render::count(&f))?;
                writeln!(out, "oracle  {}", render::count(&o))?;
                let verdict = if f == o { "OK" } else { "MISMATCH" };
                if is_conjecture(&spec) {
                    writeln!(out, "{verdict} (CONJECTURE)")?;
                } else {
                    writeln!(out, "{verdict}")?;
                }
                return Ok(f == o);
            }
            let v = evaluate(&spec, &region, method)?;
            writeln!(out, "{}", render::count(&v))?;
            if method == Method::Formula && is_conjecture(&spec) {
                writeln!(out, "CONJECTURE: value from an unproven formula")?;
            }
        }
        Command::Factor { shape, method } => {
            let (spec, region) = parse_shape(&shape)?;
            let v = evaluate(&spec, &region, method)?;
            let n = region.size();
            let f = factorize(&v);
            writeln!(out, "shape {spec}, N = {n}")?;
            writeln!(out, "count {}", render::count(&v))?;
            writeln!(out, "factors {f}")?;
            if f.is_complete() {
                writeln!(out, "largest prime {}", f.largest_prime())?;
            } else {
                writeln!(out, "largest prime unresolved")?;
            }
            if f.is_smooth(&ExactCount::from(n)) {
                writeln!(out, "{n}-smooth")?;
            } else {
                writeln!(out, "NOT {n}-smooth")?;
            }
        }
        Command::Verify(args) => return verify::run(&args, out),
        Command::Scan(args) => scan::run(&args, out)?,
        Command::Enumerate { shape, limit } => {
            let (_, region) = parse_shape(&shape)?;
            let iter = SytIter::new(&region).take(limit.unwrap_or(usize::MAX));
            for (i, t) in iter.enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                render::grid(out, &t)?;
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|ok| {
        out.flush()?;
        Ok(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("syt: {e}");
            ExitCode::from(2)
        }
    }
}
