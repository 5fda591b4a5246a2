//! `syt scan`: one row per parameter tuple of a shape family, with the
//! count, its largest prime factor and whether it is N-smooth.

use std::io::Write;
use std::str::FromStr;

use clap::{Args, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use syt_core::arith::factorize;
use syt_core::truncated::Family;
use syt_core::{count_syt, CellRegion, ExactCount, Partition, ShapeSpec};

use crate::error::{CliError, CliResult};
use crate::render;

/// Environment variable overriding [`DEFAULT_ORACLE_MAX_N`].
pub const ORACLE_BUDGET_VAR: &str = "SYT_ORACLE_MAX_N";
/// Largest shape the oracle-backed families will count.
pub const DEFAULT_ORACLE_MAX_N: usize = 48;
/// Most rows a single scan may produce.
pub const MAX_ROWS: usize = 100_000;

/// Inclusive range `a..b`, or a single value `a`. Empty when `a > b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub lo: usize,
    pub hi: usize,
}

impl Span {
    fn values(self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }

    fn len(self) -> usize {
        self.hi.saturating_add(1).saturating_sub(self.lo)
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |x: &str| x.parse::<usize>().map_err(|_| format!("`{s}` is not `a..b` or an integer"));
        match s.split_once("..") {
            Some((a, b)) => Ok(Span { lo: num(a)?, hi: num(b)? }),
            None => {
                let v = num(s)?;
                Ok(Span { lo: v, hi: v })
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    /// [m+2k] minus ((k-1)^(k-1)), k >= 2
    #[value(name = "stair-sq")]
    StairSq,
    /// [m+2k] minus (k^(k-1), k-1), k >= 1
    #[value(name = "stair-sq+1")]
    StairSqPlus1,
    /// ((n+k)^(m+k)) minus ((k-1)^(k-1)), k >= 2
    #[value(name = "rect-sq")]
    RectSq,
    /// ((n+k)^(m+k)) minus (k^(k-1), k-1), k >= 1
    #[value(name = "rect-sq+1")]
    RectSqPlus1,
    /// [m+4] minus (1)
    #[value(name = "stair-corner")]
    StairCorner,
    /// ((n+2)^(m+2)) minus (1)
    #[value(name = "rect-corner")]
    RectCorner,
    /// (n^n) minus (2), conjectured formula
    #[value(name = "square-minus-two")]
    SquareMinusTwo,
    /// [m] minus --kappa, counted by the oracle
    #[value(name = "stair-trunc")]
    StairTrunc,
    /// (n^m) minus --kappa, counted by the oracle
    #[value(name = "rect-trunc")]
    RectTrunc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long)]
    pub family: FamilyName,
    #[arg(long)]
    pub m: Option<Span>,
    #[arg(long)]
    pub n: Option<Span>,
    #[arg(long)]
    pub k: Option<Span>,
    /// Truncation for stair-trunc and rect-trunc, comma-separated
    #[arg(long, value_delimiter = ',')]
    pub kappa: Vec<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// One output row. Big integers are decimal strings so that JSON readers
/// never round them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub family: String,
    pub params: String,
    #[serde(rename = "N")]
    pub size: usize,
    pub count: String,
    /// `unresolved` when a composite cofactor could not be split.
    pub largest_prime: String,
    pub n_smooth: bool,
}

/// What a row counts: a closed-form family or an arbitrary truncation.
#[derive(Debug, Clone)]
enum Job {
    Formula(Family),
    Oracle { params: String, region: CellRegion },
}

impl Job {
    fn size(&self) -> usize {
        match self {
            Job::Formula(f) => f.size(),
            Job::Oracle { region, .. } => region.size(),
        }
    }
}

fn oracle_budget() -> CliResult<usize> {
    match std::env::var(ORACLE_BUDGET_VAR) {
        Ok(v) => v
            .parse()
            .map_err(|_| CliError::BadArgument(format!("{ORACLE_BUDGET_VAR}={v} is not a nonnegative integer"))),
        Err(_) => Ok(DEFAULT_ORACLE_MAX_N),
    }
}

fn span(name: &'static str, v: Option<Span>) -> CliResult<Span> {
    v.ok_or_else(|| CliError::BadArgument(format!("this family needs --{name}")))
}

fn at_least(name: &str, s: Span, min: usize) -> CliResult<()> {
    if s.len() > 0 && s.lo < min {
        Err(CliError::BadArgument(format!("--{name} must be at least {min}")))
    } else {
        Ok(())
    }
}

fn jobs(args: &ScanArgs) -> CliResult<Vec<Job>> {
    use FamilyName::*;
    let needs_m = !matches!(args.family, SquareMinusTwo);
    let needs_n = matches!(args.family, RectSq | RectSqPlus1 | RectCorner | SquareMinusTwo | RectTrunc);
    let needs_k = matches!(args.family, StairSq | StairSqPlus1 | RectSq | RectSqPlus1);
    let zero = Span { lo: 0, hi: 0 };
    let m = if needs_m { span("m", args.m)? } else { zero };
    let n = if needs_n { span("n", args.n)? } else { zero };
    let k = if needs_k { span("k", args.k)? } else { zero };
    let unused = [("m", args.m, needs_m), ("n", args.n, needs_n), ("k", args.k, needs_k)];
    if let Some((name, _, _)) = unused.iter().find(|(_, v, needed)| v.is_some() && !needed) {
        return Err(CliError::BadArgument(format!("this family takes no --{name}")));
    }
    let truncating = matches!(args.family, StairTrunc | RectTrunc);
    if !truncating && !args.kappa.is_empty() {
        return Err(CliError::BadArgument("--kappa applies to stair-trunc and rect-trunc only".into()));
    }
    match args.family {
        StairSq | RectSq => at_least("k", k, 2)?,
        StairSqPlus1 | RectSqPlus1 => at_least("k", k, 1)?,
        SquareMinusTwo => at_least("n", n, 2)?,
        _ => {}
    }
    let rows = m.len().saturating_mul(n.len()).saturating_mul(k.len());
    if rows > MAX_ROWS {
        return Err(CliError::RangeTooLarge(format!("{rows} rows requested, at most {MAX_ROWS} allowed")));
    }
    let kappa = Partition::new(args.kappa.clone())?;
    let mut out = Vec::with_capacity(rows);
    for m in m.values() {
        for n in n.values() {
            for k in k.values() {
                out.push(match args.family {
                    StairSq => Job::Formula(Family::StairMinusSquare { m, k }),
                    StairSqPlus1 => Job::Formula(Family::StairMinusSquarePlus1 { m, k }),
                    RectSq => Job::Formula(Family::RectMinusSquare { m, n, k }),
                    RectSqPlus1 => Job::Formula(Family::RectMinusSquarePlus1 { m, n, k }),
                    StairCorner => Job::Formula(Family::StairMinusCorner { m }),
                    RectCorner => Job::Formula(Family::RectMinusCorner { m, n }),
                    SquareMinusTwo => Job::Formula(Family::SquareMinusTwo { n }),
                    StairTrunc => {
                        let region = ShapeSpec::Staircase { m, kappa: kappa.clone() }.build_region()?;
                        Job::Oracle { params: format!("m={m},kappa={kappa}"), region }
                    }
                    RectTrunc => {
                        let region = ShapeSpec::Rectangle { m, n, kappa: kappa.clone() }.build_region()?;
                        Job::Oracle { params: format!("m={m},n={n},kappa={kappa}"), region }
                    }
                });
            }
        }
    }
    if truncating {
        let budget = oracle_budget()?;
        if let Some(big) = out.iter().find(|j| j.size() > budget) {
            return Err(CliError::RangeTooLarge(format!(
                "shape of size {} exceeds the oracle budget {budget} (set {ORACLE_BUDGET_VAR})",
                big.size()
            )));
        }
    }
    Ok(out)
}

fn evaluate(args: &ScanArgs, job: &Job) -> CliResult<Row> {
    let family = match args.family.to_possible_value() {
        Some(v) => v.get_name().to_string(),
        None => String::new(),
    };
    let (params, count): (String, ExactCount) = match job {
        Job::Formula(f) => (f.params(), f.count()?),
        Job::Oracle { params, region, .. } => (params.clone(), count_syt(region)),
    };
    let size = job.size();
    let f = factorize(&count);
    let largest_prime = if f.is_complete() { f.largest_prime().to_string() } else { "unresolved".into() };
    let n_smooth = f.is_smooth(&ExactCount::from(size));
    Ok(Row { family, params, size, count: count.to_string(), largest_prime, n_smooth })
}

/// Computes every row, in parallel, in parameter order.
pub fn rows(args: &ScanArgs) -> CliResult<Vec<Row>> {
    let jobs = jobs(args)?;
    jobs.par_iter().map(|j| evaluate(args, j)).collect()
}

pub fn run(args: &ScanArgs, out: &mut impl Write) -> CliResult<()> {
    let rows = rows(args)?;
    match args.format {
        Format::Csv => {
            // explicit header so that an empty scan still prints it
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
            w.write_record(["family", "params", "N", "count", "largest_prime", "n_smooth"])?;
            for r in &rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &rows)?;
            writeln!(out)?;
        }
        Format::Text => text(out, &rows, args.family)?,
    }
    Ok(())
}

fn text(out: &mut impl Write, rows: &[Row], family: FamilyName) -> CliResult<()> {
    let header = ["family", "params", "N", "count", "largest_prime", "n_smooth"];
    let cells: Vec<[String; 6]> = rows
        .iter()
        .map(|r| {
            let count = r.count.parse::<ExactCount>().map(|c| render::count(&c)).unwrap_or_else(|_| r.count.clone());
            [r.family.clone(), r.params.clone(), r.size.to_string(), count, r.largest_prime.clone(), r.n_smooth.to_string()]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let line = |fields: Vec<&str>| -> String {
        let padded: Vec<String> = fields.iter().zip(widths).map(|(f, w)| format!("{f:<w$}")).collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(header.to_vec()))?;
    for row in &cells {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
    }
    if family == FamilyName::SquareMinusTwo {
        writeln!(out, "counts from the conjectured formula (CONJECTURE)")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans() {
        assert_eq!("2..7".parse::<Span>(), Ok(Span { lo: 2, hi: 7 }));
        assert_eq!("4".parse::<Span>(), Ok(Span { lo: 4, hi: 4 }));
        assert_eq!("3..2".parse::<Span>().unwrap().len(), 0);
        assert!("a..2".parse::<Span>().is_err());
        assert!("1..".parse::<Span>().is_err());
    }
}
