//! `syt verify`: evaluates both sides of an identity and reports whether
//! they agree.

use std::io::Write;

use clap::{Args, ValueEnum};
use syt_core::arith::FactoredRatio;
use syt_core::formulas::{
    binomial_identity, coeff_c, coeff_d, frobenius_young, frobenius_young_ratio, rectangle_count,
    schur_count, schur_ratio, staircase_count, sum_identity_rect, sum_identity_shifted,
};
use syt_core::pivot::{shape_of, verify_pivot_identity_rect, verify_pivot_identity_staircase, PivotReport};
use syt_core::shapes::{
    complement_in_rectangle, complement_in_staircase, partitions_in_box, strict_subsets_of_staircase,
};
use syt_core::truncated::{conjecture_square_minus_two, rect_sum_lhs, staircase_sum_lhs, theorem_rect_sum, theorem_staircase_sum};
use syt_core::{count_syt, CellRegion, ExactCount, Partition, StrictPartition};

use crate::error::{CliError, CliResult};
use crate::render;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    /// Per-size sum over complementary pairs in a staircase: --m [--t]
    SumShifted,
    /// Per-size sum over complementary pairs in a rectangle: --m --n [--t]
    SumRect,
    /// Size-only coefficient for staircases: --mu --m [--t]
    CoeffC,
    /// Size-only coefficient for rectangles: --mu --k --m --n [--t]
    CoeffD,
    /// Summed identity for staircases: --mu --m
    MainStair,
    /// Summed identity for rectangles: --mu --k --m --n
    MainRect,
    /// Binomial convolution: --t1 --t2 --N
    Binomial,
    /// Pivot split of a truncated staircase: --mu --m
    PivotStair,
    /// Pivot split of a truncated rectangle: --mu --k --m --n
    PivotRect,
    /// Conjectured count of (n^n) minus two cells: --n
    Conjecture,
}

impl Identity {
    fn name(self) -> &'static str {
        match self {
            Identity::SumShifted => "sum-shifted",
            Identity::SumRect => "sum-rect",
            Identity::CoeffC => "coeff-c",
            Identity::CoeffD => "coeff-d",
            Identity::MainStair => "main-stair",
            Identity::MainRect => "main-rect",
            Identity::Binomial => "binomial",
            Identity::PivotStair => "pivot-stair",
            Identity::PivotRect => "pivot-rect",
            Identity::Conjecture => "conjecture",
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub identity: Identity,
    /// Comma-separated parts of mu; empty when omitted
    #[arg(long, value_delimiter = ',')]
    pub mu: Vec<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Restrict to complementary pairs with |lam| = t
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub t1: Option<u64>,
    #[arg(long)]
    pub t2: Option<u64>,
    #[arg(long = "N")]
    pub big_n: Option<u64>,
}

fn need<T: Copy>(identity: Identity, param: &'static str, v: Option<T>) -> CliResult<T> {
    v.ok_or(CliError::MissingParameter { identity: identity.name(), param })
}

/// One comparison line; returns whether the sides agree.
fn side_by_side(out: &mut impl Write, label: &str, lhs: &ExactCount, rhs: &ExactCount) -> CliResult<bool> {
    let rel = if lhs == rhs { "=" } else { "!=" };
    writeln!(out, "{label}LHS {} {rel} RHS {}", render::count(lhs), render::count(rhs))?;
    Ok(lhs == rhs)
}

fn sizes(t: Option<usize>, max: usize) -> Vec<usize> {
    match t {
        Some(t) => vec![t],
        None => (0..=max).collect(),
    }
}

/// Runs the check and writes its report. `Ok(true)` means it passed.
pub fn run(args: &VerifyArgs, out: &mut impl Write) -> CliResult<bool> {
    let id = args.identity;
    let ok = match id {
        Identity::SumShifted => {
            let m = need(id, "m", args.m)?;
            let big_m = m * (m + 1) / 2;
            writeln!(out, "sum-shifted m={m}")?;
            let mut ok = true;
            for t in sizes(args.t, big_m) {
                if t > big_m {
                    return Err(CliError::BadArgument(format!("t = {t} exceeds {big_m}")));
                }
                ok &= side_by_side(out, &format!("t={t}: "), &sum_identity_shifted(m, t), &staircase_count(m))?;
            }
            ok
        }
        Identity::SumRect => {
            let (m, n) = (need(id, "m", args.m)?, need(id, "n", args.n)?);
            writeln!(out, "sum-rect m={m} n={n}")?;
            let mut ok = true;
            for t in sizes(args.t, m * n) {
                if t > m * n {
                    return Err(CliError::BadArgument(format!("t = {t} exceeds {}", m * n)));
                }
                ok &= side_by_side(out, &format!("t={t}: "), &sum_identity_rect(m, n, t), &rectangle_count(m, n))?;
            }
            ok
        }
        Identity::CoeffC => {
            let mu = StrictPartition::new(args.mu.clone())?;
            let m = need(id, "m", args.m)?;
            writeln!(out, "coeff-c mu={mu} m={m}")?;
            let mut ok = true;
            for t in sizes(args.t, m * (m + 1) / 2) {
                let c = coeff_c(&mu, m, t)?;
                let mut pairs = 0;
                let mut agree = true;
                for lam in strict_subsets_of_staircase(m).into_iter().filter(|l| l.size() == t) {
                    let comp = complement_in_staircase(&lam, m)?;
                    let lhs = schur_count(&mu.union(&lam)?) * schur_count(&mu.union(&comp)?);
                    agree &= scaled(&c, &schur_ratio(&lam), &schur_ratio(&comp))? == lhs;
                    pairs += 1;
                }
                writeln!(out, "t={t}: c = {c}, {pairs} pairs {}", if agree { "agree" } else { "DISAGREE" })?;
                ok &= agree;
            }
            ok
        }
        Identity::CoeffD => {
            let mu = Partition::new(args.mu.clone())?;
            let (k, m, n) = (need(id, "k", args.k)?, need(id, "m", args.m)?, need(id, "n", args.n)?);
            writeln!(out, "coeff-d mu={mu} k={k} m={m} n={n}")?;
            let top = mu.sum(&Partition::rectangle(k, n));
            let left = mu.sum(&Partition::rectangle(k, m));
            let mut ok = true;
            for t in sizes(args.t, m * n) {
                let d = coeff_d(&mu, k, m, n, t)?;
                let mut pairs = 0;
                let mut agree = true;
                for lam in partitions_in_box(m, n).into_iter().filter(|l| l.size() == t) {
                    let comp = complement_in_rectangle(&lam, m, n)?;
                    let lhs = frobenius_young(&top.union(&lam)) * frobenius_young(&left.union(&comp));
                    agree &= scaled(&d, &frobenius_young_ratio(&lam), &frobenius_young_ratio(&comp))? == lhs;
                    pairs += 1;
                }
                writeln!(out, "t={t}: d = {d}, {pairs} pairs {}", if agree { "agree" } else { "DISAGREE" })?;
                ok &= agree;
            }
            ok
        }
        Identity::MainStair => {
            let mu = StrictPartition::new(args.mu.clone())?;
            let m = need(id, "m", args.m)?;
            writeln!(out, "main-stair mu={mu} m={m}")?;
            side_by_side(out, "", &staircase_sum_lhs(&mu, m)?, &theorem_staircase_sum(&mu, m)?)?
        }
        Identity::MainRect => {
            let mu = Partition::new(args.mu.clone())?;
            let (k, m, n) = (need(id, "k", args.k)?, need(id, "m", args.m)?, need(id, "n", args.n)?);
            writeln!(out, "main-rect mu={mu} k={k} m={m} n={n}")?;
            side_by_side(out, "", &rect_sum_lhs(&mu, k, m, n)?, &theorem_rect_sum(&mu, k, m, n)?)?
        }
        Identity::Binomial => {
            let (t1, t2, n) = (need(id, "t1", args.t1)?, need(id, "t2", args.t2)?, need(id, "N", args.big_n)?);
            writeln!(out, "binomial t1={t1} t2={t2} N={n}")?;
            let (lhs, rhs) = binomial_identity(t1, t2, n);
            side_by_side(out, "", &lhs, &rhs)?
        }
        Identity::PivotStair => {
            let mu = StrictPartition::new(args.mu.clone())?;
            let m = need(id, "m", args.m)?;
            writeln!(out, "pivot-stair mu={mu} m={m}")?;
            pivot_report(out, &verify_pivot_identity_staircase(&mu, m)?)?
        }
        Identity::PivotRect => {
            let mu = Partition::new(args.mu.clone())?;
            let (k, m, n) = (need(id, "k", args.k)?, need(id, "m", args.m)?, need(id, "n", args.n)?);
            writeln!(out, "pivot-rect mu={mu} k={k} m={m} n={n}")?;
            pivot_report(out, &verify_pivot_identity_rect(&mu, k, m, n)?)?
        }
        Identity::Conjecture => {
            let n = need(id, "n", args.n)?;
            writeln!(out, "CONJECTURE square-minus-two n={n}")?;
            let formula = conjecture_square_minus_two(n)?;
            let region = CellRegion::truncated_rectangle(n, n, &Partition::new(vec![2])?)?;
            let oracle = count_syt(&region);
            let rel = if formula == oracle { "=" } else { "!=" };
            writeln!(out, "formula {} {rel} oracle {}", render::count(&formula), render::count(&oracle))?;
            formula == oracle
        }
    };
    let verdict = if ok { "PASS" } else { "FAIL" };
    if id == Identity::Conjecture {
        writeln!(out, "{verdict} (CONJECTURE)")?;
    } else {
        writeln!(out, "{verdict}")?;
    }
    Ok(ok)
}

/// `coef * a * b` as an integer.
fn scaled(coef: &FactoredRatio, a: &FactoredRatio, b: &FactoredRatio) -> CliResult<ExactCount> {
    Ok((coef * &(a * b)).to_integer()?)
}

fn pivot_report(out: &mut impl Write, report: &PivotReport) -> CliResult<bool> {
    let region = shape_of(&report.region).map(|s| s.to_string()).unwrap_or_else(|| format!("{:?}", report.region.rows()));
    writeln!(out, "region {region}, pivot {:?}", report.pivot)?;
    for term in &report.terms {
        let observed = match &term.observed {
            Some(o) => format!(", observed {o}"),
            None => String::new(),
        };
        writeln!(out, "  {} x {}: expected {}{observed}", term.first, term.second, term.expected)?;
    }
    if report.enumerated {
        writeln!(out, "stray splits: {}", report.stray_splits)?;
    } else {
        writeln!(out, "too many tableaux to split; totals only")?;
    }
    side_by_side(out, "oracle vs terms: ", &report.oracle, &report.rhs)?;
    Ok(report.passed())
}
