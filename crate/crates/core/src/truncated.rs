//! Summed product identities over complementary pairs and the closed-form
//! counts of truncated staircases and rectangles that follow from them.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::formulas::{
    frobenius_young, frobenius_young_ratio, rectangle_count, rectangle_ratio, schur_count,
    schur_ratio, staircase_count,
};
use crate::shapes::{
    complement_in_rectangle, complement_in_staircase, partitions_in_box, staircase,
    strict_subsets_of_staircase, Partition, ShapeSpec, StrictPartition,
};
use crate::{Error, ExactCount, FactoredRatio, Result};

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(String::from(msg)))
    }
}

fn check_parts_exceed(mu: &StrictPartition, m: usize) -> Result<()> {
    match mu.parts().iter().find(|&&p| p <= m) {
        Some(&part) => Err(Error::PartTooSmall { part, bound: m }),
        None => Ok(()),
    }
}

/// `g^{mu ∪ [m]} g^mu · N! |mu|! / ((N - |mu| - 1)! (2|mu| + 1)!)`.
fn staircase_sum_ratio(mu: &StrictPartition, m: usize, big_n: usize) -> FactoredRatio {
    let s = mu.size();
    let full = mu.union(&staircase(m)).expect("parts of mu exceed m");
    let mut r = &schur_ratio(&full) * &schur_ratio(mu);
    r.mul_factorial(big_n as u64)
        .mul_factorial(s as u64)
        .div_factorial((big_n - s - 1) as u64)
        .div_factorial((2 * s + 1) as u64);
    r
}

/// Closed form of `sum_{lam ⊆ [m]} g^{mu ∪ lam} g^{mu ∪ lam^c}`.
pub fn theorem_staircase_sum(mu: &StrictPartition, m: usize) -> Result<ExactCount> {
    check_parts_exceed(mu, m)?;
    let big_n = m * (m + 1) / 2 + 2 * mu.size() + 1;
    staircase_sum_ratio(mu, m, big_n).to_integer()
}

/// `sum_{lam ⊆ [m]} g^{mu ∪ lam} g^{mu ∪ lam^c}`, term by term.
pub fn staircase_sum_lhs(mu: &StrictPartition, m: usize) -> Result<ExactCount> {
    check_parts_exceed(mu, m)?;
    let mut total = BigUint::zero();
    for lam in strict_subsets_of_staircase(m) {
        let comp = complement_in_staircase(&lam, m)?;
        total += schur_count(&mu.union(&lam)?) * schur_count(&mu.union(&comp)?);
    }
    Ok(total)
}

/// Closed form of `sum_{lam ⊆ (n^m)} f^{(mu+(n^k)) ∪ lam} f^{(mu+(m^k)) ∪ lam^c}`.
pub fn theorem_rect_sum(mu: &Partition, k: usize, m: usize, n: usize) -> Result<ExactCount> {
    require(mu.len() <= k, "mu has more than k parts")?;
    let s = mu.size();
    let wide = mu.sum(&Partition::rectangle(k, m + n));
    let mut r = &(&frobenius_young_ratio(&wide) * &frobenius_young_ratio(mu)) * &rectangle_ratio(m, n);
    let top = m * n + 2 * s + m * k + n * k + 1;
    r.mul_factorial(top as u64)
        .div_factorial((m * n) as u64)
        .div_factorial((top - m * n) as u64)
        .mul_factorial((s + m * k) as u64)
        .mul_factorial((s + n * k) as u64)
        .div_factorial((s + m * k + n * k) as u64)
        .div_factorial(s as u64);
    r.to_integer()
}

/// `sum_{lam ⊆ (n^m)} f^{(mu+(n^k)) ∪ lam} f^{(mu+(m^k)) ∪ lam^c}`, term by term.
pub fn rect_sum_lhs(mu: &Partition, k: usize, m: usize, n: usize) -> Result<ExactCount> {
    require(mu.len() <= k, "mu has more than k parts")?;
    let top = mu.sum(&Partition::rectangle(k, n));
    let left = mu.sum(&Partition::rectangle(k, m));
    let mut total = BigUint::zero();
    for lam in partitions_in_box(m, n) {
        let comp = complement_in_rectangle(&lam, m, n)?;
        total += frobenius_young(&top.union(&lam)) * frobenius_young(&left.union(&comp));
    }
    Ok(total)
}

/// `(from, from - 1, ..., to)` as a strict partition; empty when `from < to`.
fn run(from: usize, to: usize) -> Vec<usize> {
    (to..=from).rev().collect()
}

/// `mu = (m+k, ..., m+1)` for the truncation `(k^{k-1}, k-1)`.
pub fn mu_square_plus1(m: usize, k: usize) -> StrictPartition {
    StrictPartition::new(run(m + k, m + 1)).expect("strict by construction")
}

/// `mu = (m+k+1, ..., m+3, m+1)` for the truncation `((k-1)^{k-1})`.
pub fn mu_square(m: usize, k: usize) -> StrictPartition {
    let mut parts = run(m + k + 1, m + 3);
    parts.push(m + 1);
    StrictPartition::new(parts).expect("strict by construction")
}

fn binom2(x: usize) -> usize {
    x * (x.saturating_sub(1)) / 2
}

/// Number of SYT of `[m+2k] \ (k^{k-1}, k-1)`.
pub fn count_stair_minus_square_plus1(m: usize, k: usize) -> Result<ExactCount> {
    require(k >= 1, "k must be positive")?;
    let mu = mu_square_plus1(m, k);
    debug_assert_eq!(2 * mu.size(), k * (2 * m + k + 1));
    let big_n = binom2(m + 2 * k + 1) + 1 - k * k;
    debug_assert_eq!(big_n, m * (m + 1) / 2 + 2 * mu.size() + 1);
    staircase_sum_ratio(&mu, m, big_n).to_integer()
}

/// Number of SYT of `[m+2k] \ ((k-1)^{k-1})`, `k >= 2`.
pub fn count_stair_minus_square(m: usize, k: usize) -> Result<ExactCount> {
    require(k >= 2, "k must be at least 2")?;
    let mu = mu_square(m, k);
    debug_assert_eq!(2 * (mu.size() + 1), k * (2 * m + k + 3));
    let big_n = binom2(m + 2 * k + 1) - (k - 1) * (k - 1);
    debug_assert_eq!(big_n, m * (m + 1) / 2 + 2 * mu.size() + 1);
    staircase_sum_ratio(&mu, m, big_n).to_integer()
}

fn staircase_product(r: &mut FactoredRatio, m: usize) {
    for i in 0..m as u64 {
        r.mul_factorial(i).div_factorial(2 * i + 1);
    }
}

/// Number of SYT of `[m+4] \ (1)`.
pub fn count_stair_minus_corner(m: usize) -> Result<ExactCount> {
    let big_n = (m + 3) * (m + 6) / 2;
    let mut r = FactoredRatio::one();
    r.mul_factorial(big_n as u64)
        .mul_int(4 * (2 * m as i64 + 3))
        .div_factorial(4 * m as u64 + 9)
        .div_int(m as i64 + 3);
    staircase_product(&mut r, m);
    r.to_integer()
}

/// Number of SYT of `[m+4] \ (2, 1)`.
pub fn count_stair_minus_substaircase2(m: usize) -> Result<ExactCount> {
    let big_n = (m + 2) * (m + 7) / 2;
    let mut r = FactoredRatio::one();
    r.mul_factorial(big_n as u64)
        .mul_int(2)
        .div_factorial(4 * m as u64 + 7)
        .div_int(m as i64 + 2);
    staircase_product(&mut r, m);
    r.to_integer()
}

/// Number of SYT of `((n+k)^{m+k}) \ (k^{k-1}, k-1)`.
pub fn count_rect_minus_square_plus1(m: usize, n: usize, k: usize) -> Result<ExactCount> {
    require(k >= 1, "k must be positive")?;
    let big_n = m * n + m * k + n * k + 1;
    let mut r = FactoredRatio::one();
    r.mul_factorial(big_n as u64)
        .mul_factorial((m * k) as u64)
        .mul_factorial((n * k) as u64)
        .div_factorial((m * k + n * k + 1) as u64)
        .mul_superfactorial(m as u64)
        .mul_superfactorial(n as u64)
        .mul_superfactorial(k as u64)
        .div_superfactorial((m + n + k) as u64);
    let v = r.to_integer()?;
    debug_assert_eq!(Ok(&v), theorem_rect_sum(&Partition::empty(), k, m, n).as_ref());
    Ok(v)
}

/// Number of SYT of `((n+k)^{m+k}) \ ((k-1)^{k-1})`, `k >= 2`.
pub fn count_rect_minus_square(m: usize, n: usize, k: usize) -> Result<ExactCount> {
    require(k >= 2, "k must be at least 2")?;
    let big_n = m * n + m * k + n * k + 2 * k - 1;
    let mut r = FactoredRatio::one();
    r.mul_factorial(big_n as u64)
        .mul_factorial((m * k + k - 1) as u64)
        .mul_factorial((n * k + k - 1) as u64)
        .mul_factorial((m + n + 1) as u64)
        .mul_int(k as i64)
        .div_factorial((m * k + n * k + 2 * k - 1) as u64)
        .mul_superfactorial(m as u64)
        .mul_superfactorial(n as u64)
        .mul_superfactorial(k as u64 - 1)
        .div_superfactorial((m + n + k + 1) as u64);
    let v = r.to_integer()?;
    debug_assert_eq!(
        Ok(&v),
        theorem_rect_sum(&Partition::rectangle(k - 1, 1), k, m, n).as_ref()
    );
    Ok(v)
}

/// Number of SYT of `((n+2)^{m+2}) \ (2, 1)`.
pub fn count_rect_minus_substaircase2(m: usize, n: usize) -> Result<ExactCount> {
    let big_n = m * n + 2 * m + 2 * n + 1;
    let mut r = FactoredRatio::one();
    r.mul_factorial(big_n as u64)
        .mul_factorial(2 * m as u64)
        .mul_factorial(2 * n as u64)
        .div_factorial((2 * m + 2 * n + 1) as u64)
        .mul_superfactorial(m as u64)
        .mul_superfactorial(n as u64)
        .div_superfactorial((m + n + 2) as u64);
    r.to_integer()
}

/// Number of SYT of `((n+2)^{m+2}) \ (1)`.
pub fn count_rect_minus_corner(m: usize, n: usize) -> Result<ExactCount> {
    let big_n = m * n + 2 * m + 2 * n + 3;
    let mut r = FactoredRatio::one();
    r.mul_factorial(big_n as u64)
        .mul_factorial(2 * m as u64 + 1)
        .mul_factorial(2 * n as u64 + 1)
        .mul_int(2)
        .div_factorial((2 * m + 2 * n + 3) as u64)
        .div_int((m + n + 2) as i64)
        .mul_superfactorial(m as u64)
        .mul_superfactorial(n as u64)
        .div_superfactorial((m + n + 2) as u64);
    r.to_integer()
}

/// CONJECTURE: the number of SYT of `(n^n) \ (2)`, `n >= 2`. This value is
/// not proved; compare with the oracle before relying on it.
pub fn conjecture_square_minus_two(n: usize) -> Result<ExactCount> {
    require(n >= 2, "n must be at least 2")?;
    let mut r = FactoredRatio::one();
    r.mul_factorial((n * n - 2) as u64)
        .mul_factorial(3 * n as u64 - 4)
        .mul_factorial(3 * n as u64 - 4)
        .mul_int(6)
        .div_factorial(6 * n as u64 - 8)
        .div_factorial(2 * n as u64 - 2)
        .div_factorial(n as u64 - 2)
        .div_factorial(n as u64 - 2)
        .mul_superfactorial(n as u64 - 2)
        .mul_superfactorial(n as u64 - 2)
        .div_superfactorial(2 * n as u64 - 4);
    r.to_integer()
}

/// A truncated shape with a closed-form count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `[m+2k] \ (k^{k-1}, k-1)`
    StairMinusSquarePlus1 { m: usize, k: usize },
    /// `[m+2k] \ ((k-1)^{k-1})`
    StairMinusSquare { m: usize, k: usize },
    /// `[m+4] \ (1)`
    StairMinusCorner { m: usize },
    /// `[m+4] \ (2,1)`
    StairMinusSubstaircase2 { m: usize },
    /// `((n+k)^{m+k}) \ (k^{k-1}, k-1)`
    RectMinusSquarePlus1 { m: usize, n: usize, k: usize },
    /// `((n+k)^{m+k}) \ ((k-1)^{k-1})`
    RectMinusSquare { m: usize, n: usize, k: usize },
    /// `((n+2)^{m+2}) \ (1)`
    RectMinusCorner { m: usize, n: usize },
    /// `(n^n) \ (2)`, conjectural.
    SquareMinusTwo { n: usize },
}

/// `(k^{k-1}, k-1)`
pub fn kappa_square_plus1(k: usize) -> Partition {
    let mut parts = vec![k; k.saturating_sub(1)];
    parts.push(k.saturating_sub(1));
    Partition::new(parts).expect("weakly decreasing")
}

/// `((k-1)^{k-1})`
pub fn kappa_square(k: usize) -> Partition {
    Partition::rectangle(k - 1, k - 1)
}

impl Family {
    /// The shape counted by this family.
    pub fn shape(&self) -> ShapeSpec {
        use Family::*;
        match *self {
            StairMinusSquarePlus1 { m, k } => ShapeSpec::Staircase { m: m + 2 * k, kappa: kappa_square_plus1(k) },
            StairMinusSquare { m, k } => ShapeSpec::Staircase { m: m + 2 * k, kappa: kappa_square(k) },
            StairMinusCorner { m } => ShapeSpec::Staircase { m: m + 4, kappa: kappa_square(2) },
            StairMinusSubstaircase2 { m } => ShapeSpec::Staircase { m: m + 4, kappa: kappa_square_plus1(2) },
            RectMinusSquarePlus1 { m, n, k } => {
                ShapeSpec::Rectangle { m: m + k, n: n + k, kappa: kappa_square_plus1(k) }
            }
            RectMinusSquare { m, n, k } => ShapeSpec::Rectangle { m: m + k, n: n + k, kappa: kappa_square(k) },
            RectMinusCorner { m, n } => ShapeSpec::Rectangle { m: m + 2, n: n + 2, kappa: kappa_square(2) },
            SquareMinusTwo { n } => ShapeSpec::Rectangle { m: n, n, kappa: Partition::rectangle(1, 2) },
        }
    }

    /// Number of cells of the shape.
    pub fn size(&self) -> usize {
        use Family::*;
        match *self {
            StairMinusSquarePlus1 { m, k } => binom2(m + 2 * k + 1) + 1 - k * k,
            StairMinusSquare { m, k } => binom2(m + 2 * k + 1) - (k - 1) * (k - 1),
            StairMinusCorner { m } => (m + 3) * (m + 6) / 2,
            StairMinusSubstaircase2 { m } => (m + 2) * (m + 7) / 2,
            RectMinusSquarePlus1 { m, n, k } => m * n + m * k + n * k + 1,
            RectMinusSquare { m, n, k } => m * n + m * k + n * k + 2 * k - 1,
            RectMinusCorner { m, n } => m * n + 2 * m + 2 * n + 3,
            SquareMinusTwo { n } => n * n - 2,
        }
    }

    /// The closed-form count.
    pub fn count(&self) -> Result<ExactCount> {
        use Family::*;
        match *self {
            StairMinusSquarePlus1 { m, k } => count_stair_minus_square_plus1(m, k),
            StairMinusSquare { m, k } => count_stair_minus_square(m, k),
            StairMinusCorner { m } => count_stair_minus_corner(m),
            StairMinusSubstaircase2 { m } => count_stair_minus_substaircase2(m),
            RectMinusSquarePlus1 { m, n, k } => count_rect_minus_square_plus1(m, n, k),
            RectMinusSquare { m, n, k } => count_rect_minus_square(m, n, k),
            RectMinusCorner { m, n } => count_rect_minus_corner(m, n),
            SquareMinusTwo { n } => conjecture_square_minus_two(n),
        }
    }

    /// Whether the closed form is only conjectured.
    pub fn is_conjecture(&self) -> bool {
        matches!(self, Family::SquareMinusTwo { .. })
    }

    /// Short family name.
    pub fn name(&self) -> &'static str {
        use Family::*;
        match self {
            StairMinusSquarePlus1 { .. } => "stair-sq+1",
            StairMinusSquare { .. } => "stair-sq",
            StairMinusCorner { .. } => "stair-corner",
            StairMinusSubstaircase2 { .. } => "stair-sub2",
            RectMinusSquarePlus1 { .. } => "rect-sq+1",
            RectMinusSquare { .. } => "rect-sq",
            RectMinusCorner { .. } => "rect-corner",
            SquareMinusTwo { .. } => "square-minus-two",
        }
    }

    /// Parameters as `key=value` pairs separated by commas.
    pub fn params(&self) -> String {
        use Family::*;
        match *self {
            StairMinusSquarePlus1 { m, k } | StairMinusSquare { m, k } => format!("m={m},k={k}"),
            StairMinusCorner { m } | StairMinusSubstaircase2 { m } => format!("m={m}"),
            RectMinusSquarePlus1 { m, n, k } | RectMinusSquare { m, n, k } => format!("m={m},n={n},k={k}"),
            RectMinusCorner { m, n } => format!("m={m},n={n}"),
            SquareMinusTwo { n } => format!("n={n}"),
        }
    }

    /// Recognizes a truncated shape belonging to one of the families. The
    /// most specific family wins: `[m+4] \ (1)` is reported as a corner
    /// rather than as `k = 2` of the square family.
    pub fn detect(spec: &ShapeSpec) -> Option<Family> {
        match spec {
            ShapeSpec::Staircase { m: size, kappa } => {
                let k = square_plus1_side(kappa).or_else(|| square_side(kappa))?;
                let m = size.checked_sub(2 * k)?;
                let is_plus1 = square_plus1_side(kappa).is_some();
                Some(match (is_plus1, k) {
                    (false, 2) => Family::StairMinusCorner { m },
                    (true, 2) => Family::StairMinusSubstaircase2 { m },
                    (true, _) => Family::StairMinusSquarePlus1 { m, k },
                    (false, _) => Family::StairMinusSquare { m, k },
                })
            }
            ShapeSpec::Rectangle { m: rows, n: cols, kappa } => {
                if kappa.parts() == [2] && rows == cols && *rows >= 2 {
                    return Some(Family::SquareMinusTwo { n: *rows });
                }
                let k = square_plus1_side(kappa).or_else(|| square_side(kappa))?;
                let m = rows.checked_sub(k)?;
                let n = cols.checked_sub(k)?;
                let is_plus1 = square_plus1_side(kappa).is_some();
                Some(match (is_plus1, k) {
                    (false, 2) => Family::RectMinusCorner { m, n },
                    (true, _) => Family::RectMinusSquarePlus1 { m, n, k },
                    (false, _) => Family::RectMinusSquare { m, n, k },
                })
            }
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.name(), self.params())
    }
}

/// `k >= 2` with `kappa = (k^{k-1}, k-1)`.
fn square_plus1_side(kappa: &Partition) -> Option<usize> {
    let k = kappa.len();
    (k >= 2 && kappa == &kappa_square_plus1(k)).then_some(k)
}

/// `k >= 2` with `kappa = ((k-1)^{k-1})`.
fn square_side(kappa: &Partition) -> Option<usize> {
    let k = kappa.len() + 1;
    (k >= 2 && kappa == &kappa_square(k)).then_some(k)
}

/// A closed-form count for `spec` when one is known: plain ordinary,
/// shifted, staircase and rectangular shapes, and every [`Family`].
pub fn formula_count(spec: &ShapeSpec) -> Option<Result<ExactCount>> {
    match spec {
        ShapeSpec::Ordinary(lam) => Some(Ok(frobenius_young(lam))),
        ShapeSpec::Shifted(lam) => Some(Ok(schur_count(lam))),
        ShapeSpec::Staircase { m, kappa } if kappa.is_empty() => Some(Ok(staircase_count(*m))),
        ShapeSpec::Rectangle { m, n, kappa } if kappa.is_empty() => Some(Ok(rectangle_count(*m, *n))),
        _ => Family::detect(spec).map(|f| f.count()),
    }
}
