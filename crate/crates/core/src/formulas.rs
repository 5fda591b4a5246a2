//! Product formulas for ordinary and shifted shapes, the complement-sum
//! identities and the size-only coefficients that relate them.
//!
//! Every closed form is assembled as a [`FactoredRatio`] and only converted
//! to an integer at the end; a non-integral result is a bug and panics.

use alloc::format;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::arith::{binomial, FactoredRatio};
use crate::shapes::{
    complement_in_rectangle, complement_in_staircase, partitions_in_box, staircase,
    strict_subsets_of_staircase, Partition, StrictPartition,
};
use crate::{Error, ExactCount, Result};

pub(crate) fn integral(r: &FactoredRatio) -> ExactCount {
    r.to_integer().expect("closed form evaluated to a non-integer")
}

/// `f^lam` as a factored ratio.
pub fn frobenius_young_ratio(lam: &Partition) -> FactoredRatio {
    let m = lam.len();
    let parts = lam.parts();
    let mut r = FactoredRatio::one();
    r.mul_factorial(lam.size() as u64);
    for (i, &p) in parts.iter().enumerate() {
        r.div_factorial((p + m - 1 - i) as u64);
    }
    for i in 0..m {
        for j in i + 1..m {
            r.mul_int((parts[i] - parts[j] + j - i) as i64);
        }
    }
    r
}

/// Number of SYT of the Ferrers diagram of `lam`.
pub fn frobenius_young(lam: &Partition) -> ExactCount {
    integral(&frobenius_young_ratio(lam))
}

/// `g^lam` as a factored ratio.
pub fn schur_ratio(lam: &StrictPartition) -> FactoredRatio {
    let parts = lam.parts();
    let mut r = FactoredRatio::one();
    r.mul_factorial(lam.size() as u64);
    for &p in parts {
        r.div_factorial(p as u64);
    }
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            r.mul_int((parts[i] - parts[j]) as i64);
            r.div_int((parts[i] + parts[j]) as i64);
        }
    }
    r
}

/// Number of SYT of the shifted diagram of the strict partition `lam`.
pub fn schur_count(lam: &StrictPartition) -> ExactCount {
    integral(&schur_ratio(lam))
}

/// `g^[m] = M! prod_{i<m} i!/(2i+1)!` with `M = m(m+1)/2`.
pub fn staircase_ratio(m: usize) -> FactoredRatio {
    let mut r = FactoredRatio::one();
    r.mul_factorial((m * (m + 1) / 2) as u64);
    for i in 0..m as u64 {
        r.mul_factorial(i).div_factorial(2 * i + 1);
    }
    r
}

pub fn staircase_count(m: usize) -> ExactCount {
    integral(&staircase_ratio(m))
}

/// `f^(n^m) = (mn)! F_m F_n / F_{m+n}`.
pub fn rectangle_ratio(m: usize, n: usize) -> FactoredRatio {
    let mut r = FactoredRatio::one();
    r.mul_factorial((m * n) as u64)
        .mul_superfactorial(m as u64)
        .mul_superfactorial(n as u64)
        .div_superfactorial((m + n) as u64);
    r
}

pub fn rectangle_count(m: usize, n: usize) -> ExactCount {
    integral(&rectangle_ratio(m, n))
}

fn check_parts_exceed(mu: &StrictPartition, m: usize) -> Result<()> {
    match mu.parts().iter().find(|&&p| p <= m) {
        Some(&part) => Err(Error::PartTooSmall { part, bound: m }),
        None => Ok(()),
    }
}

/// The coefficient `c(mu, t, M - t)` with
/// `g^{mu ∪ lam} g^{mu ∪ lam^c} = c · g^lam g^{lam^c}` for every strict
/// `lam ⊆ [m]` of size `t`.
pub fn coeff_c(mu: &StrictPartition, m: usize, t: usize) -> Result<FactoredRatio> {
    check_parts_exceed(mu, m)?;
    let big_m = m * (m + 1) / 2;
    if t > big_m {
        return Err(Error::InvalidParameter(format!("t = {t} exceeds {big_m}")));
    }
    let s = mu.size();
    let full = mu.union(&staircase(m))?;
    let mut r = &(&schur_ratio(&full) * &schur_ratio(mu)) / &staircase_ratio(m);
    for a in [big_m, s + t, s + big_m - t] {
        r.mul_factorial(a as u64);
    }
    for b in [s + big_m, s, t, big_m - t] {
        r.div_factorial(b as u64);
    }
    Ok(r)
}

/// The coefficient `d(mu, t, mn - t)` with
/// `f^{(mu+(n^k)) ∪ lam} f^{(mu+(m^k)) ∪ lam^c} = d · f^lam f^{lam^c}` for
/// every `lam ⊆ (n^m)` of size `t`. `mu` is read as having `k` parts,
/// padded with zeros.
pub fn coeff_d(mu: &Partition, k: usize, m: usize, n: usize, t: usize) -> Result<FactoredRatio> {
    if mu.len() > k {
        return Err(Error::InvalidParameter(format!("mu has more than {k} parts")));
    }
    if t > m * n {
        return Err(Error::InvalidParameter(format!("t = {t} exceeds {}", m * n)));
    }
    let s = mu.size();
    let wide = mu.sum(&Partition::rectangle(k, m + n));
    let mut r = &frobenius_young_ratio(&wide) * &frobenius_young_ratio(mu);
    for a in [s + n * k + t, s + m * k + m * n - t] {
        r.mul_factorial(a as u64);
    }
    for b in [s + (m + n) * k, s, t, m * n - t] {
        r.div_factorial(b as u64);
    }
    Ok(r)
}

/// `sum g^lam g^{lam^c}` over strict `lam ⊆ [m]` with `|lam| = t`.
pub fn sum_identity_shifted(m: usize, t: usize) -> ExactCount {
    strict_subsets_of_staircase(m)
        .into_iter()
        .filter(|lam| lam.size() == t)
        .map(|lam| {
            let comp = complement_in_staircase(&lam, m).expect("subset of [m]");
            schur_count(&lam) * schur_count(&comp)
        })
        .fold(BigUint::zero(), |acc, x| acc + x)
}

/// `sum f^lam f^{lam^c}` over `lam ⊆ (n^m)` with `|lam| = t`.
pub fn sum_identity_rect(m: usize, n: usize, t: usize) -> ExactCount {
    partitions_in_box(m, n)
        .into_iter()
        .filter(|lam| lam.size() == t)
        .map(|lam| {
            let comp = complement_in_rectangle(&lam, m, n).expect("inside the box");
            frobenius_young(&lam) * frobenius_young(&comp)
        })
        .fold(BigUint::zero(), |acc, x| acc + x)
}

/// Both sides of
/// `sum_{i=0}^{n} C(t1+i, t1) C(t2+n-i, t2) = C(t1+t2+n+1, t1+t2+1)`.
pub fn binomial_identity(t1: u64, t2: u64, n: u64) -> (ExactCount, ExactCount) {
    let lhs = (0..=n)
        .map(|i| binomial(t1 + i, t1 as i64) * binomial(t2 + n - i, t2 as i64))
        .fold(BigUint::zero(), |acc, x| acc + x);
    let rhs = binomial(t1 + t2 + n + 1, (t1 + t2 + 1) as i64);
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn strict(v: &[usize]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn frobenius_young_examples() {
        assert_eq!(frobenius_young(&part(&[1])), n(1));
        assert_eq!(frobenius_young(&part(&[7])), n(1));
        assert_eq!(frobenius_young(&part(&[3, 3])), n(5));
        assert_eq!(frobenius_young(&part(&[3, 3, 2])), n(42));
        assert_eq!(frobenius_young(&Partition::empty()), n(1));
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_count(&strict(&[5])), n(1));
        assert_eq!(schur_count(&strict(&[2, 1])), n(1));
        assert_eq!(schur_count(&strict(&[3, 2, 1])), n(2));
        assert_eq!(schur_count(&strict(&[3, 1])), n(2));
        assert_eq!(schur_count(&StrictPartition::empty()), n(1));
    }

    #[test]
    fn staircase_and_rectangle() {
        assert_eq!(staircase_count(0), n(1));
        assert_eq!(staircase_count(2), n(1));
        assert_eq!(staircase_count(4), n(12));
        for m in 0..=8 {
            assert_eq!(staircase_count(m), schur_count(&staircase(m)));
        }
        assert_eq!(rectangle_count(1, 6), n(1));
        assert_eq!(rectangle_count(2, 2), n(2));
        assert_eq!(rectangle_count(3, 3), n(42));
        for a in 0..=5 {
            for b in 0..=5 {
                assert_eq!(rectangle_count(a, b), frobenius_young(&Partition::rectangle(a, b)));
            }
        }
    }

    #[test]
    fn coeff_c_examples() {
        for m in 0..4 {
            for t in 0..=m * (m + 1) / 2 {
                assert_eq!(coeff_c(&StrictPartition::empty(), m, t).unwrap(), FactoredRatio::one());
            }
        }
        assert_eq!(coeff_c(&strict(&[2]), 1, 0).unwrap(), FactoredRatio::one());
        assert_eq!(
            coeff_c(&strict(&[3, 1]), 2, 1),
            Err(Error::PartTooSmall { part: 1, bound: 2 })
        );
        assert!(matches!(coeff_c(&strict(&[3]), 2, 4), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn coeff_c_relates_complementary_pairs() {
        let mu = strict(&[4, 3]);
        for lam in strict_subsets_of_staircase(2) {
            let comp = complement_in_staircase(&lam, 2).unwrap();
            let c = coeff_c(&mu, 2, lam.size()).unwrap();
            let lhs = schur_count(&mu.union(&lam).unwrap()) * schur_count(&mu.union(&comp).unwrap());
            let rhs = integral(&(&c * &(&schur_ratio(&lam) * &schur_ratio(&comp))));
            assert_eq!(lhs, rhs, "lam = {lam}");
        }
    }

    #[test]
    fn coeff_d_examples() {
        assert_eq!(coeff_d(&Partition::empty(), 0, 0, 0, 0).unwrap(), FactoredRatio::one());
        assert_eq!(coeff_d(&Partition::empty(), 1, 1, 1, 0).unwrap(), FactoredRatio::one());
        // m = n = 2, k = 1, mu = (0), lam = (1): lam^c = (2, 1)
        let lam = part(&[1]);
        let comp = complement_in_rectangle(&lam, 2, 2).unwrap();
        assert_eq!(comp, part(&[2, 1]));
        let d = coeff_d(&Partition::empty(), 1, 2, 2, 1).unwrap();
        let lhs = frobenius_young(&part(&[2]).union(&lam)) * frobenius_young(&part(&[2]).union(&comp));
        let rhs = integral(&(&d * &(&frobenius_young_ratio(&lam) * &frobenius_young_ratio(&comp))));
        assert_eq!(lhs, rhs);
        assert!(coeff_d(&part(&[1, 1]), 1, 1, 1, 0).is_err());
    }

    #[test]
    fn sum_identity_examples() {
        assert_eq!(sum_identity_shifted(0, 0), n(1));
        for t in 0..=6 {
            assert_eq!(sum_identity_shifted(3, t), n(2));
        }
        assert_eq!(sum_identity_rect(1, 1, 0), n(1));
        let per_t: Vec<BigUint> = (0..=4).map(|t| sum_identity_rect(2, 2, t)).collect();
        assert!(per_t.iter().all(|v| *v == n(2)));
    }

    #[test]
    fn binomial_identity_small() {
        assert_eq!(binomial_identity(1, 0, 2), (n(6), n(6)));
        assert_eq!(binomial_identity(0, 0, 5), (n(6), n(6)));
    }
}
