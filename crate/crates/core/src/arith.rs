//! Exact arithmetic: factorial ratios as prime-exponent vectors, binomials,
//! and integer factorization.
//!
//! Every closed-form count in this crate is assembled as a [`FactoredRatio`]
//! and only turned into an integer at the end, so a formula that is not an
//! integer fails loudly with [`Error::NotAnInteger`].

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Div, Mul};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use once_cell::race::OnceBox;

use crate::{Error, Result};

/// Arbitrary-precision nonnegative count.
pub type ExactCount = BigUint;

/// All primes `<= n`.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

/// Exponent of the prime `p` in `n!` (Legendre).
pub fn legendre(n: u64, p: u64) -> u64 {
    let mut e = 0;
    let mut q = n / p;
    while q > 0 {
        e += q;
        q /= p;
    }
    e
}

/// A nonzero rational number stored as a sign and a sparse map from primes
/// to signed exponents.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FactoredRatio {
    negative: bool,
    exps: BTreeMap<u64, i64>,
}

impl FactoredRatio {
    pub fn one() -> Self {
        Self::default()
    }

    /// `v` as a ratio. Panics on zero, which has no prime-exponent form.
    pub fn from_int(v: i64) -> Self {
        let mut r = Self::one();
        r.mul_int(v);
        r
    }

    fn add_exp(&mut self, p: u64, e: i64) {
        if e == 0 {
            return;
        }
        let slot = self.exps.entry(p).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.exps.remove(&p);
        }
    }

    fn add_small(&mut self, v: u64, sign: i64) {
        assert!(v != 0, "zero has no factored form");
        let mut v = v;
        let mut p = 2;
        while p * p <= v {
            let mut e = 0;
            while v.is_multiple_of(p) {
                v /= p;
                e += 1;
            }
            self.add_exp(p, sign * e);
            p += if p == 2 { 1 } else { 2 };
        }
        if v > 1 {
            self.add_exp(v, sign);
        }
    }

    /// Multiplies by a nonzero integer.
    pub fn mul_int(&mut self, v: i64) -> &mut Self {
        self.negative ^= v < 0;
        self.add_small(v.unsigned_abs(), 1);
        self
    }

    /// Divides by a nonzero integer.
    pub fn div_int(&mut self, v: i64) -> &mut Self {
        self.negative ^= v < 0;
        self.add_small(v.unsigned_abs(), -1);
        self
    }

    fn add_factorial(&mut self, n: u64, sign: i64) {
        for p in primes_up_to(n) {
            self.add_exp(p, sign * legendre(n, p) as i64);
        }
    }

    pub fn mul_factorial(&mut self, n: u64) -> &mut Self {
        self.add_factorial(n, 1);
        self
    }

    pub fn div_factorial(&mut self, n: u64) -> &mut Self {
        self.add_factorial(n, -1);
        self
    }

    /// Multiplies by `F_m = 0! 1! ... (m-1)!`.
    pub fn mul_superfactorial(&mut self, m: u64) -> &mut Self {
        for i in 0..m {
            self.add_factorial(i, 1);
        }
        self
    }

    pub fn div_superfactorial(&mut self, m: u64) -> &mut Self {
        for i in 0..m {
            self.add_factorial(i, -1);
        }
        self
    }

    pub fn recip(&self) -> Self {
        FactoredRatio {
            negative: self.negative,
            exps: self.exps.iter().map(|(&p, &e)| (p, -e)).collect(),
        }
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    /// Nonzero exponents by increasing prime.
    pub fn exponents(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.exps.iter().map(|(&p, &e)| (p, e))
    }

    pub fn is_integer(&self) -> bool {
        !self.negative && self.exps.values().all(|&e| e >= 0)
    }

    fn product(&self, sign: i64) -> BigUint {
        let mut acc = BigUint::one();
        for (&p, &e) in &self.exps {
            if e.signum() == sign {
                acc *= BigUint::from(p).pow(e.unsigned_abs() as u32);
            }
        }
        acc
    }

    /// Absolute value of the reduced numerator.
    pub fn numerator(&self) -> BigUint {
        self.product(1)
    }

    /// Reduced denominator.
    pub fn denominator(&self) -> BigUint {
        self.product(-1)
    }

    /// The integer value; `NotAnInteger` if any exponent is negative or the
    /// sign is negative.
    pub fn to_integer(&self) -> Result<ExactCount> {
        if !self.is_integer() {
            return Err(Error::NotAnInteger);
        }
        Ok(self.numerator())
    }
}

impl Mul<&FactoredRatio> for &FactoredRatio {
    type Output = FactoredRatio;

    fn mul(self, rhs: &FactoredRatio) -> FactoredRatio {
        let mut out = self.clone();
        out.negative = self.negative != rhs.negative;
        for (&p, &e) in &rhs.exps {
            out.add_exp(p, e);
        }
        out
    }
}

impl Mul for FactoredRatio {
    type Output = FactoredRatio;

    fn mul(self, rhs: FactoredRatio) -> FactoredRatio {
        &self * &rhs
    }
}

impl Div<&FactoredRatio> for &FactoredRatio {
    type Output = FactoredRatio;

    fn div(self, rhs: &FactoredRatio) -> FactoredRatio {
        let mut out = self.clone();
        out.negative = self.negative != rhs.negative;
        for (&p, &e) in &rhs.exps {
            out.add_exp(p, -e);
        }
        out
    }
}

impl Div for FactoredRatio {
    type Output = FactoredRatio;

    fn div(self, rhs: FactoredRatio) -> FactoredRatio {
        &self / &rhs
    }
}

impl fmt::Display for FactoredRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        let den = self.denominator();
        if den.is_one() {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "{}/{}", self.numerator(), den)
        }
    }
}

/// `prod a! / prod b!` as a prime-exponent vector.
pub fn factorial_ratio(numerators: &[u64], denominators: &[u64]) -> FactoredRatio {
    let mut r = FactoredRatio::one();
    for &a in numerators {
        r.mul_factorial(a);
    }
    for &b in denominators {
        r.div_factorial(b);
    }
    r
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> ExactCount {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = k as u64;
    factorial_ratio(&[n], &[k, n - k])
        .to_integer()
        .expect("binomial coefficients are integers")
}

/// `F_m = prod_{i=0}^{m-1} i!`.
pub fn superfactorial(m: u64) -> ExactCount {
    let mut r = FactoredRatio::one();
    r.mul_superfactorial(m);
    r.numerator()
}

/// Trial division runs over primes below this bound.
pub const TRIAL_DIVISION_BOUND: u32 = 1_000_000;

/// Iterations of Pollard rho allowed per attempt on cofactors wider than 127
/// bits, where only generic big-integer arithmetic is available.
const BIG_RHO_BUDGET: u64 = 1 << 20;

static SMALL_PRIMES: OnceBox<Vec<u32>> = OnceBox::new();

fn small_primes() -> &'static [u32] {
    SMALL_PRIMES.get_or_init(|| {
        let v: Vec<u32> = primes_up_to(TRIAL_DIVISION_BOUND as u64 - 1)
            .into_iter()
            .map(|p| p as u32)
            .collect();
        alloc::boxed::Box::new(v)
    })
}

/// Prime factorization of a positive integer.
///
/// Primes below [`TRIAL_DIVISION_BOUND`] are found by trial division; larger
/// cofactors are split with Brent's variant of Pollard rho. Primality of the
/// pieces is decided by Miller-Rabin, which is deterministic below `2^64`
/// and a strong probable-prime test (20 fixed bases) above. Cofactors wider
/// than 127 bits that resist splitting within a fixed effort budget are kept
/// in [`Factorization::unresolved`]; each of their prime factors exceeds the
/// trial-division bound.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(BigUint, u32)>,
    unresolved: Vec<BigUint>,
}

impl Factorization {
    /// `(prime, exponent)` pairs, primes increasing.
    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    /// Composite cofactors that could not be split.
    pub fn unresolved(&self) -> &[BigUint] {
        &self.unresolved
    }

    pub fn is_complete(&self) -> bool {
        self.unresolved.is_empty()
    }

    /// Largest listed prime, 1 for the empty factorization.
    pub fn largest_prime(&self) -> BigUint {
        self.factors.last().map(|(p, _)| p.clone()).unwrap_or_else(BigUint::one)
    }

    /// Product of all factors, including unresolved cofactors.
    pub fn value(&self) -> BigUint {
        let mut v: BigUint = self.factors.iter().map(|(p, e)| p.pow(*e)).product();
        for u in &self.unresolved {
            v *= u;
        }
        v
    }

    /// Whether no prime factor exceeds `bound`.
    pub fn is_smooth(&self, bound: &BigUint) -> bool {
        self.largest_prime() <= *bound && self.unresolved.iter().all(|u| u <= bound)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() && self.unresolved.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for (p, e) in &self.factors {
            if !first {
                f.write_str(" * ")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        for u in &self.unresolved {
            if !first {
                f.write_str(" * ")?;
            }
            first = false;
            write!(f, "[{u}]")?;
        }
        Ok(())
    }
}

/// Factors `v >= 1`.
pub fn factorize(v: &ExactCount) -> Factorization {
    assert!(!v.is_zero(), "factorize requires a positive integer");
    let mut found: BTreeMap<BigUint, u32> = BTreeMap::new();
    let mut unresolved = Vec::new();
    let cofactor = trial_divide(v.clone(), &mut found);
    if !cofactor.is_one() {
        split(cofactor, &mut found, &mut unresolved);
    }
    unresolved.sort();
    Factorization { factors: found.into_iter().collect(), unresolved }
}

/// True iff no prime factor of `v` exceeds `bound`.
pub fn is_smooth(v: &ExactCount, bound: u64) -> bool {
    assert!(!v.is_zero(), "is_smooth requires a positive integer");
    if bound < TRIAL_DIVISION_BOUND as u64 {
        let mut rest = v.clone();
        for &p in small_primes().iter().take_while(|&&p| p as u64 <= bound) {
            while (&rest % p).is_zero() {
                rest /= p;
            }
            if rest.is_one() {
                break;
            }
        }
        return rest.is_one();
    }
    factorize(v).is_smooth(&BigUint::from(bound))
}

fn trial_divide(mut rest: BigUint, found: &mut BTreeMap<BigUint, u32>) -> BigUint {
    let primes = small_primes();
    let mut i = 0;
    while i < primes.len() {
        if let Some(small) = rest.to_u128() {
            let rest = trial_divide_u128(small, &primes[i..], found);
            return BigUint::from(rest);
        }
        let p = primes[i];
        let mut e = 0;
        while (&rest % p).is_zero() {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            *found.entry(BigUint::from(p)).or_insert(0) += e;
        }
        i += 1;
    }
    rest
}

fn trial_divide_u128(mut rest: u128, primes: &[u32], found: &mut BTreeMap<BigUint, u32>) -> u128 {
    let mut take = |rest: &mut u128, p: u64| {
        let mut e = 0;
        while (*rest).is_multiple_of(p as u128) {
            *rest /= p as u128;
            e += 1;
        }
        if e > 0 {
            *found.entry(BigUint::from(p)).or_insert(0) += e;
        }
    };
    // Three primes below 2^20 multiply to less than 2^60: one wide remainder
    // per batch, then cheap narrow ones.
    for batch in primes.chunks(3) {
        let first = batch[0] as u128;
        if first * first > rest {
            break;
        }
        let modulus: u64 = batch.iter().map(|&p| p as u64).product();
        let r = (rest % modulus as u128) as u64;
        for &p in batch {
            if r.is_multiple_of(p as u64) {
                take(&mut rest, p as u64);
            }
        }
    }
    rest
}

fn split(n: BigUint, found: &mut BTreeMap<BigUint, u32>, unresolved: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(&n) {
        *found.entry(n).or_insert(0) += 1;
        return;
    }
    let d = match n.to_u128() {
        Some(small) if small < 1 << 63 => rho_u64(small as u64).map(BigUint::from),
        Some(small) if small < 1 << 127 => rho_u128(small).map(BigUint::from),
        _ => rho_big(&n),
    };
    match d {
        Some(d) => {
            let q = &n / &d;
            split(d, found, unresolved);
            split(q, found, unresolved);
        }
        None => unresolved.push(n),
    }
}

const MR_BASES: [u64; 20] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71];

/// Miller-Rabin with the first 12 primes as bases below `2^64`
/// (deterministic there) and the first 20 above.
pub fn is_probable_prime(n: &BigUint) -> bool {
    match n.to_u128() {
        Some(small) if small < 1 << 127 => is_prime_u128(small),
        _ => is_prime_big(n),
    }
}

fn is_prime_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n == p as u128 {
            return true;
        }
        if n.is_multiple_of(p as u128) {
            return false;
        }
    }
    let mont = Montgomery::new(n);
    let bases = if n < 1 << 64 { &MR_BASES[..12] } else { &MR_BASES[..] };
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    let one = mont.one();
    let minus_one = n - one;
    'bases: for &a in bases {
        let mut x = mont.pow(mont.to_mont(a as u128), d);
        if x == one || x == minus_one {
            continue;
        }
        for _ in 1..s {
            x = mont.mul(x, x);
            if x == minus_one {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn is_prime_big(n: &BigUint) -> bool {
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'bases: for &a in &MR_BASES {
        let a = BigUint::from(a);
        if (n % &a).is_zero() {
            return *n == a;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// 256-bit product of two `u128` values as `(high, low)`.
fn mul_wide(a: u128, b: u128) -> (u128, u128) {
    let (a0, a1) = (a as u64 as u128, a >> 64);
    let (b0, b1) = (b as u64 as u128, b >> 64);
    let ll = a0 * b0;
    let lh = a0 * b1;
    let hl = a1 * b0;
    let hh = a1 * b1;
    let mid = (ll >> 64) + (lh as u64 as u128) + (hl as u64 as u128);
    let lo = (ll as u64 as u128) | (mid << 64);
    let hi = hh + (lh >> 64) + (hl >> 64) + (mid >> 64);
    (hi, lo)
}

/// Montgomery arithmetic modulo an odd `n < 2^127`, with `R = 2^128`.
struct Montgomery {
    n: u128,
    n_neg_inv: u128,
    r2: u128,
}

impl Montgomery {
    fn new(n: u128) -> Self {
        debug_assert!(n & 1 == 1 && n < 1 << 127);
        let mut inv = n;
        for _ in 0..7 {
            inv = inv.wrapping_mul(2u128.wrapping_sub(n.wrapping_mul(inv)));
        }
        let r1 = (u128::MAX % n + 1) % n;
        let mut r2 = r1;
        for _ in 0..128 {
            r2 <<= 1;
            if r2 >= n {
                r2 -= n;
            }
        }
        Montgomery { n, n_neg_inv: inv.wrapping_neg(), r2 }
    }

    fn mul(&self, a: u128, b: u128) -> u128 {
        let (hi, lo) = mul_wide(a, b);
        let m = lo.wrapping_mul(self.n_neg_inv);
        let (mh, ml) = mul_wide(m, self.n);
        let carry = lo.overflowing_add(ml).1 as u128;
        let t = hi + mh + carry;
        if t >= self.n {
            t - self.n
        } else {
            t
        }
    }

    fn to_mont(&self, a: u128) -> u128 {
        self.mul(a % self.n, self.r2)
    }

    fn one(&self) -> u128 {
        self.to_mont(1)
    }

    fn pow(&self, mut base: u128, mut e: u128) -> u128 {
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn add(&self, a: u128, b: u128) -> u128 {
        let s = a + b;
        if s >= self.n {
            s - self.n
        } else {
            s
        }
    }
}

/// Montgomery arithmetic modulo an odd `n < 2^63`, with `R = 2^64`.
struct Montgomery64 {
    n: u64,
    n_neg_inv: u64,
}

impl Montgomery64 {
    fn new(n: u64) -> Self {
        debug_assert!(n & 1 == 1 && n < 1 << 63);
        let mut inv = n;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(n.wrapping_mul(inv)));
        }
        Montgomery64 { n, n_neg_inv: inv.wrapping_neg() }
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        let t = a as u128 * b as u128;
        let m = (t as u64).wrapping_mul(self.n_neg_inv);
        let u = ((t + m as u128 * self.n as u128) >> 64) as u64;
        if u >= self.n {
            u - self.n
        } else {
            u
        }
    }

    fn to_mont(&self, a: u64) -> u64 {
        (((a as u128) << 64) % self.n as u128) as u64
    }
}

/// A nontrivial factor of the odd composite `n < 2^63`.
fn rho_u64(n: u64) -> Option<u64> {
    if n.is_multiple_of(2) {
        return Some(2);
    }
    let mont = Montgomery64::new(n);
    for c in 1..64u64 {
        let c = mont.to_mont(c);
        let f = |x: u64| {
            let s = mont.mul(x, x) + c;
            if s >= n {
                s - n
            } else {
                s
            }
        };
        let mut y = mont.to_mont(2);
        let mut x = y;
        let mut ys = y;
        let mut q = mont.to_mont(1);
        let mut g = 1u64;
        let mut r = 1u64;
        const BATCH: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mont.mul(q, x.abs_diff(y));
                }
                g = q.gcd(&n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return Some(g);
        }
    }
    None
}

/// A nontrivial factor of the odd composite `n < 2^127`.
fn rho_u128(n: u128) -> Option<u128> {
    if n.is_multiple_of(2) {
        return Some(2);
    }
    let mont = Montgomery::new(n);
    for c in 1..64u128 {
        let c = mont.to_mont(c);
        let f = |x: u128| mont.add(mont.mul(x, x), c);
        let mut y = mont.to_mont(2);
        let mut x = y;
        let mut ys = y;
        let mut q = mont.one();
        let mut g = 1u128;
        let mut r = 1u64;
        const BATCH: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mont.mul(q, x.abs_diff(y));
                }
                g = q.gcd(&n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return Some(g);
        }
    }
    None
}

fn rho_big(n: &BigUint) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    let one = BigUint::one();
    for c in 1..4u32 {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut q = one.clone();
        let mut g = one.clone();
        let mut r = 1u64;
        let mut spent = 0u64;
        while g.is_one() && spent < BIG_RHO_BUDGET {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..128.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += 128;
            }
            spent += 2 * r;
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if !g.is_one() && g != *n {
            return Some(g);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn big(v: u128) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn factorial_ratio_examples() {
        assert_eq!(factorial_ratio(&[4], &[2, 2]).to_integer().unwrap(), big(6));
        assert_eq!(factorial_ratio(&[7], &[7]), FactoredRatio::one());
        let r = factorial_ratio(&[10], &[5, 5]);
        assert_eq!(r.exponents().collect::<Vec<_>>(), vec![(2, 2), (3, 2), (7, 1)]);
        assert_eq!(r.to_integer().unwrap(), big(252));
    }

    #[test]
    fn to_integer_contract() {
        assert_eq!(FactoredRatio::one().to_integer().unwrap(), big(1));
        assert_eq!(FactoredRatio::from_int(24).to_integer().unwrap(), big(24));
        let mut mixed = FactoredRatio::from_int(8);
        mixed.div_int(3);
        assert_eq!(mixed.to_integer(), Err(Error::NotAnInteger));
        assert_eq!(FactoredRatio::from_int(-2).to_integer(), Err(Error::NotAnInteger));
    }

    #[test]
    fn ratio_arithmetic() {
        let a = factorial_ratio(&[6], &[3]);
        let b = FactoredRatio::from_int(120);
        assert_eq!(&a / &b, FactoredRatio::one());
        assert_eq!((&a * &a.recip()), FactoredRatio::one());
        let mut half = FactoredRatio::one();
        half.div_int(2);
        assert_eq!(half.numerator(), big(1));
        assert_eq!(half.denominator(), big(2));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), big(6));
        assert_eq!(binomial(9, 0), big(1));
        assert_eq!(binomial(3, -1), big(0));
        assert_eq!(binomial(3, 4), big(0));
        // t1 = 1, t2 = 0, N = 2: 1 + 2 + 3
        assert_eq!(binomial(1 + 2 + 1, 1 + 1), big(6));
    }

    #[test]
    fn superfactorial_examples() {
        assert_eq!(superfactorial(0), big(1));
        assert_eq!(superfactorial(4), big(12));
        assert_eq!(superfactorial(5), big(288));
    }

    #[test]
    fn factorize_small_values() {
        let f = factorize(&big(1));
        assert!(f.factors().is_empty());
        assert_eq!(f.largest_prime(), big(1));
        let f = factorize(&big(12));
        assert_eq!(f.factors(), &[(big(2), 2), (big(3), 1)]);
        assert_eq!(f.to_string(), "2^2 * 3");
    }

    #[test]
    fn factorize_needs_rho() {
        // two primes above the trial-division bound
        let p = 1_000_003u128;
        let q = 998_244_353_000_000_007u128; // not necessarily prime: only reconstruction is checked
        let v = p * q;
        let f = factorize(&big(v));
        assert_eq!(f.value(), big(v));
        assert!(f.is_complete());
        for (prime, _) in f.factors() {
            assert!(is_probable_prime(prime));
        }
        let semiprime = 1_000_000_007u128 * 1_000_000_009u128;
        let f = factorize(&big(semiprime));
        assert_eq!(f.factors(), &[(big(1_000_000_007), 1), (big(1_000_000_009), 1)]);
    }

    #[test]
    fn factorize_wide_values() {
        // 2^127 - 1 is prime, times a small composite
        let m127 = (BigUint::one() << 127u32) - 1u32;
        let v = &m127 * 30u32;
        let f = factorize(&v);
        assert_eq!(f.largest_prime(), m127);
        assert_eq!(f.value(), v);
    }

    #[test]
    fn primality() {
        for (n, expected) in [(2u128, true), (9, false), (561, false), (1_000_000_007, true)] {
            assert_eq!(is_probable_prime(&big(n)), expected, "{n}");
        }
        // strong pseudoprime to bases 2..37 would need > 3e24; a Carmichael number check
        assert!(!is_probable_prime(&big(3_215_031_751)));
        assert!(is_probable_prime(&big((1u128 << 89) - 1)));
        assert!(is_probable_prime(&((BigUint::one() << 521u32) - 1u32)));
    }

    #[test]
    fn smoothness() {
        assert!(is_smooth(&big(1), 1));
        assert!(is_smooth(&big(30), 5));
        assert!(!is_smooth(&big(30), 4));
        assert!(!is_smooth(&big(2 * 5333), 40));
        assert!(is_smooth(&big(1_000_003 * 4), 2_000_000));
    }

    #[test]
    fn montgomery_matches_plain_arithmetic() {
        let n = (1u128 << 100) + 277;
        let mont = Montgomery::new(n);
        let (a, b) = (123_456_789_123_456_789u128, (1u128 << 99) + 5);
        let prod = mont.mul(mont.to_mont(a), mont.to_mont(b));
        let back = mont.mul(prod, 1);
        let expected = (big(a) * big(b)) % big(n);
        assert_eq!(big(back), expected);
    }

    #[test]
    fn narrow_montgomery_and_rho() {
        let n = (1u64 << 62) + 135;
        let mont = Montgomery64::new(n | 1);
        let n = n | 1;
        let (a, b) = (987_654_321_987u64, (1u64 << 61) + 9);
        let back = mont.mul(mont.mul(mont.to_mont(a), mont.to_mont(b)), 1);
        assert_eq!(back as u128, (a as u128 * b as u128) % n as u128);
        let d = rho_u64(1_000_003 * 999_983).unwrap();
        assert!(d == 1_000_003 || d == 999_983);
    }
}
