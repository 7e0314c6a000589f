//! Trial-division factorization, p-parts and primitive prime divisors.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

/// A positive integer together with its prime factorization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactoredInteger {
    factors: BTreeMap<u64, u32>,
    value: BigUint,
}

impl FactoredInteger {
    /// Builds from prime/exponent pairs. Zero exponents are dropped.
    pub fn from_factors(pairs: &[(u64, u32)]) -> Result<Self> {
        let mut factors = BTreeMap::new();
        for &(p, e) in pairs {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            if e > 0 {
                *factors.entry(p).or_insert(0) += e;
            }
        }
        let value = factors
            .iter()
            .fold(BigUint::one(), |acc, (&p, &e)| acc * BigUint::from(p).pow(e));
        Ok(FactoredInteger { factors, value })
    }

    pub fn factors(&self) -> &BTreeMap<u64, u32> {
        &self.factors
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn exponent(&self, p: u64) -> u32 {
        self.factors.get(&p).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        f.write_str(&parts.join("·"))
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    true
}

/// Factorization by trial division.
pub fn factorize(n: u64) -> Result<FactoredInteger> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let mut factors = BTreeMap::new();
    let mut m = n;
    let mut d = 2u64;
    while d.saturating_mul(d) <= m {
        while m.is_multiple_of(d) {
            *factors.entry(d).or_insert(0) += 1;
            m /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        *factors.entry(m).or_insert(0) += 1;
    }
    Ok(FactoredInteger {
        factors,
        value: BigUint::from(n),
    })
}

/// Factorization of a big integer whose value fits in 64 bits.
pub fn factorize_big(n: &BigUint) -> Result<FactoredInteger> {
    let v = n
        .to_u64()
        .ok_or_else(|| Error::bound("trial division", u64::MAX, n))?;
    factorize(v)
}

/// `π(n)`
pub fn prime_divisors(n: u64) -> Result<BTreeSet<u64>> {
    Ok(factorize(n)?.factors.keys().copied().collect())
}

/// `|n|_p`, the largest power of `p` dividing `n`.
pub fn p_part(n: u64, p: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Zero);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut part = 1;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
        part *= p;
    }
    Ok(part)
}

/// `∏ p_i^{⌈f_i/2⌉}` for `n = ∏ p_i^{f_i}`.
pub fn half_exponent_divisor(n: &FactoredInteger) -> BigUint {
    n.factors
        .iter()
        .fold(BigUint::one(), |acc, (&p, &f)| acc * BigUint::from(p).pow(f.div_ceil(2)))
}

/// `(p, f)` with `a = p^f`.
pub fn prime_power(a: u64) -> Result<(u64, u32)> {
    if a < 2 {
        return Err(Error::NotPrimePower(a));
    }
    let f = factorize(a)?;
    match f.factors.iter().next() {
        Some((&p, &e)) if f.factors.len() == 1 => Ok((p, e)),
        _ => Err(Error::NotPrimePower(a)),
    }
}

/// Multiplicative order of `a` modulo the prime `r`, which must not divide `a`.
fn order_mod(a: u64, r: u64) -> u64 {
    let a = (a % r) as u128;
    let r128 = r as u128;
    let mut x = a;
    let mut k = 1;
    while x != 1 {
        x = x * a % r128;
        k += 1;
    }
    k
}

/// Primes `r` dividing `a^e − 1` with `ord_r(a) = e`.
fn primes_with_order(a: u64, e: u32) -> Result<BTreeSet<u64>> {
    let value = BigUint::from(a).pow(e) - BigUint::one();
    let mut out = BTreeSet::new();
    let mut rest = value;
    let mut r = 2u64;
    while BigUint::from(r) * BigUint::from(r) <= rest {
        let rb = BigUint::from(r);
        if (&rest % &rb).to_u64() == Some(0) {
            if !a.is_multiple_of(r) && order_mod(a, r) == e as u64 {
                out.insert(r);
            }
            while (&rest % &rb).to_u64() == Some(0) {
                rest /= &rb;
            }
        }
        r += if r == 2 { 1 } else { 2 };
        if r > 1 << 32 {
            return Err(Error::bound("trial division", 1u64 << 32, r));
        }
    }
    if rest > BigUint::one() {
        let r = rest
            .to_u64()
            .ok_or_else(|| Error::bound("trial division", u64::MAX, &rest))?;
        if !a.is_multiple_of(r) && order_mod(a, r) == e as u64 {
            out.insert(r);
        }
    }
    Ok(out)
}

/// `ppd(a, m)` for a prime power `a = p^f`: the primes dividing `p^{fm} − 1`
/// and no `p^i − 1` with `0 < i < fm`. By convention `ppd(2, 6) = {7}`, and
/// the same value is used whenever `(p, fm) = (2, 6)`.
pub fn ppd(a: u64, m: u32) -> Result<BTreeSet<u64>> {
    let (p, f) = prime_power(a)?;
    if m < 2 {
        return Err(Error::Precondition("ppd needs m >= 2".into()));
    }
    let e = f * m;
    if p == 2 && e == 6 {
        return Ok(BTreeSet::from([7]));
    }
    primes_with_order(p, e)
}

/// Whether `a^m − 1` has a primitive prime divisor, for any integer `a ≥ 2`.
///
/// One exists except when `m = 2` and `a + 1` is a power of two, or
/// `(a, m) = (2, 6)`.
pub fn zsigmondy_has_ppd(a: u64, m: u32) -> bool {
    if m == 2 && (a + 1).is_power_of_two() {
        return false;
    }
    !(a == 2 && m == 6)
}

/// A primitive prime divisor of `a^m − 1` by direct search, if any.
pub fn ppd_witness(a: u64, m: u32) -> Result<Option<u64>> {
    Ok(primes_with_order(a, m)?.into_iter().next())
}
