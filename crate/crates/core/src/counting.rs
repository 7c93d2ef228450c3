//! Closed-form counts via Burnside's lemma, in exact arithmetic.
//!
//! Necklaces: `(1/n) sum_{d|n} phi(d) m^(n/d)`.
//! Bracelets: necklace sum plus the `n` reflections, over `2n`.
//! Lyndon words: `(1/n) sum_{d|n} mu(d) m^(n/d)`.

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

fn check(n: usize, m: usize) -> Result<()> {
    if n < 1 || m < 1 {
        return Err(Error::positive_n_m());
    }
    Ok(())
}

fn power(m: usize, e: usize) -> BigUint {
    BigUint::from(m).pow(e as u32)
}

/// Sum over the cyclic group of the fixed-point counts, `n * N(n, m)`.
fn rotation_fixed_points(n: usize, m: usize) -> BigUint {
    divisors(n as u64)
        .into_iter()
        .map(|d| BigUint::from(totient(d)) * power(m, n / d as usize))
        .sum()
}

pub fn count_necklaces(n: usize, m: usize) -> Result<BigUint> {
    check(n, m)?;
    Ok(rotation_fixed_points(n, m) / n)
}

pub fn count_bracelets(n: usize, m: usize) -> Result<BigUint> {
    check(n, m)?;
    let reflections = if n % 2 == 1 {
        power(m, n.div_ceil(2)) * n
    } else {
        // n/2 axes through two beads, n/2 through two gaps
        (power(m, n / 2 + 1) + power(m, n / 2)) * (n / 2)
    };
    Ok((rotation_fixed_points(n, m) + reflections) / (2 * n))
}

pub fn count_lyndon(n: usize, m: usize) -> Result<BigUint> {
    check(n, m)?;
    let sum: BigInt = divisors(n as u64)
        .into_iter()
        .map(|d| BigInt::from(moebius(d)) * BigInt::from(power(m, n / d as usize)))
        .sum();
    let count = sum / BigInt::from(n);
    Ok(count.to_biguint().unwrap_or_else(BigUint::zero))
}

/// Narrows an exact count, for callers that need a machine integer.
pub fn to_u64(count: &BigUint) -> Result<u64> {
    count
        .to_u64()
        .ok_or_else(|| Error::invalid(format!("count {count} does not fit in 64 bits")))
}

/// Divisors of `n` in ascending order. `divisors(0)` is empty.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            low.push(d);
            if d * d != n {
                high.push(n / d);
            }
        }
        d += 1;
    }
    low.extend(high.into_iter().rev());
    low
}

fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's phi. `totient(1) = 1`.
pub fn totient(d: u64) -> u64 {
    prime_factors(d)
        .into_iter()
        .fold(d, |acc, (p, _)| acc / p * (p - 1))
}

/// Möbius mu: 0 on a squared factor, else `(-1)^k` for `k` prime factors.
pub fn moebius(d: u64) -> i8 {
    let factors = prime_factors(d);
    if factors.iter().any(|&(_, e)| e > 1) {
        0
    } else if factors.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}
