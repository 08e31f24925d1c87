//! Exact elementary number theory on machine integers.
//!
//! Everything here works on `u64` values with `u128` intermediates for
//! modular products, so no operation overflows for moduli below 2^64.

use num_integer::Integer;

use crate::error::{Error, Result};

/// Prime-power decomposition of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(q, _)| q)
    }

    pub fn exponent_of(&self, q: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(r, _)| r == q)
            .map_or(0, |&(_, k)| k)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, k)| k == 1)
    }

    /// All positive divisors in ascending order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(q, k) in &self.factors {
            let len = divs.len();
            let mut power = 1u64;
            for _ in 0..k {
                power *= q;
                for i in 0..len {
                    divs.push(divs[i] * power);
                }
            }
        }
        divs.sort_unstable();
        divs
    }

    pub fn euler_phi(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(q, k)| q.pow(k - 1) * (q - 1))
            .product()
    }
}

/// Factor `n` by trial division up to `sqrt(n)`.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::NonPositive { what: "n" });
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut q = 2u64;
    while q.saturating_mul(q) <= rest {
        if rest.is_multiple_of(q) {
            let mut k = 0;
            while rest.is_multiple_of(q) {
                rest /= q;
                k += 1;
            }
            factors.push((q, k));
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut q = 2u64;
    while q * q <= n {
        if n.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

/// Primes in the inclusive range `[lo, hi]`.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo.max(2)..=hi).filter(|&q| is_prime(q)).collect()
}

pub fn divisors(n: u64) -> Result<Vec<u64>> {
    Ok(factorize(n)?.divisors())
}

pub fn euler_phi(n: u64) -> Result<u64> {
    Ok(factorize(n)?.euler_phi())
}

pub fn moebius(n: u64) -> Result<i64> {
    let f = factorize(n)?;
    if !f.is_squarefree() {
        return Ok(0);
    }
    Ok(if f.factors.len() % 2 == 0 { 1 } else { -1 })
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod m` by square-and-multiply. Returns 0 for `m == 1`.
pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, b, m);
        }
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    result
}

fn reduce(a: i64, n: u64) -> u64 {
    (a as i128).rem_euclid(n as i128) as u64
}

/// Least `k >= 1` with `a^k = 1 (mod n)`.
///
/// Only divisors of `phi(n)` are tried, in ascending order; the first one
/// that works is the order.
pub fn mult_order(a: i64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::NonPositive { what: "n" });
    }
    if n == 1 {
        return Ok(1);
    }
    let a = reduce(a, n);
    if a.gcd(&n) != 1 {
        return Err(Error::NotCoprime { a: a as i64, n });
    }
    let phi = euler_phi(n)?;
    for k in divisors(phi)? {
        if pow_mod(a, k, n) == 1 {
            return Ok(k);
        }
    }
    Err(Error::Arithmetic(format!(
        "no divisor of phi({n}) annihilates {a}"
    )))
}

/// Shorthand for `mult_order` when the caller has already checked coprimality.
pub(crate) fn ord(a: u64, n: u64) -> u64 {
    mult_order(a as i64, n).expect("ord called on non-unit")
}

pub fn is_primitive_root(a: i64, n: u64) -> Result<bool> {
    Ok(mult_order(a, n)? == euler_phi(n)?)
}

/// Legendre symbol `(a / p)` via Euler's criterion.
pub fn legendre(a: i64, p: u64) -> Result<i8> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let a = reduce(a, p);
    if a == 0 {
        return Ok(0);
    }
    let e = pow_mod(a, (p - 1) / 2, p);
    if e == 1 {
        Ok(1)
    } else if e == p - 1 {
        Ok(-1)
    } else {
        Err(Error::Arithmetic(format!(
            "Euler criterion gave {e} for {a} mod {p}"
        )))
    }
}

/// 1 for `r == 1`, 2 for `r >= 2`.
pub fn epsilon(r: u32) -> Result<u32> {
    match r {
        0 => Err(Error::NonPositive { what: "r" }),
        1 => Ok(1),
        _ => Ok(2),
    }
}
