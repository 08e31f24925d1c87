//! Cyclotomic polynomials over `Z` and distinct-degree factorization over `F_p`.
//!
//! This module is an oracle: it never consults multiplicative orders, so the
//! factor degrees it reports are an independent check on the arithmetic the
//! classifier relies on.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ntheory::{euler_phi, factorize, is_prime, moebius, mul_mod, mult_order, pow_mod};

/// Integer polynomial, coefficients in ascending degree, no leading zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<i128>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![1])
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = -1;
        coeffs[n] = 1;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Division by a monic divisor; returns `(quotient, remainder)`.
    pub fn div_rem_monic(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        assert_eq!(divisor.coeffs[dd], 1, "divisor must be monic");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::new(Vec::new()), Self::new(rem));
        }
        let mut quot = vec![0i128; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd];
            if c == 0 {
                continue;
            }
            quot[i] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= c * b;
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn reduce_mod(&self, p: u64) -> ModPoly {
        ModPoly::new(
            p,
            self.coeffs
                .iter()
                .map(|&c| c.rem_euclid(p as i128) as u64)
                .collect(),
        )
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.unsigned_abs();
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{sign}")?;
            if !first {
                write!(f, " ")?;
            }
            match (i, mag) {
                (0, _) => write!(f, "{mag}")?,
                (_, 1) => {}
                _ => write!(f, "{mag}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// `Phi_d(x) = prod_{e | d} (x^e - 1)^{mu(d/e)}`, by exact integer arithmetic.
pub fn cyclotomic_polynomial(d: u64) -> Result<IntPoly> {
    let divs = factorize(d)?.divisors();
    let mut numerator = IntPoly::one();
    let mut denominators = Vec::new();
    for &e in &divs {
        match moebius(d / e)? {
            1 => numerator = numerator.mul(&IntPoly::x_pow_minus_one(e as usize)),
            -1 => denominators.push(IntPoly::x_pow_minus_one(e as usize)),
            _ => {}
        }
    }
    for den in denominators {
        let (q, r) = numerator.div_rem_monic(&den);
        if !r.is_zero() {
            return Err(Error::Arithmetic(format!(
                "nonzero remainder building Phi_{d}"
            )));
        }
        numerator = q;
    }
    let degree = numerator.degree().unwrap_or(0) as u64;
    if degree != euler_phi(d)? || numerator.coeffs.last() != Some(&1) {
        return Err(Error::Arithmetic(format!("Phi_{d} has wrong shape")));
    }
    Ok(numerator)
}

/// Polynomial over the prime field `F_p`, ascending degree, no leading zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModPoly {
    modulus: u64,
    coeffs: Vec<u64>,
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

impl ModPoly {
    pub fn new(modulus: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % modulus).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { modulus, coeffs }
    }

    pub fn from_signed(modulus: u64, coeffs: &[i64]) -> Self {
        Self::new(
            modulus,
            coeffs
                .iter()
                .map(|&c| (c as i128).rem_euclid(modulus as i128) as u64)
                .collect(),
        )
    }

    fn zero(modulus: u64) -> Self {
        Self {
            modulus,
            coeffs: Vec::new(),
        }
    }

    /// The monomial `x`.
    pub fn x(modulus: u64) -> Self {
        Self::new(modulus, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.modulus;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + p - b) % p
            })
            .collect();
        Self::new(p, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = self.modulus;
        if self.is_zero() || other.is_zero() {
            return Self::zero(p);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        Self::new(p, out)
    }

    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let p = self.modulus;
        let dd = divisor.degree().expect("division by zero polynomial");
        let inv = inv_mod(divisor.lead(), p);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(p), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = mul_mod(rem[i + dd], inv, p);
            if c == 0 {
                continue;
            }
            quot[i] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = (rem[i + j] + p - mul_mod(c, b, p)) % p;
            }
        }
        (Self::new(p, quot), Self::new(p, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.lead(), self.modulus);
        Self::new(
            self.modulus,
            self.coeffs
                .iter()
                .map(|&c| mul_mod(c, inv, self.modulus))
                .collect(),
        )
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let p = self.modulus;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
            .collect();
        Self::new(p, coeffs)
    }

    /// `self^e mod modulus_poly` by repeated squaring.
    pub fn pow_mod(&self, mut e: u64, modulus_poly: &Self) -> Self {
        let mut result = Self::new(self.modulus, vec![1]).rem(modulus_poly);
        let mut base = self.rem(modulus_poly);
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).rem(modulus_poly);
            }
            base = base.mul(&base).rem(modulus_poly);
            e >>= 1;
        }
        result
    }
}

/// Distinct-degree factorization: `(degree, number of irreducible factors of
/// that degree)` for every degree that occurs, ascending.
pub fn ddf_degrees(f: &ModPoly) -> Result<Vec<(usize, usize)>> {
    let p = f.modulus();
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let Some(deg) = f.degree() else {
        return Err(Error::Arithmetic("zero polynomial has no factorization".into()));
    };
    if deg == 0 {
        return Ok(Vec::new());
    }
    if f.gcd(&f.derivative()).degree() != Some(0) {
        return Err(Error::NotSquarefree(p));
    }
    let x = ModPoly::x(p);
    let mut rest = f.monic();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut k = 1;
    while rest.degree().unwrap_or(0) >= 2 * k {
        // h = x^(p^k) mod rest
        h = h.pow_mod(p, &rest);
        let g = rest.gcd(&h.sub(&x));
        let gd = g.degree().unwrap_or(0);
        if gd > 0 {
            out.push((k, gd / k));
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
        }
        k += 1;
    }
    if let Some(rd) = rest.degree() {
        if rd > 0 {
            out.push((rd, 1));
        }
    }
    Ok(out)
}

/// Outcome of factoring `Phi_d` modulo `p` against the order prediction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRecord {
    pub d: u64,
    pub p: u64,
    pub expected_degree: u64,
    pub expected_count: u64,
    pub observed: Vec<(usize, usize)>,
    pub pass: bool,
}

pub fn verify_cyclotomic_factorization(d: u64, p: u64) -> Result<OracleRecord> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if d.is_multiple_of(p) {
        return Err(Error::NotCoprime { a: p as i64, n: d });
    }
    let expected_degree = mult_order(p as i64, d)?;
    let expected_count = euler_phi(d)? / expected_degree;
    let observed = ddf_degrees(&cyclotomic_polynomial(d)?.reduce_mod(p))?;
    let pass = observed == [(expected_degree as usize, expected_count as usize)];
    Ok(OracleRecord {
        d,
        p,
        expected_degree,
        expected_count,
        observed,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1).unwrap().coeffs(), &[-1, 1]);
        assert_eq!(cyclotomic_polynomial(12).unwrap().coeffs(), &[1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(7).unwrap().coeffs(), &[1; 7]);
        assert_eq!(cyclotomic_polynomial(12).unwrap().to_string(), "x^4 - x^2 + 1");
        assert!(cyclotomic_polynomial(0).is_err());
    }

    #[test]
    fn ddf_examples() {
        let phi12 = cyclotomic_polynomial(12).unwrap().reduce_mod(5);
        assert_eq!(ddf_degrees(&phi12).unwrap(), vec![(2, 2)]);
        let phi5 = cyclotomic_polynomial(5).unwrap().reduce_mod(3);
        assert_eq!(ddf_degrees(&phi5).unwrap(), vec![(4, 1)]);
        let split = ModPoly::from_signed(7, &[-1, 0, 1]);
        assert_eq!(ddf_degrees(&split).unwrap(), vec![(1, 2)]);
    }

    #[test]
    fn ddf_rejects_repeated_factors() {
        // (x - 1)^2
        let f = ModPoly::from_signed(5, &[1, -2, 1]);
        assert_eq!(ddf_degrees(&f), Err(Error::NotSquarefree(5)));
    }

    #[test]
    fn oracle_examples() {
        let r = verify_cyclotomic_factorization(12, 5).unwrap();
        assert!(r.pass);
        assert_eq!((r.expected_degree, r.expected_count), (2, 2));
        let r = verify_cyclotomic_factorization(11, 3).unwrap();
        assert!(r.pass);
        assert_eq!((r.expected_degree, r.expected_count), (5, 2));
        let r = verify_cyclotomic_factorization(1, 7).unwrap();
        assert_eq!(r.observed, vec![(1, 1)]);
        assert!(verify_cyclotomic_factorization(15, 5).is_err());
    }
}
