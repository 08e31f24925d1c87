//! Structural and order predicates shared by the case lists.

use itertools::Itertools;

use crate::ntheory::{factorize, ord};

/// `n = 2^two * prod q_i^{r_i}` with the odd primes ascending.
#[derive(Debug, Clone)]
pub(crate) struct Shape {
    pub two: u32,
    pub odd: Vec<(u64, u32)>,
}

impl Shape {
    pub fn of(n: u64) -> Self {
        let f = factorize(n).expect("shape of a positive integer");
        let two = f.exponent_of(2);
        let odd = f.factors().iter().copied().filter(|&(q, _)| q != 2).collect();
        Self { two, odd }
    }

    /// `n = q^r` or `2 q^r` with exactly `k` odd primes, in every ordering.
    pub fn odd_or_twice(&self, k: usize) -> Vec<Vec<(u64, u32)>> {
        if self.two > 1 {
            return Vec::new();
        }
        self.with_two(self.two, k)
    }

    /// `n = 2^t * (k odd prime powers)` for the given `t`, in every ordering.
    pub fn with_two(&self, t: u32, k: usize) -> Vec<Vec<(u64, u32)>> {
        if self.two != t || self.odd.len() != k {
            return Vec::new();
        }
        self.odd.iter().copied().permutations(k).collect()
    }

    pub fn single(&self, t: u32) -> Option<(u64, u32)> {
        (self.two == t && self.odd.len() == 1).then(|| self.odd[0])
    }

    pub fn is_two_power(&self) -> bool {
        self.odd.is_empty()
    }
}

pub(crate) fn pow(q: u64, r: u32) -> u64 {
    q.pow(r)
}

/// `phi(q^k)` for an odd prime `q`.
pub(crate) fn phi_pp(q: u64, k: u32) -> u64 {
    q.pow(k - 1) * (q - 1)
}

pub(crate) fn phi_eps(q: u64, r: u32) -> u64 {
    phi_pp(q, r.min(2))
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Order predicates for a fixed prime `p`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Orders {
    pub p: u64,
}

impl Orders {
    pub fn new(p: u64) -> Self {
        Self { p }
    }

    pub fn ord(&self, n: u64) -> u64 {
        ord(self.p, n)
    }

    /// `ord_{q^k} p = phi(q^k) / div`.
    pub fn ratio(&self, q: u64, k: u32, div: u64) -> bool {
        let phi = phi_pp(q, k);
        phi.is_multiple_of(div) && self.ord(pow(q, k)) * div == phi
    }

    pub fn prim(&self, q: u64, k: u32) -> bool {
        self.ratio(q, k, 1)
    }

    pub fn half(&self, q: u64, k: u32) -> bool {
        self.ratio(q, k, 2)
    }

    pub fn quarter(&self, q: u64, k: u32) -> bool {
        self.ratio(q, k, 4)
    }

    pub fn half_odd(&self, q: u64, k: u32) -> bool {
        self.half(q, k) && (phi_pp(q, k) / 2) % 2 == 1
    }

    pub fn prim_eps(&self, q: u64, r: u32) -> bool {
        self.prim(q, r.min(2))
    }

    pub fn half_eps(&self, q: u64, r: u32) -> bool {
        self.half(q, r.min(2))
    }

    pub fn quarter_eps(&self, q: u64, r: u32) -> bool {
        self.quarter(q, r.min(2))
    }

    pub fn p_mod(&self, m: u64) -> u64 {
        self.p % m
    }
}
