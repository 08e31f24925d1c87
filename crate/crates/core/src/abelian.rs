//! Finite abelian groups in invariant-factor form.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ntheory::{euler_phi, factorize, moebius};

/// A finite abelian group `C_{f_1} + ... + C_{f_k}` with `f_i | f_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<u64>", try_from = "Vec<u64>")]
pub struct AbelianGroup {
    invariant_factors: Vec<u64>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self {
            invariant_factors: Vec::new(),
        }
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        Self::normalize(&[n])
    }

    /// Canonical form of `C_{orders[0]} + C_{orders[1]} + ...`.
    ///
    /// Each cyclic factor is split into its prime-power components, and the
    /// components of each prime are regrouped by descending exponent.
    pub fn normalize(orders: &[u64]) -> Result<Self> {
        let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &n in orders {
            if n == 0 {
                return Err(Error::NonPositive {
                    what: "cyclic order",
                });
            }
            for &(q, k) in factorize(n)?.factors() {
                by_prime.entry(q).or_default().push(k);
            }
        }
        let rank = by_prime.values().map(Vec::len).max().unwrap_or(0);
        // Largest factor first, then reverse.
        let mut factors = vec![1u64; rank];
        for (q, mut exps) in by_prime {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            for (slot, k) in factors.iter_mut().zip(exps) {
                *slot *= q.pow(k);
            }
        }
        factors.reverse();
        Ok(Self {
            invariant_factors: factors,
        })
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.invariant_factors.last().copied().unwrap_or(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() <= 1
    }

    /// Number of elements whose order divides `e`.
    fn elements_dividing(&self, e: u64) -> u64 {
        self.invariant_factors.iter().map(|f| f.gcd(&e)).product()
    }

    /// Number of elements of exact order `d`.
    pub fn elements_of_order(&self, d: u64) -> Result<u64> {
        if d == 0 {
            return Err(Error::NonPositive { what: "d" });
        }
        let mut total: i128 = 0;
        for e in factorize(d)?.divisors() {
            total += moebius(d / e)? as i128 * self.elements_dividing(e) as i128;
        }
        u64::try_from(total)
            .map_err(|_| Error::Arithmetic(format!("negative element count for d = {d}")))
    }

    /// `mu(d)`: the number of cyclic subgroups of order `d`.
    pub fn cyclic_subgroup_count(&self, d: u64) -> Result<u64> {
        let count = self.elements_of_order(d)?;
        let phi = euler_phi(d)?;
        if count % phi != 0 {
            return Err(Error::Arithmetic(format!(
                "{count} elements of order {d} is not a multiple of phi({d}) = {phi}"
            )));
        }
        Ok(count / phi)
    }

    /// The Sylow `q`-subgroup.
    pub fn primary_part(&self, q: u64) -> Self {
        let parts: Vec<u64> = self
            .invariant_factors
            .iter()
            .map(|&f| {
                let mut part = 1;
                let mut rest = f;
                while rest % q == 0 {
                    rest /= q;
                    part *= q;
                }
                part
            })
            .filter(|&part| part > 1)
            .collect();
        Self {
            invariant_factors: parts,
        }
    }

    /// The product of all Sylow subgroups other than the `q`-part.
    pub fn complement(&self, q: u64) -> Self {
        let parts: Vec<u64> = self
            .invariant_factors
            .iter()
            .map(|&f| {
                let mut rest = f;
                while rest % q == 0 {
                    rest /= q;
                }
                rest
            })
            .filter(|&part| part > 1)
            .collect();
        Self {
            invariant_factors: parts,
        }
    }

    /// True when the order is a power of `q` (the trivial group included).
    pub fn is_q_group(&self, q: u64) -> bool {
        let mut order = self.order();
        while order.is_multiple_of(q) {
            order /= q;
        }
        order == 1
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.invariant_factors.iter().map(u64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Parses `"4,6"` as `C_4 + C_6`.
impl FromStr for AbelianGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let orders = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|e| Error::Parse(format!("bad cyclic order {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::normalize(&orders)
    }
}

impl From<AbelianGroup> for Vec<u64> {
    fn from(g: AbelianGroup) -> Self {
        g.invariant_factors
    }
}

impl TryFrom<Vec<u64>> for AbelianGroup {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        Self::normalize(&v)
    }
}
