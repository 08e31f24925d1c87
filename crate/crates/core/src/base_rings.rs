//! Base rings: localizations of the integers of `Q`, `Q(zeta_m)` and
//! `Q(sqrt d)` at a prime above `p`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ntheory::{euler_phi, factorize, is_prime, legendre, mult_order, pow_mod};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum BaseKind {
    Rational,
    Cyclotomic { m: u64 },
    Quadratic { d: i64 },
}

impl BaseKind {
    pub fn name(&self) -> &'static str {
        match self {
            BaseKind::Rational => "rational",
            BaseKind::Cyclotomic { .. } => "cyclotomic",
            BaseKind::Quadratic { .. } => "quadratic",
        }
    }

    /// `m` or `d` as a signed integer; `None` for the rational base.
    pub fn param(&self) -> Option<i64> {
        match *self {
            BaseKind::Rational => None,
            BaseKind::Cyclotomic { m } => Some(m as i64),
            BaseKind::Quadratic { d } => Some(d),
        }
    }
}

impl fmt::Display for BaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseKind::Rational => write!(f, "Q"),
            BaseKind::Cyclotomic { m } => write!(f, "Q(zeta_{m})"),
            BaseKind::Quadratic { d } => write!(f, "Q(sqrt({d}))"),
        }
    }
}

/// The local ring `O_p` together with the rational prime below it.
///
/// For quadratic bases the discriminant and the Legendre symbol
/// `(disc / p)` are cached at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BaseRing {
    pub kind: BaseKind,
    pub p: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub discriminant: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub legendre_delta: Option<i8>,
}

fn check_odd_prime(p: u64) -> Result<()> {
    if p == 2 {
        return Err(Error::EvenPrimeUnsupported);
    }
    if !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    Ok(())
}

impl BaseRing {
    /// `Z_(p)`; `p = 2` is admitted here and nowhere else.
    pub fn rational(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self {
            kind: BaseKind::Rational,
            p,
            discriminant: None,
            legendre_delta: None,
        })
    }

    pub fn cyclotomic(m: u64, p: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::NonPositive { what: "m" });
        }
        check_odd_prime(p)?;
        if m.is_multiple_of(p) {
            return Err(Error::PDividesM { p, m });
        }
        Ok(Self {
            kind: BaseKind::Cyclotomic { m },
            p,
            discriminant: None,
            legendre_delta: None,
        })
    }

    pub fn quadratic(d: i64, p: u64) -> Result<Self> {
        let delta = discriminant(d)?;
        check_odd_prime(p)?;
        Ok(Self {
            kind: BaseKind::Quadratic { d },
            p,
            discriminant: Some(delta),
            legendre_delta: Some(legendre(delta, p)?),
        })
    }

    pub fn new(kind: BaseKind, p: u64) -> Result<Self> {
        match kind {
            BaseKind::Rational => Self::rational(p),
            BaseKind::Cyclotomic { m } => Self::cyclotomic(m, p),
            BaseKind::Quadratic { d } => Self::quadratic(d, p),
        }
    }

    /// `f` with `N(p) = p^f`.
    pub fn residue_degree(&self) -> u64 {
        match self.kind {
            BaseKind::Rational => 1,
            BaseKind::Cyclotomic { m } => {
                mult_order(self.p as i64, m).expect("p is coprime to m by construction")
            }
            BaseKind::Quadratic { .. } => {
                if self.legendre_delta.expect("quadratic base caches legendre") >= 0 {
                    1
                } else {
                    2
                }
            }
        }
    }

    /// Size of the residue field `N(p)`.
    pub fn residue_size(&self) -> Result<u128> {
        let f = u32::try_from(self.residue_degree()).map_err(|_| Error::Overflow("N(p)"))?;
        (self.p as u128)
            .checked_pow(f)
            .ok_or(Error::Overflow("N(p)"))
    }

    /// `ord_d N(p)`, computed without materializing `N(p)`.
    pub fn norm_order(&self, d: u64) -> Result<u64> {
        if d.is_multiple_of(self.p) {
            return Err(Error::NotCoprime {
                a: self.p as i64,
                n: d,
            });
        }
        let residue = pow_mod(self.p, self.residue_degree(), d.max(1));
        mult_order(residue as i64, d)
    }

    /// Degree `[K(zeta_d) : K]` of an irreducible factor of `Phi_d` over the base.
    pub fn local_cyclotomic_degree(&self, d: u64) -> Result<u64> {
        let phi = euler_phi(d)?;
        match self.kind {
            BaseKind::Rational => Ok(phi),
            BaseKind::Cyclotomic { m } => {
                let (d1, dprime) = coprime_split(d, m)?;
                Ok(dprime * euler_phi(d1)?)
            }
            BaseKind::Quadratic { .. } => {
                let delta = self.discriminant.expect("quadratic base caches discriminant");
                if (d as i64) % delta == 0 {
                    if phi % 2 != 0 {
                        return Err(Error::Arithmetic(format!(
                            "phi({d}) = {phi} is odd although the discriminant divides {d}"
                        )));
                    }
                    Ok(phi / 2)
                } else {
                    Ok(phi)
                }
            }
        }
    }

    /// Whether `Phi_n` stays irreducible over the base.
    pub fn cyclotomic_poly_irreducible(&self, n: u64) -> Result<bool> {
        Ok(self.local_cyclotomic_degree(n)? == euler_phi(n)?)
    }
}

impl fmt::Display for BaseRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at p = {}", self.kind, self.p)
    }
}

/// Discriminant of `Q(sqrt d)`: `d` if `d = 1 (mod 4)`, else `4d`.
pub fn discriminant(d: i64) -> Result<i64> {
    if d == 0 || d == 1 || !factorize(d.unsigned_abs())?.is_squarefree() {
        return Err(Error::InvalidQuadratic(d));
    }
    Ok(if d.rem_euclid(4) == 1 { d } else { 4 * d })
}

/// Splits `n` into `(n1, n')`: `n1` is the largest divisor of `n` coprime to
/// `m`, and `n' = lcm(m, n) / (m n1)`.
pub fn coprime_split(n: u64, m: u64) -> Result<(u64, u64)> {
    if n == 0 {
        return Err(Error::NonPositive { what: "n" });
    }
    if m == 0 {
        return Err(Error::NonPositive { what: "m" });
    }
    let n1: u64 = factorize(n)?
        .factors()
        .iter()
        .filter(|&&(q, _)| !m.is_multiple_of(q))
        .map(|&(q, k)| q.pow(k))
        .product();
    let l = m.lcm(&n);
    Ok((n1, l / (m * n1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(5).unwrap(), 5);
        assert_eq!(discriminant(-1).unwrap(), -4);
        assert_eq!(discriminant(2).unwrap(), 8);
        assert_eq!(discriminant(-3).unwrap(), -3);
        assert_eq!(discriminant(1), Err(Error::InvalidQuadratic(1)));
        assert_eq!(discriminant(0), Err(Error::InvalidQuadratic(0)));
        assert_eq!(discriminant(12), Err(Error::InvalidQuadratic(12)));
    }

    #[test]
    fn coprime_split_examples() {
        assert_eq!(coprime_split(30, 1).unwrap(), (30, 1));
        assert_eq!(coprime_split(4, 5).unwrap(), (4, 1));
        assert_eq!(coprime_split(12, 10).unwrap(), (3, 2));
    }

    #[test]
    fn residue_sizes() {
        assert_eq!(BaseRing::rational(7).unwrap().residue_size().unwrap(), 7);
        assert_eq!(BaseRing::cyclotomic(5, 3).unwrap().residue_size().unwrap(), 81);
        assert_eq!(BaseRing::quadratic(-1, 3).unwrap().residue_size().unwrap(), 9);
        assert_eq!(BaseRing::quadratic(-1, 5).unwrap().residue_size().unwrap(), 5);
        // ramified
        assert_eq!(BaseRing::quadratic(3, 3).unwrap().residue_size().unwrap(), 3);
    }

    #[test]
    fn local_degrees() {
        assert_eq!(BaseRing::rational(5).unwrap().local_cyclotomic_degree(12).unwrap(), 4);
        assert_eq!(BaseRing::cyclotomic(3, 5).unwrap().local_cyclotomic_degree(9).unwrap(), 3);
        assert_eq!(BaseRing::quadratic(-1, 3).unwrap().local_cyclotomic_degree(4).unwrap(), 1);
    }

    #[test]
    fn irreducibility() {
        let q = BaseRing::rational(3).unwrap();
        assert!((1..50).all(|n| q.cyclotomic_poly_irreducible(n).unwrap()));
        assert!(BaseRing::cyclotomic(5, 3).unwrap().cyclotomic_poly_irreducible(4).unwrap());
        assert!(!BaseRing::quadratic(5, 11).unwrap().cyclotomic_poly_irreducible(5).unwrap());
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(BaseRing::cyclotomic(6, 3), Err(Error::PDividesM { p: 3, m: 6 }));
        assert_eq!(BaseRing::cyclotomic(5, 2), Err(Error::EvenPrimeUnsupported));
        assert_eq!(BaseRing::quadratic(5, 2), Err(Error::EvenPrimeUnsupported));
        assert_eq!(BaseRing::quadratic(8, 3), Err(Error::InvalidQuadratic(8)));
        assert_eq!(BaseRing::rational(9), Err(Error::NotPrime(9)));
        assert!(BaseRing::rational(2).is_ok());
    }
}
