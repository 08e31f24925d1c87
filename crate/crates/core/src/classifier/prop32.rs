//! Case lists for the refined order conditions used by the weakly-clean
//! characterisations, together with their direct definitions.

use crate::error::{Error, Result};
use crate::ntheory::{divisors, euler_phi, ord};

use super::prop26::check_np;
use super::shape::{gcd, phi_eps, Orders, Shape};
use super::Reading;

/// The defining predicate of `item`, computed from orders over all divisors:
///
/// 1. `ord_n p = phi(n)/2` is odd;
/// 2. `ord_n p = phi(n)/2` and `p` is a primitive root of every proper divisor;
/// 3. `ord_n p = phi(n)/4` is odd;
/// 4. `phi(n) = 4 ord_n p` and `phi(m) != 4 ord_m p` for every proper divisor `m`;
/// 5. `phi(n) = 4 ord_n p` and `p` is a primitive root of every proper divisor.
pub fn prop32_direct(n: u64, p: u64, item: u32) -> Result<bool> {
    check_np(n, p)?;
    let phi = euler_phi(n)?;
    let o = ord(p, n);
    let proper = || -> Result<Vec<(u64, u64)>> {
        divisors(n)?
            .into_iter()
            .filter(|&m| m != n)
            .map(|m| Ok((euler_phi(m)?, ord(p, m))))
            .collect()
    };
    Ok(match item {
        1 => phi == 2 * o && o % 2 == 1,
        2 => phi == 2 * o && proper()?.iter().all(|&(f, om)| f == om),
        3 => phi == 4 * o && o % 2 == 1,
        4 => phi == 4 * o && proper()?.iter().all(|&(f, om)| f != 4 * om),
        5 => phi == 4 * o && proper()?.iter().all(|&(f, om)| f == om),
        _ => return Err(bad_item(item)),
    })
}

fn bad_item(item: u32) -> Error {
    Error::InvalidArgument(format!("item must be between 1 and 5, got {item}"))
}

/// First matching case of the list for `item`, labelled like `"2c"` or
/// `"4f.2"`.
pub fn prop32_item(n: u64, p: u64, item: u32, reading: Reading) -> Result<Option<&'static str>> {
    check_np(n, p)?;
    let s = Shape::of(n);
    let o = Orders::new(p);
    Ok(match item {
        1 => item1(n, &s, &o),
        2 => item2(n, &s, &o),
        3 => item3(n, &s, &o),
        4 => item4(n, &s, &o, reading),
        5 => item5(&s, &o),
        _ => return Err(bad_item(item)),
    })
}

fn item1(n: u64, s: &Shape, o: &Orders) -> Option<&'static str> {
    if n == 4 && o.p_mod(4) == 1 {
        return Some("1a");
    }
    if s
        .odd_or_twice(1)
        .iter()
        .any(|v| v[0].0 % 4 == 3 && o.half_eps(v[0].0, v[0].1))
    {
        return Some("1b");
    }
    None
}

/// `n = q` or `n = q1 q2` with `q`, `q1`, `q2` prime (2 allowed).
fn primes_of(n: u64, s: &Shape, k: usize) -> Vec<Vec<u64>> {
    let mut ps: Vec<(u64, u32)> = s.odd.clone();
    if s.two > 0 {
        ps.insert(0, (2, s.two));
    }
    if ps.len() != k || ps.iter().any(|&(_, r)| r != 1) || n < 2 {
        return Vec::new();
    }
    let qs: Vec<u64> = ps.iter().map(|&(q, _)| q).collect();
    if k == 2 {
        vec![qs.clone(), vec![qs[1], qs[0]]]
    } else {
        vec![qs]
    }
}

fn item2(n: u64, s: &Shape, o: &Orders) -> Option<&'static str> {
    if (n == 4 && o.p_mod(4) == 1) || (n == 8 && o.p_mod(4) == 3) {
        return Some("2a");
    }
    if n % 2 == 1 && primes_of(n, s, 1).iter().any(|q| o.half(q[0], 1)) {
        return Some("2b");
    }
    if let Some((q, 1)) = s.single(2) {
        if o.p_mod(4) == 3 && o.prim(q, 1) {
            return Some("2c");
        }
    }
    for q in primes_of(n, s, 2) {
        if o.prim(q[0], 1) && o.prim(q[1], 1) && gcd(q[0] - 1, q[1] - 1) == 2 {
            return Some("2d");
        }
    }
    None
}

fn item3(n: u64, s: &Shape, o: &Orders) -> Option<&'static str> {
    if n == 8 && o.p_mod(8) == 1 {
        return Some("3a");
    }
    if s
        .odd_or_twice(1)
        .iter()
        .any(|v| v[0].0 % 8 == 5 && o.quarter_eps(v[0].0, v[0].1))
    {
        return Some("3b");
    }
    for v in s.odd_or_twice(2) {
        let [(q1, r1), (q2, r2)] = [v[0], v[1]];
        if q1 % 4 != 3 || q2 % 4 != 3 {
            continue;
        }
        let (f1, f2) = (phi_eps(q1, r1), phi_eps(q2, r2));
        if o.prim_eps(q1, r1) && o.half_eps(q2, r2) && gcd(f1, f2 / 2) == 2 {
            return Some("3c.1");
        }
        if o.half_eps(q1, r1) && o.half_eps(q2, r2) && gcd(f1 / 2, f2 / 2) == 1 {
            return Some("3c.2");
        }
    }
    if let Some((q, r)) = s.single(2) {
        if q % 4 == 3 && o.p_mod(4) == 1 && o.half(q, r) {
            return Some("3d");
        }
    }
    None
}

fn item4(n: u64, s: &Shape, o: &Orders, reading: Reading) -> Option<&'static str> {
    // The literal list admits p = 9 (mod 16) at n = 16, where 8 already has ratio 4.
    let sixteen: &[u64] = match reading {
        Reading::Literal => &[7, 9, 15],
        Reading::Corrected => &[7, 15],
    };
    if (n == 8 && o.p_mod(8) == 1) || (n == 16 && sixteen.contains(&o.p_mod(16))) {
        return Some("4a");
    }
    if s.two == 0 && s.odd.len() == 1 && s.odd[0].1 == 1 {
        let q = s.odd[0].0;
        if q % 4 == 1 && o.quarter(q, 1) {
            return Some("4b");
        }
    }
    for v in s.with_two(0, 2) {
        let [(q1, r1), (q2, r2)] = [v[0], v[1]];
        if r1 != 1 || r2 != 1 {
            break;
        }
        if o.prim(q1, 1) && o.prim(q2, 1) && gcd(q1 - 1, q2 - 1) == 4 {
            return Some("4c.1");
        }
        if o.prim(q1, 1) && o.half(q2, 1) && gcd(q1 - 1, (q2 - 1) / 2) == 2 {
            return Some("4c.2");
        }
        if o.half(q1, 1) && o.half(q2, 1) && gcd((q1 - 1) / 2, (q2 - 1) / 2) == 1 {
            return Some("4c.3");
        }
    }
    for v in s.with_two(0, 3) {
        if v.iter().any(|&(_, r)| r != 1) {
            break;
        }
        let q: Vec<u64> = v.iter().map(|&(q, _)| q).collect();
        if gcd(q[0] - 1, q[1] - 1) != 2 || gcd(q[0] - 1, q[2] - 1) != 2 || gcd(q[1] - 1, q[2] - 1) != 2 {
            continue;
        }
        if o.prim(q[0], 1) && o.prim(q[1], 1) && o.prim(q[2], 1) {
            return Some("4d.1");
        }
        if o.prim(q[0], 1) && o.prim(q[1], 1) && o.half_odd(q[2], 1) {
            return Some("4d.2");
        }
    }
    if let Some((q, 1)) = s.single(2) {
        if o.p_mod(4) == 1 && o.half(q, 1) {
            return Some("4e.1");
        }
        if o.p_mod(4) == 3 && q % 4 == 1 && o.half(q, 1) {
            return Some("4e.2");
        }
    }
    for v in s.with_two(2, 2) {
        let [(q1, r1), (q2, r2)] = [v[0], v[1]];
        if r1 != 1 || r2 != 1 {
            break;
        }
        if q2 % 4 != 3 {
            continue;
        }
        if gcd(q1 - 1, q2 - 1) == 2 && o.prim(q1, 1) && o.prim(q2, 1) {
            return Some("4f.1");
        }
        if gcd(q1 - 1, q2 - 1) == 2 && o.p_mod(4) == 3 && o.prim(q1, 1) && o.half(q2, 1) {
            return Some("4f.2");
        }
        if reading == Reading::Literal
            && gcd((q1 - 1) / 2, (q2 - 1) / 2) == 1
            && o.p_mod(4) == 3
            && q1 % 4 == 3
            && o.half(q1, 1)
            && o.half(q2, 1)
        {
            return Some("4f.3");
        }
    }
    if let Some((q, 1)) = s.single(3) {
        // p = 1 mod 8 puts ratio 4 on the divisor 8, p = 5 mod 8 on 4q.
        let lit = reading == Reading::Literal;
        if o.prim(q, 1) && (lit || o.p_mod(8) != 1) {
            return Some("4g.1");
        }
        if o.p_mod(8) != 1 && (lit || o.p_mod(4) == 3) && q % 4 == 3 && o.half(q, 1) {
            return Some("4g.2");
        }
    }
    None
}

fn item5(s: &Shape, o: &Orders) -> Option<&'static str> {
    if s.two == 0 && s.odd.len() == 1 && s.odd[0].1 == 1 {
        let q = s.odd[0].0;
        if q % 4 == 1 && o.quarter(q, 1) {
            return Some("5.1");
        }
    }
    for v in s.with_two(0, 2) {
        let [(q1, r1), (q2, r2)] = [v[0], v[1]];
        if r1 == 1 && r2 == 1 && o.prim(q1, 1) && o.prim(q2, 1) && gcd(q1 - 1, q2 - 1) == 4 {
            return Some("5.2");
        }
    }
    None
}
