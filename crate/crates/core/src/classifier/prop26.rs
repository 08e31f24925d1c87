//! Case lists for `phi(n) = k ord_n p`, `k` in `{1, 2, 4}`.

use crate::error::{Error, Result};
use crate::ntheory::{euler_phi, is_prime, ord};

use super::shape::{gcd, phi_eps, phi_pp, Orders, Shape};
use super::Reading;

pub(crate) fn check_np(n: u64, p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if n == 0 {
        return Err(Error::NonPositive { what: "n" });
    }
    if n.is_multiple_of(p) {
        return Err(Error::NotCoprime { a: p as i64, n });
    }
    Ok(())
}

/// `Some(k)` when `phi(n) = k ord_n p` for `k` in `{1, 2, 4}`, else `None`.
pub fn prop26_direct(n: u64, p: u64) -> Result<Option<u32>> {
    check_np(n, p)?;
    let phi = euler_phi(n)?;
    let o = ord(p, n);
    Ok([1u32, 2, 4].into_iter().find(|&k| phi == k as u64 * o))
}

/// First matching case of the list for `k`, labelled like `"2b"` or
/// `"3d.2"`; `None` when no case applies.
///
/// `n = 2 (mod 4)` is first replaced by `n / 2`.
pub fn prop26_cases(n: u64, p: u64, k: u32, reading: Reading) -> Result<Option<&'static str>> {
    check_np(n, p)?;
    let n = if n % 4 == 2 { n / 2 } else { n };
    let s = Shape::of(n);
    let o = Orders::new(p);
    Ok(match k {
        1 => list1(n, &s, &o),
        2 => list2(n, &s, &o),
        4 => list4(n, &s, &o, reading),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "k must be 1, 2 or 4, got {k}"
            )))
        }
    })
}

fn list1(n: u64, s: &Shape, o: &Orders) -> Option<&'static str> {
    if n == 1 || n == 2 {
        return Some("1a");
    }
    if n == 4 && o.p_mod(4) == 3 {
        return Some("1b");
    }
    if s.odd_or_twice(1).iter().any(|v| o.prim_eps(v[0].0, v[0].1)) {
        return Some("1c");
    }
    None
}

fn list2(n: u64, s: &Shape, o: &Orders) -> Option<&'static str> {
    if (n == 4 && o.p_mod(4) == 1) || (n == 8 && o.p_mod(8) != 1) {
        return Some("2a");
    }
    if s.is_two_power() && s.two >= 4 && [3, 5, 11, 13].contains(&o.p_mod(16)) {
        return Some("2b");
    }
    if s.odd_or_twice(1).iter().any(|v| o.half_eps(v[0].0, v[0].1)) {
        return Some("2c");
    }
    if let Some((q, r)) = s.single(2) {
        if o.prim_eps(q, r) || (o.p_mod(4) == 3 && q % 4 == 3 && o.half_eps(q, r)) {
            return Some("2d");
        }
    }
    for v in s.odd_or_twice(2) {
        let [(q1, r1), (q2, r2)] = [v[0], v[1]];
        if q2 % 4 == 3
            && gcd(phi_eps(q1, r1), phi_eps(q2, r2)) == 2
            && o.prim_eps(q1, r1)
            && (o.prim_eps(q2, r2) || o.half_eps(q2, r2))
        {
            return Some("2e");
        }
    }
    None
}

fn list4(n: u64, s: &Shape, o: &Orders, reading: Reading) -> Option<&'static str> {
    if (n == 8 && o.p_mod(8) == 1) || (n == 16 && [7, 9, 15].contains(&o.p_mod(16))) {
        return Some("3a");
    }
    if s.is_two_power() && s.two >= 5 && [7, 9, 23, 25].contains(&o.p_mod(32)) {
        return Some("3b");
    }
    if s
        .odd_or_twice(1)
        .iter()
        .any(|v| v[0].0 % 4 == 1 && o.quarter_eps(v[0].0, v[0].1))
    {
        return Some("3c");
    }
    for v in s.odd_or_twice(2) {
        let [(q1, r1), (q2, r2)] = [v[0], v[1]];
        let (f1, f2) = (phi_eps(q1, r1), phi_eps(q2, r2));
        if o.prim_eps(q1, r1) && o.prim_eps(q2, r2) && gcd(f1, f2) == 4 {
            return Some("3d.1");
        }
        if o.prim_eps(q1, r1) && o.half_eps(q2, r2) && gcd(f1, f2 / 2) == 2 {
            return Some("3d.2");
        }
        if o.half_eps(q1, r1) && o.half_eps(q2, r2) && gcd(f1 / 2, f2 / 2) == 1 {
            return Some("3d.3");
        }
        if o.prim_eps(q1, r1) && o.quarter_eps(q2, r2) && gcd(f1, f2 / 4) == 1 {
            return Some("3d.4");
        }
    }
    for v in s.odd_or_twice(3) {
        let f: Vec<u64> = v.iter().map(|&(q, r)| phi_pp(q, r)).collect();
        if gcd(f[0], f[1]) != 2 || gcd(f[0], f[2]) != 2 || gcd(f[1], f[2]) != 2 {
            continue;
        }
        let [(q1, r1), (q2, r2), (q3, r3)] = [v[0], v[1], v[2]];
        if o.prim(q1, r1) && o.prim(q2, r2) && o.prim(q3, r3) {
            return Some("3e.1");
        }
        if o.prim(q1, r1) && o.prim(q2, r2) && o.half_odd(q3, r3) {
            return Some("3e.2");
        }
        if o.prim(q1, r1) && o.half_odd(q2, r2) && o.half_odd(q3, r3) {
            return Some("3e.3");
        }
    }
    // n = 4 q^r; the literal statement lets q = 2 as well.
    let four_q = match (s.single(2), reading) {
        (Some(qr), _) => Some(qr),
        (None, Reading::Literal) if s.is_two_power() && s.two >= 3 => Some((2, s.two - 2)),
        _ => None,
    };
    if let Some((q, r)) = four_q {
        if o.p_mod(4) == 1 && o.half(q, r) {
            return Some("3f.1");
        }
        if o.p_mod(4) == 3 && q % 4 == 1 && o.half(q, r) {
            return Some("3f.2");
        }
        if o.p_mod(4) == 3 && q % 8 == 5 && o.quarter(q, r) {
            return Some("3f.3");
        }
    }
    for v in s.with_two(2, 2) {
        let [(q1, r1), (q2, r2)] = [v[0], v[1]];
        if q2 % 4 != 3 {
            continue;
        }
        let g = gcd(phi_eps(q1, r1), phi_eps(q2, r2));
        if g == 2 && o.prim_eps(q1, r1) && o.prim_eps(q2, r2) {
            return Some("3g.1");
        }
        if g == 2 && o.prim_eps(q1, r1) && o.half_eps(q2, r2) {
            return Some("3g.2");
        }
        if o.p_mod(4) == 3
            && q1 % 4 == 3
            && o.half(q1, r1)
            && o.half(q2, r2)
            && gcd(phi_pp(q1, r1) / 2, phi_pp(q2, r2) / 2) == 1
        {
            return Some("3g.3");
        }
    }
    if let Some((q, r)) = s.single(3) {
        if o.prim(q, r) {
            return Some("3h.1");
        }
        if o.p_mod(8) != 1 && q % 4 == 3 && o.half(q, r) {
            return Some("3h.2");
        }
    }
    if s.two >= 4 && s.odd.len() == 1 {
        let (q, r) = s.odd[0];
        if q % 4 == 3
            && [3, 5, 11, 13].contains(&o.p_mod(16))
            && (o.prim(q, r) || o.half(q, r))
        {
            return Some("3i");
        }
    }
    None
}
