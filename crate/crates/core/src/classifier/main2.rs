//! Quadratic base `O_K`, `K = Q(sqrt d)`, localised at a prime above `p`.
//!
//! The three top-level cases split on whether the discriminant divides
//! `e = exp(G)` and on the Legendre symbol `(disc / p)`.

use crate::abelian::AbelianGroup;
use crate::base_rings::BaseRing;
use crate::ntheory::{euler_phi, is_prime, ord};

use super::shape::{gcd, phi_eps, phi_pp, Orders, Shape};
use super::{CaseOutcome, CleannessClass};

use CleannessClass::{Clean, FeeblyCleanNotWeaklyClean as Feebly, NotFeeblyClean, WeaklyCleanNotClean as Weakly};

struct Ctx<'a> {
    base: &'a BaseRing,
    group: &'a AbelianGroup,
    p: u64,
    e: u64,
    d: i64,
    delta: i64,
    leg: i8,
    s: Shape,
    o: Orders,
}

impl Ctx<'_> {
    fn abs_delta(&self) -> u64 {
        self.delta.unsigned_abs()
    }

    /// `d = +-x`.
    fn d_pm(&self, x: u64) -> bool {
        self.d.unsigned_abs() == x
    }

    fn d_mod4(&self) -> i64 {
        self.d.rem_euclid(4)
    }

    fn p_mod(&self, m: u64) -> u64 {
        self.p % m
    }

    fn irreducible(&self, n: u64) -> bool {
        self.base.cyclotomic_poly_irreducible(n).expect("admissible")
    }

    fn ord_e(&self) -> u64 {
        ord(self.p, self.e)
    }

    fn phi_e(&self) -> u64 {
        euler_phi(self.e).expect("positive")
    }

    /// `e = 2^r` with `r >= lo`.
    fn two_power_at_least(&self, lo: u32) -> bool {
        self.s.is_two_power() && self.s.two >= lo
    }
}

pub(crate) fn classify(base: &BaseRing, d: i64, group: &AbelianGroup) -> CaseOutcome {
    let e = group.exponent();
    let cx = Ctx {
        base,
        group,
        p: base.p,
        e,
        d,
        delta: base.discriminant.expect("quadratic base"),
        leg: base.legendre_delta.expect("quadratic base"),
        s: Shape::of(e),
        o: Orders::new(base.p),
    };
    let divides = (e as i64) % cx.delta == 0;
    let outcome = match (divides, cx.leg == -1) {
        (false, _) => case1(&cx),
        (true, false) => case2(&cx),
        (true, true) => case3(&cx),
    };
    outcome.unwrap_or_else(|| {
        let top = match (divides, cx.leg == -1) {
            (false, _) => 1,
            (true, false) => 2,
            (true, true) => 3,
        };
        CaseOutcome::new(NotFeeblyClean, format!("main2.{top}.none"))
    })
}

fn case1(cx: &Ctx) -> Option<CaseOutcome> {
    let (phi, o, inert) = (cx.phi_e(), cx.ord_e(), cx.leg == -1);
    if phi == o && !inert {
        return Some(CaseOutcome::new(Clean, "main2.1.a.i"));
    }
    if cx.e == 2 && inert {
        return Some(CaseOutcome::new(Clean, "main2.1.a.ii"));
    }
    if cx.group.is_cyclic() && cx.irreducible(cx.e) {
        if cx.e == 4 && inert {
            return Some(CaseOutcome::new(Weakly, "main2.1.c.four"));
        }
        if !inert {
            if let Some(case) = case1c(cx) {
                return Some(CaseOutcome::new(Weakly, case));
            }
        }
    }
    if phi == 2 * o && !inert {
        return Some(CaseOutcome::new(Feebly, "main2.1.b.i"));
    }
    if phi == 2 * o && o % 2 == 1 && inert {
        return Some(CaseOutcome::new(Feebly, "main2.1.b.ii"));
    }
    if cx.e != 2 && phi == o && inert {
        return Some(CaseOutcome::new(Feebly, "main2.1.b.iii"));
    }
    None
}

fn case1c(cx: &Ctx) -> Option<&'static str> {
    let (e, o) = (cx.e, &cx.o);
    if (e == 4 && cx.p_mod(4) == 1) || (e == 8 && cx.p_mod(4) == 3) {
        return Some("main2.1.c.i");
    }
    if e % 2 == 1 && is_prime(e) && o.half(e, 1) {
        return Some("main2.1.c.ii");
    }
    if let Some((q, 1)) = cx.s.single(2) {
        if o.prim(q, 1) {
            return Some("main2.1.c.iii");
        }
    }
    let f = crate::ntheory::factorize(e).expect("positive");
    if f.factors().len() == 2 && f.is_squarefree() {
        let (q1, q2) = (f.factors()[0].0, f.factors()[1].0);
        if o.prim(q1, 1) && o.prim(q2, 1) && gcd(q1 - 1, q2 - 1) == 2 {
            return Some("main2.1.c.iv");
        }
    }
    None
}

fn case2(cx: &Ctx) -> Option<CaseOutcome> {
    if let Some(case) = case2a(cx) {
        return Some(CaseOutcome::new(Clean, case));
    }
    if let Some(case) = case2c(cx) {
        return Some(CaseOutcome::new(Weakly, case));
    }
    if 2 * cx.ord_e() == cx.phi_e() {
        return Some(CaseOutcome::new(Feebly, "main2.2.b.half"));
    }
    case2b(cx).map(|case| CaseOutcome::new(Feebly, case))
}

fn case2a(cx: &Ctx) -> Option<&'static str> {
    let (o, ad) = (&cx.o, cx.abs_delta());
    let d2 = ad == 8 && cx.d_pm(2);
    if cx.e == 8 && d2 && cx.p_mod(4) == 3 {
        return Some("main2.2.a.i");
    }
    if cx.two_power_at_least(4) && d2 && [3, 11].contains(&cx.p_mod(16)) {
        return Some("main2.2.a.ii");
    }
    for v in cx.s.odd_or_twice(1) {
        let (q, r) = v[0];
        if ad == q && cx.d_pm(q) && cx.d_mod4() == 1 && o.half_eps(q, r) {
            return Some("main2.2.a.iii");
        }
    }
    if let Some((q, r)) = cx.s.single(2) {
        if ad == q && cx.d == -(q as i64) && cx.d_mod4() == 1 && cx.p_mod(4) == 3 && o.half_eps(q, r) {
            return Some("main2.2.a.iv");
        }
        if ad == 4 * q && cx.d_pm(q) && cx.d_mod4() == 3 && cx.p_mod(4) == 3 && o.prim_eps(q, r) {
            return Some("main2.2.a.v");
        }
    }
    for v in cx.s.odd_or_twice(2) {
        let [(q1, r1), (q2, r2)] = [v[0], v[1]];
        let g = gcd(phi_eps(q1, r1), phi_eps(q2, r2));
        if ad == q2
            && cx.d == -(q2 as i64)
            && cx.d_mod4() == 1
            && o.prim_eps(q1, r1)
            && o.half_eps(q2, r2)
            && g == 2
        {
            return Some("main2.2.a.vi");
        }
        if ad == q1 * q2
            && cx.d_pm(q1 * q2)
            && cx.d_mod4() == 1
            && o.prim_eps(q1, r1)
            && o.prim_eps(q2, r2)
            && g == 2
        {
            return Some("main2.2.a.vii");
        }
    }
    None
}

fn case2c(cx: &Ctx) -> Option<&'static str> {
    let (o, ad, g) = (&cx.o, cx.abs_delta(), cx.group);
    if cx.two_power_at_least(3)
        && ad == 8
        && cx.d_pm(2)
        && cx.p_mod(8) == 5
        && g.is_cyclic()
        && cx.irreducible(4)
    {
        return Some("main2.2.c.i");
    }
    if let Some((q, r)) = cx.s.single(2) {
        if ad == 4 * q
            && cx.d_pm(q)
            && cx.d_mod4() == 3
            && cx.p_mod(4) == 1
            && o.prim_eps(q, r)
            && g.primary_part(2).invariant_factors() == [4]
            && g.complement(2).is_q_group(q)
            && cx.irreducible(4)
        {
            return Some("main2.2.c.ii");
        }
    }
    for v in cx.s.odd_or_twice(2) {
        let [(q1, r1), (q2, r2)] = [v[0], v[1]];
        if r2 == 1
            && ad == q1 * q2
            && cx.d_pm(q1 * q2)
            && cx.d_mod4() == 1
            && o.prim_eps(q1, r1)
            && o.half(q2, 1)
            && gcd(phi_eps(q1, r1), q2 - 1) == 2
            && g.primary_part(q2).invariant_factors() == [q2]
            && g.complement(q2).is_q_group(q1)
            && cx.irreducible(q2)
        {
            return Some("main2.2.c.iii");
        }
    }
    if g.is_cyclic() && cx.irreducible(cx.e) {
        return case2c_iv(cx);
    }
    None
}

fn case2c_iv(cx: &Ctx) -> Option<&'static str> {
    let (o, ad, e) = (&cx.o, cx.abs_delta(), cx.e);
    if let Some((q, 1)) = cx.s.single(0) {
        if q % 4 == 1 && cx.delta == q as i64 && cx.d == q as i64 && o.quarter(q, 1) {
            return Some("main2.2.c.iv.1");
        }
    }
    let two_odd: Vec<(u64, u64)> = cx
        .s
        .with_two(0, 2)
        .into_iter()
        .filter(|v| v[0].1 == 1 && v[1].1 == 1)
        .map(|v| (v[0].0, v[1].0))
        .collect();
    for &(q1, q2) in &two_odd {
        if cx.delta == (q1 * q2) as i64
            && cx.d == cx.delta
            && q1 % 4 == 1
            && q2 % 4 == 1
            && o.prim(q1, 1)
            && o.prim(q2, 1)
            && gcd(q1 - 1, q2 - 1) == 4
        {
            return Some("main2.2.c.iv.2");
        }
    }
    if e == 8 && ad == 8 && cx.d_pm(2) && [7, 15].contains(&cx.p_mod(16)) {
        return Some("main2.2.c.iv.3");
    }
    for &(q1, q2) in &two_odd {
        if ad == q1
            && cx.d_pm(q1)
            && cx.d_mod4() == 1
            && o.prim(q2, 1)
            && o.half(q1, 1)
            && gcd((q1 - 1) / 2, q2 - 1) == 2
        {
            return Some("main2.2.c.iv.4");
        }
    }
    if let Some((q, 1)) = cx.s.single(2) {
        if ad == q && cx.d == q as i64 && cx.d_mod4() == 1 && cx.p_mod(4) == 3 && o.half(q, 1) {
            return Some("main2.2.c.iv.5");
        }
    }
    None
}

/// Nonempty products of the given primes.
fn subset_products(qs: &[u64]) -> Vec<u64> {
    (1u32..(1 << qs.len()))
        .map(|mask| {
            qs.iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &q)| q)
                .product()
        })
        .collect()
}

fn case2b(cx: &Ctx) -> Option<&'static str> {
    let (o, ad, p) = (&cx.o, cx.abs_delta(), cx.p);
    let d2 = ad == 8 && cx.d_pm(2);
    let delta_is_d = cx.delta == cx.d;
    if cx.e == 8 && d2 && p % 8 == 1 {
        return Some("main2.2.b.i");
    }
    if cx.two_power_at_least(4) && d2 && p % 16 == 9 {
        return Some("main2.2.b.ii");
    }
    for v in cx.s.odd_or_twice(1) {
        let (q, r) = v[0];
        if q % 4 == 1 && delta_is_d && cx.d == q as i64 && o.quarter_eps(q, r) {
            return Some("main2.2.b.iii");
        }
    }
    for v in cx.s.odd_or_twice(2) {
        let [(q1, r1), (q2, r2)] = [v[0], v[1]];
        let (f1, f2) = (phi_eps(q1, r1), phi_eps(q2, r2));
        let qs = [q1, q2, q1 * q2];
        let d_in = |set: &[u64]| set.iter().any(|&x| cx.d == x as i64);
        let abs_in = qs.contains(&ad);
        if o.prim_eps(q1, r1) && o.prim_eps(q2, r2) && gcd(f1, f2) == 4 && delta_is_d && d_in(&qs) {
            return Some("main2.2.b.iv.1");
        }
        if o.prim_eps(q1, r1)
            && o.half_eps(q2, r2)
            && gcd(f1, f2 / 2) == 2
            && abs_in
            && delta_is_d
            && cx.d_mod4() == 1
        {
            return Some("main2.2.b.iv.2");
        }
        if o.half_eps(q1, r1)
            && o.half_eps(q2, r2)
            && gcd(f1 / 2, f2 / 2) == 1
            && abs_in
            && delta_is_d
            && cx.d_mod4() == 1
        {
            return Some("main2.2.b.iv.3");
        }
        if o.prim_eps(q1, r1)
            && o.quarter_eps(q2, r2)
            && gcd(f1, f2 / 4) == 1
            && delta_is_d
            && cx.d == q2 as i64
        {
            return Some("main2.2.b.iv.4");
        }
    }
    for v in cx.s.odd_or_twice(3) {
        let f: Vec<u64> = v.iter().map(|&(q, r)| phi_pp(q, r)).collect();
        if gcd(f[0], f[1]) != 2 || gcd(f[0], f[2]) != 2 || gcd(f[1], f[2]) != 2 {
            continue;
        }
        let [(q1, r1), (q2, r2), (q3, r3)] = [v[0], v[1], v[2]];
        let sub = subset_products(&[q1, q2, q3]);
        let delta_ok = sub.contains(&ad) && delta_is_d && cx.d_mod4() == 1;
        if o.prim(q1, r1) && o.prim(q2, r2) && o.prim(q3, r3) && delta_ok {
            return Some("main2.2.b.v.1");
        }
        if o.prim(q1, r1) && o.prim(q2, r2) && o.half_odd(q3, r3) && delta_ok {
            return Some("main2.2.b.v.2");
        }
        let allowed = [-(q2 as i64), -(q3 as i64), (q2 * q3) as i64];
        if o.prim(q1, r1)
            && o.half_odd(q2, r2)
            && o.half_odd(q3, r3)
            && delta_is_d
            && allowed.contains(&cx.d)
        {
            return Some("main2.2.b.v.3");
        }
    }
    if let Some((q, r)) = cx.s.single(2) {
        let qi = q as i64;
        if p % 4 == 1
            && o.half(q, r)
            && ((delta_is_d && cx.d_pm(q) && cx.d_mod4() == 1)
                || (cx.delta == 4 * cx.d && cx.d_pm(q) && cx.d_mod4() == 3))
        {
            return Some("main2.2.b.vi.1");
        }
        if p % 4 == 3
            && q % 4 == 1
            && o.half(q, r)
            && ((delta_is_d && cx.d == qi) || (cx.delta == 4 * cx.d && cx.d == -qi))
        {
            return Some("main2.2.b.vi.2");
        }
        if p % 4 == 3 && q % 8 == 5 && o.quarter(q, r) && delta_is_d && cx.d == qi {
            return Some("main2.2.b.vi.3");
        }
    }
    for v in cx.s.with_two(2, 2) {
        let [(q1, r1), (q2, r2)] = [v[0], v[1]];
        if q2 % 4 != 3 {
            continue;
        }
        let g = gcd(phi_eps(q1, r1), phi_eps(q2, r2));
        let six = [q1, q2, 4 * q1, 4 * q2, q1 * q2, 4 * q1 * q2];
        let d_form = (delta_is_d && cx.d_mod4() == 1) || (cx.delta == 4 * cx.d && cx.d_mod4() == 3);
        if g == 2 && o.prim_eps(q1, r1) && o.prim_eps(q2, r2) && six.contains(&ad) && d_form {
            return Some("main2.2.b.vii.1");
        }
        if g == 2
            && o.prim_eps(q1, r1)
            && o.half_eps(q2, r2)
            && ((p % 4 == 3 && six.contains(&ad)) || (p % 4 == 1 && [q2, 4 * q2].contains(&ad)))
        {
            return Some("main2.2.b.vii.2");
        }
        let allowed = [-(q1 as i64), -(q2 as i64), (q1 * q2) as i64];
        if p % 4 == 3
            && q1 % 4 == 3
            && o.half(q1, r1)
            && o.half(q2, r2)
            && gcd(phi_pp(q1, r1) / 2, phi_pp(q2, r2) / 2) == 1
            && delta_is_d
            && allowed.contains(&cx.d)
        {
            return Some("main2.2.b.vii.3");
        }
    }
    if let Some((q, r)) = cx.s.single(3) {
        let qi = q as i64;
        if o.prim(q, r)
            && ((p % 8 == 1 && cx.d_pm(2) && cx.delta == 4 * cx.d)
                || (p % 8 != 1 && [q, 4 * q, 8].contains(&ad)))
        {
            return Some("main2.2.b.viii.1");
        }
        if q % 4 == 3
            && o.half(q, r)
            && ((p % 8 == 5 && [4 * qi, -qi].contains(&cx.delta))
                || (p % 4 != 1 && [-qi, 4 * qi, 8, -8].contains(&cx.delta)))
        {
            return Some("main2.2.b.viii.2");
        }
    }
    if cx.s.two >= 4 && cx.s.odd.len() == 1 {
        let (q, r) = cx.s.odd[0];
        if q % 4 == 3
            && [3, 5, 11, 13].contains(&(p % 16))
            && [8, q, 4 * q].contains(&ad)
            && (o.prim(q, r) || o.half(q, r))
        {
            return Some("main2.2.b.ix");
        }
    }
    None
}

fn case3(cx: &Ctx) -> Option<CaseOutcome> {
    if let Some(case) = case3a(cx) {
        return Some(CaseOutcome::new(Clean, case));
    }
    if let Some(case) = case3c(cx) {
        return Some(CaseOutcome::new(Weakly, case));
    }
    let (phi, o) = (cx.phi_e(), cx.ord_e());
    if o == phi && cx.e >= 3 {
        return Some(CaseOutcome::new(Feebly, "main2.3.b.full"));
    }
    if 2 * o == phi && o % 2 == 1 {
        return Some(CaseOutcome::new(Feebly, "main2.3.b.half-odd"));
    }
    case3b(cx).map(|case| CaseOutcome::new(Feebly, case))
}

fn case3a(cx: &Ctx) -> Option<&'static str> {
    let (o, ad) = (&cx.o, cx.abs_delta());
    for v in cx.s.odd_or_twice(1) {
        let (q, r) = v[0];
        if ad == q
            && cx.d_pm(q)
            && cx.d_mod4() == 1
            && (o.prim_eps(q, r) || (q % 4 == 3 && o.half_eps(q, r)))
        {
            return Some("main2.3.a");
        }
    }
    None
}

fn case3c(cx: &Ctx) -> Option<&'static str> {
    let q = cx.e;
    if q % 2 == 1
        && is_prime(q)
        && cx.group.is_cyclic()
        && cx.irreducible(q)
        && cx.abs_delta() == q
        && cx.d == q as i64
        && q % 4 == 1
    {
        let o = ord(cx.p, q);
        if (4 * o == q - 1 && o % 2 == 1) || 2 * o == q - 1 {
            return Some("main2.3.c");
        }
    }
    None
}

fn case3b(cx: &Ctx) -> Option<&'static str> {
    let (o, ad, p) = (&cx.o, cx.abs_delta(), cx.p);
    let d2 = ad == 8 && cx.d_pm(2);
    let delta_is_d = cx.delta == cx.d;
    if cx.e == 8 && d2 {
        return Some("main2.3.b.i");
    }
    if cx.two_power_at_least(4) && d2 && [3, 5, 11, 13].contains(&(p % 16)) {
        return Some("main2.3.b.ii");
    }
    for v in cx.s.odd_or_twice(1) {
        let (q, r) = v[0];
        if q % 4 == 1 && delta_is_d && cx.d == q as i64 && o.half_eps(q, r) {
            return Some("main2.3.b.iii");
        }
        if q % 8 == 5 && delta_is_d && cx.d == q as i64 && o.quarter_eps(q, r) {
            return Some("main2.3.b.iv");
        }
    }
    if let Some((q, r)) = cx.s.single(2) {
        let qi = q as i64;
        let alt = o.prim_eps(q, r) || (p % 4 == 3 && q % 4 == 3 && o.half_eps(q, r));
        if ad == q && cx.d_pm(q) && cx.d_mod4() == 1 && alt {
            return Some("main2.3.b.v");
        }
        if ad == 4 * q && cx.d_pm(q) && cx.d_mod4() == 3 && alt {
            return Some("main2.3.b.vi");
        }
        if delta_is_d && cx.d == -qi && cx.d_mod4() == 1 && p % 4 == 1 && o.half_eps(q, r) {
            return Some("main2.3.b.vii");
        }
        if cx.delta == 4 * qi && cx.d == qi && q % 4 == 3 && p % 4 == 1 && o.half_eps(q, r) {
            return Some("main2.3.b.viii");
        }
    }
    for v in cx.s.odd_or_twice(2) {
        let [(q1, r1), (q2, r2)] = [v[0], v[1]];
        let d_ok = ad == cx.d.unsigned_abs() && [q1, q2, q1 * q2].contains(&ad) && cx.d_mod4() == 1;
        if q2 % 4 == 3
            && gcd(phi_eps(q1, r1), phi_eps(q2, r2)) == 2
            && d_ok
            && o.prim_eps(q1, r1)
            && (o.prim_eps(q2, r2) || o.half_eps(q2, r2))
        {
            return Some("main2.3.b.ix");
        }
        if q1 % 4 == 3 && q2 % 4 == 3 && d_ok {
            let (f1, f2) = (phi_pp(q1, r1), phi_pp(q2, r2));
            let first = o.prim_eps(q1, r1) && o.half(q2, r2) && gcd(f1, f2 / 2) == 1;
            let second = o.half(q1, r1) && o.half(q2, r2) && gcd(f1 / 2, f2 / 2) == 1;
            if first || second {
                return Some("main2.3.b.x");
            }
        }
    }
    None
}
