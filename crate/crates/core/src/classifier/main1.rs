//! Cyclotomic base `Z[zeta_m]` localised at a prime above `p`, `p` not dividing `m`.

use crate::abelian::AbelianGroup;
use crate::base_rings::{coprime_split, BaseRing};
use crate::ntheory::{divisors, euler_phi, ord};

use super::shape::gcd;
use super::{CaseOutcome, CleannessClass, Reading};

/// `(ord_{d1} p, ord_{d'm} p, phi(d1), d')` for the split of `d` against `m`.
fn split_orders(p: u64, m: u64, d: u64) -> (u64, u64, u64, u64) {
    let (d1, dp) = coprime_split(d, m).expect("positive");
    (ord(p, d1), ord(p, dp * m), euler_phi(d1).expect("positive"), dp)
}

pub(crate) fn classify(base: &BaseRing, m: u64, group: &AbelianGroup, reading: Reading) -> CaseOutcome {
    if reading == Reading::Corrected && m % 4 == 2 {
        return classify_at(base, m / 2, group)
            .note("m = 2 (mod 4): evaluated at m/2, which gives the same field");
    }
    classify_at(base, m, group)
}

fn classify_at(base: &BaseRing, m: u64, group: &AbelianGroup) -> CaseOutcome {
    let p = base.p;
    let n = group.exponent();
    let (a, b, phi1, np) = split_orders(p, m, n);
    let om = ord(p, m);
    let l = num_integer::lcm(a, b);

    if np * phi1 * om == l {
        return CaseOutcome::new(CleannessClass::Clean, "main1.1");
    }

    let proper: Vec<u64> = divisors(n)
        .expect("positive")
        .into_iter()
        .filter(|&d| d != n)
        .collect();
    let irreducible = base.cyclotomic_poly_irreducible(n).expect("admissible");
    let cond_a = a == phi1 && b == np * om && gcd(a, b) == 2;
    let cond_b = 2 * a == phi1 && b == np * om && gcd(a, b) == 1;
    let cond_c = a == phi1 && 2 * b == np * om && gcd(a, b) == 1;

    if group.is_cyclic() && irreducible {
        if cond_a
            && proper.iter().all(|&d| {
                let (ad, bd, _, _) = split_orders(p, m, d);
                gcd(ad, bd) == 1
            })
        {
            return CaseOutcome::new(CleannessClass::WeaklyCleanNotClean, "main1.3.a");
        }
        if cond_b
            && proper.iter().all(|&d| {
                let (ad, _, phid, _) = split_orders(p, m, d);
                ad == phid
            })
        {
            return CaseOutcome::new(CleannessClass::WeaklyCleanNotClean, "main1.3.b");
        }
        if a == phi1 && np == 2 && ord(p, 2 * m) == om && gcd(a, om) == 1 {
            return CaseOutcome::new(CleannessClass::WeaklyCleanNotClean, "main1.3.c");
        }
    }

    for (cond, case) in [(cond_a, "main1.2.a"), (cond_b, "main1.2.b"), (cond_c, "main1.2.c")] {
        if cond {
            return CaseOutcome::new(CleannessClass::FeeblyCleanNotWeaklyClean, case);
        }
    }
    CaseOutcome::new(CleannessClass::NotFeeblyClean, "main1.none")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(m: u64, p: u64, g: &str, reading: Reading) -> (CleannessClass, String) {
        let base = BaseRing::cyclotomic(m, p).unwrap();
        let o = classify(&base, m, &g.parse().unwrap(), reading);
        (o.verdict, o.case)
    }

    #[test]
    fn weakly_cases() {
        use CleannessClass::*;
        let c = Reading::Corrected;
        // N = 81 and ord_4 81 = 1: only t_4 = 2.
        assert_eq!(run(5, 3, "4", c), (WeaklyCleanNotClean, "main1.3.a".into()));
        assert_eq!(run(5, 3, "2,4", c).0, FeeblyCleanNotWeaklyClean);
        assert_eq!(run(3, 7, "1", c).0, Clean);
    }

    #[test]
    fn twice_odd_m() {
        use CleannessClass::*;
        assert_eq!(run(2, 3, "8", Reading::Literal), (FeeblyCleanNotWeaklyClean, "main1.2.c".into()));
        assert_eq!(run(2, 3, "8", Reading::Corrected).0, WeaklyCleanNotClean);
        assert_eq!(run(2, 5, "12", Reading::Literal), (WeaklyCleanNotClean, "main1.3.c".into()));
        assert_eq!(run(2, 5, "12", Reading::Corrected).0, FeeblyCleanNotWeaklyClean);
        assert_eq!(run(6, 7, "8", Reading::Corrected), run(3, 7, "8", Reading::Corrected));
    }
}
