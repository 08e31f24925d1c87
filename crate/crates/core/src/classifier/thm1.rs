//! Rational base `Z_(p)`.

use crate::abelian::AbelianGroup;
use crate::ntheory::{euler_phi, is_prime, ord};

use super::shape::{gcd, Orders, Shape};
use super::{CaseOutcome, CleannessClass, Reading};

pub(crate) fn classify(p: u64, group: &AbelianGroup, reading: Reading) -> CaseOutcome {
    let n = group.exponent();
    let phi = euler_phi(n).expect("exponent is positive");
    let o = ord(p, n);
    if p == 2 {
        return if o == phi {
            CaseOutcome::new(CleannessClass::Clean, "rational.p2")
        } else {
            CaseOutcome::new(CleannessClass::NotFeeblyClean, "rational.p2")
        }
        .note("p = 2: clean iff 2 is a primitive root of exp(G); the weaker classes collapse");
    }
    if o == phi {
        return CaseOutcome::new(CleannessClass::Clean, "thm1.1");
    }
    if group.is_cyclic() {
        if let Some(case) = weakly_case(n, p, reading) {
            return CaseOutcome::new(CleannessClass::WeaklyCleanNotClean, case);
        }
    }
    if phi == 2 * o {
        return CaseOutcome::new(CleannessClass::FeeblyCleanNotWeaklyClean, "thm1.2");
    }
    CaseOutcome::new(CleannessClass::NotFeeblyClean, "thm1.none")
}

fn weakly_case(n: u64, p: u64, reading: Reading) -> Option<&'static str> {
    let o = Orders::new(p);
    if (n == 4 && p % 4 == 1) || (n == 8 && p % 4 == 3) {
        return Some("thm1.3a");
    }
    if n % 2 == 1 && is_prime(n) && o.half(n, 1) {
        return Some("thm1.3b");
    }
    let s = Shape::of(n);
    if let Some((q, 1)) = s.single(2) {
        let residue_ok = reading == Reading::Literal || p % 4 == 3;
        if o.prim(q, 1) && residue_ok {
            return Some("thm1.3c");
        }
    }
    let f = crate::ntheory::factorize(n).expect("positive");
    if f.factors().len() == 2 && f.is_squarefree() {
        let (q1, q2) = (f.factors()[0].0, f.factors()[1].0);
        if o.prim(q1, 1) && o.prim(q2, 1) && gcd(q1 - 1, q2 - 1) == 2 {
            return Some("thm1.3d");
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn case(p: u64, g: &str, reading: Reading) -> (CleannessClass, String) {
        let o = classify(p, &g.parse().unwrap(), reading);
        (o.verdict, o.case)
    }

    #[test]
    fn listed_cases() {
        use CleannessClass::*;
        let c = Reading::Corrected;
        assert_eq!(case(5, "4", c), (WeaklyCleanNotClean, "thm1.3a".into()));
        assert_eq!(case(3, "8", c), (WeaklyCleanNotClean, "thm1.3a".into()));
        assert_eq!(case(3, "11", c), (WeaklyCleanNotClean, "thm1.3b".into()));
        assert_eq!(case(11, "12", c), (WeaklyCleanNotClean, "thm1.3c".into()));
        assert_eq!(case(5, "2,4", c), (FeeblyCleanNotWeaklyClean, "thm1.2".into()));
        assert_eq!(case(3, "7", c), (Clean, "thm1.1".into()));
        assert_eq!(case(11, "5", c), (NotFeeblyClean, "thm1.none".into()));
    }

    #[test]
    fn residue_condition_on_4q() {
        use CleannessClass::*;
        assert_eq!(case(5, "12", Reading::Literal), (WeaklyCleanNotClean, "thm1.3c".into()));
        assert_eq!(case(5, "12", Reading::Corrected), (FeeblyCleanNotWeaklyClean, "thm1.2".into()));
    }
}
