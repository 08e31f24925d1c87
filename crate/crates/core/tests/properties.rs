use cleanring::classifier::{divisor_witnesses, DiscrepancyLedger};
use cleanring::ffpoly::{cyclotomic_polynomial, ddf_degrees, IntPoly, ModPoly};
use cleanring::ntheory::{divisors, euler_phi, is_prime, moebius, mult_order, pow_mod};
use cleanring::survey::{rows_from_csv, rows_from_json, rows_to_csv, rows_to_json, SurveyRow};
use cleanring::{
    classify_first_principles, classify_theorem, Agreement, AbelianGroup, BaseRing, CleannessClass,
};
use proptest::prelude::*;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn brute_phi(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

fn brute_order(a: u64, n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let mut x = a % n;
    let mut k = 1;
    while x != 1 {
        x = x * (a % n) % n;
        k += 1;
    }
    k
}

fn odd_prime() -> impl Strategy<Value = u64> {
    (3u64..400).prop_filter("prime", |&p| is_prime(p))
}

fn small_group() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(1u64..=24, 1..=3)
}

// ---- number theory ----

proptest! {
    #[test]
    fn phi_matches_gcd_count(n in 1u64..2000) {
        prop_assert_eq!(euler_phi(n).unwrap(), brute_phi(n));
    }

    #[test]
    fn order_matches_iteration(a in 1u64..500, n in 1u64..500) {
        prop_assume!(gcd(a, n) == 1);
        let o = mult_order(a as i64, n).unwrap();
        prop_assert_eq!(o, brute_order(a, n));
        prop_assert_eq!(euler_phi(n).unwrap() % o, 0);
        prop_assert_eq!(pow_mod(a, o, n), 1 % n);
    }

    #[test]
    fn order_of_power(p in odd_prime(), n in 1u64..300, f in 1u64..=6) {
        prop_assume!(n % p != 0);
        let o = mult_order(p as i64, n).unwrap();
        let of = mult_order(pow_mod(p, f, n) as i64, n).unwrap();
        prop_assert_eq!(of, o / gcd(f, o));
    }

    #[test]
    fn negative_residues_reduce(a in -500i64..0, n in 2u64..300) {
        prop_assume!(gcd(a.unsigned_abs(), n) == 1);
        let r = a.rem_euclid(n as i64) as u64;
        prop_assert_eq!(mult_order(a, n).unwrap(), brute_order(r, n));
    }
}

#[test]
fn moebius_sums_vanish() {
    for n in 1..=1000u64 {
        let s: i64 = divisors(n).unwrap().iter().map(|&d| moebius(d).unwrap()).sum();
        assert_eq!(s, i64::from(n == 1), "n = {n}");
        let t: u64 = divisors(n).unwrap().iter().map(|&d| euler_phi(d).unwrap()).sum();
        assert_eq!(t, n);
    }
}

// ---- abelian groups ----

fn brute_elements_of_order(orders: &[u64], d: u64) -> u64 {
    let mut count = 0;
    let total: u64 = orders.iter().product();
    for mut idx in 0..total {
        let mut lcm = 1u64;
        for &n in orders {
            let x = idx % n;
            idx /= n;
            let ord = n / gcd(x, n);
            lcm = lcm / gcd(lcm, ord) * ord;
        }
        if lcm == d {
            count += 1;
        }
    }
    count
}

proptest! {
    #[test]
    fn normalize_is_canonical(orders in small_group()) {
        let g = AbelianGroup::normalize(&orders).unwrap();
        let again = AbelianGroup::normalize(g.invariant_factors()).unwrap();
        prop_assert_eq!(&g, &again);
        prop_assert_eq!(g.order(), orders.iter().product::<u64>());
        let f = g.invariant_factors();
        for w in f.windows(2) {
            prop_assert_eq!(w[1] % w[0], 0);
        }
        let mut rev = orders.clone();
        rev.reverse();
        prop_assert_eq!(AbelianGroup::normalize(&rev).unwrap(), g);
    }

    #[test]
    fn coprime_factors_merge(a in 1u64..60, b in 1u64..60) {
        prop_assume!(gcd(a, b) == 1);
        let g = AbelianGroup::normalize(&[a, b]).unwrap();
        prop_assert_eq!(g, AbelianGroup::cyclic(a * b).unwrap());
    }

    #[test]
    fn element_counts_by_enumeration(orders in prop::collection::vec(1u64..=12, 1..=3)) {
        let g = AbelianGroup::normalize(&orders).unwrap();
        let mut seen = 0;
        for d in divisors(g.exponent()).unwrap() {
            let n = g.elements_of_order(d).unwrap();
            prop_assert_eq!(n, brute_elements_of_order(&orders, d));
            prop_assert_eq!(g.cyclic_subgroup_count(d).unwrap() * euler_phi(d).unwrap(), n);
            seen += n;
        }
        prop_assert_eq!(seen, g.order());
    }

    #[test]
    fn primary_decomposition(orders in small_group(), q in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let g = AbelianGroup::normalize(&orders).unwrap();
        let a = g.primary_part(q);
        let b = g.complement(q);
        prop_assert!(a.is_q_group(q) || a.is_trivial());
        prop_assert_ne!(b.order() % q, 0);
        prop_assert_eq!(a.order() * b.order(), g.order());
        let mut both = a.invariant_factors().to_vec();
        both.extend_from_slice(b.invariant_factors());
        prop_assert_eq!(AbelianGroup::normalize(&both).unwrap(), g);
    }
}

// ---- base rings ----

proptest! {
    #[test]
    fn cyclotomic_tower_degree(m in 1u64..=200, d in 1u64..=200, p in odd_prime()) {
        prop_assume!(m % p != 0 && d % p != 0);
        let base = BaseRing::cyclotomic(m, p).unwrap();
        let deg = base.local_cyclotomic_degree(d).unwrap();
        let l = m / gcd(m, d) * d;
        prop_assert_eq!(deg * euler_phi(m).unwrap(), euler_phi(l).unwrap());
        prop_assert_eq!(euler_phi(d).unwrap() % deg, 0);
    }

    #[test]
    fn residue_degree_from_order(m in 1u64..=200, p in odd_prime()) {
        prop_assume!(m % p != 0);
        let base = BaseRing::cyclotomic(m, p).unwrap();
        prop_assert_eq!(base.residue_degree(), brute_order(p, m));
    }

    #[test]
    fn norm_order_is_order_of_power(m in 1u64..=60, d in 1u64..=200, p in odd_prime()) {
        prop_assume!(m % p != 0 && d % p != 0);
        let base = BaseRing::cyclotomic(m, p).unwrap();
        let f = base.residue_degree();
        let o = brute_order(p, d);
        prop_assert_eq!(base.norm_order(d).unwrap(), o / gcd(f, o));
    }
}

/// `Q(sqrt d)` sits inside `Q(zeta_n)` exactly when the conductor `|Delta|`
/// divides `n`; check that against quadratic residue symbols: for `p` split
/// completely in `Q(zeta_n)` (`p = 1 mod n`), `d` must be a square mod `p`.
#[test]
fn quadratic_degree_consistent_with_splitting() {
    let ds = [-7i64, -3, -2, -1, 2, 3, 5, 6, 13];
    for d in ds {
        for n in 1..=120u64 {
            let p = (1..).map(|k| k * n + 1).find(|&q| is_prime(q) && q > 3 && (d.unsigned_abs() % q) != 0).unwrap();
            let base = BaseRing::quadratic(d, p).unwrap();
            let halved = base.local_cyclotomic_degree(n).unwrap() * 2 == euler_phi(n).unwrap();
            if halved {
                let r = pow_mod(d.rem_euclid(p as i64) as u64, (p - 1) / 2, p);
                assert_eq!(r, 1, "d = {d}, n = {n}, p = {p}");
            }
        }
    }
}

// ---- polynomials ----

#[test]
fn cyclotomic_product_is_x_n_minus_one() {
    for n in 1..=120usize {
        let mut prod = IntPoly::one();
        for d in divisors(n as u64).unwrap() {
            prod = prod.mul(&cyclotomic_polynomial(d).unwrap());
        }
        assert_eq!(prod, IntPoly::x_pow_minus_one(n), "n = {n}");
    }
}

#[test]
fn cyclotomic_degrees() {
    for d in 1..=300u64 {
        let f = cyclotomic_polynomial(d).unwrap();
        assert_eq!(f.degree(), Some(euler_phi(d).unwrap() as usize), "d = {d}");
        assert_eq!(f.coeffs().last(), Some(&1));
    }
}

fn rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        for (i, &gi) in g.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - c * gi % p) % p;
        }
        r.pop();
        while r.last() == Some(&0) {
            r.pop();
        }
    }
    r
}

fn quot(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    let mut q = vec![0; f.len() - dg];
    while r.len() > dg {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        q[shift] = c;
        for (i, &gi) in g.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - c * gi % p) % p;
        }
        r.pop();
    }
    q
}

fn monic_of_degree(k: usize, p: u64, idx: u64) -> Vec<u64> {
    let mut v = Vec::with_capacity(k + 1);
    let mut i = idx;
    for _ in 0..k {
        v.push(i % p);
        i /= p;
    }
    v.push(1);
    v
}

/// Factor a monic squarefree polynomial by trial division.
fn brute_factor_degrees(f: &[u64], p: u64) -> Vec<usize> {
    let mut rest = f.to_vec();
    let mut degs = Vec::new();
    let mut k = 1;
    while rest.len() > 2 * k {
        let mut found = false;
        for idx in 0..p.pow(k as u32) {
            let g = monic_of_degree(k, p, idx);
            if rem(&rest, &g, p).is_empty() {
                rest = quot(&rest, &g, p);
                degs.push(k);
                found = true;
                break;
            }
        }
        if !found {
            k += 1;
        }
    }
    if rest.len() > 1 {
        degs.push(rest.len() - 1);
    }
    degs
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ddf_matches_trial_division(
        p in prop::sample::select(vec![3u64, 5, 7, 11, 13]),
        tail in prop::collection::vec(0u64..13, 1..=4),
    ) {
        let mut coeffs: Vec<u64> = tail.iter().map(|c| c % p).collect();
        coeffs.push(1);
        let f = ModPoly::new(p, coeffs.clone());
        prop_assume!(f.gcd(&f.derivative()).degree() == Some(0));
        let mut expected: Vec<(usize, usize)> = Vec::new();
        for d in brute_factor_degrees(&coeffs, p) {
            match expected.iter_mut().find(|(k, _)| *k == d) {
                Some(e) => e.1 += 1,
                None => expected.push((d, 1)),
            }
        }
        expected.sort();
        prop_assert_eq!(ddf_degrees(&f).unwrap(), expected);
    }
}

// ---- classifier ----

fn verdict_rank(c: CleannessClass) -> u8 {
    match c {
        CleannessClass::Clean => 0,
        CleannessClass::WeaklyCleanNotClean => 1,
        CleannessClass::FeeblyCleanNotWeaklyClean => 2,
        CleannessClass::NotFeeblyClean => 3,
    }
}

proptest! {
    #[test]
    fn witnesses_are_integral(p in odd_prime(), orders in small_group(), m in 1u64..=30) {
        let g = AbelianGroup::normalize(&orders).unwrap();
        prop_assume!(!g.exponent().is_multiple_of(p) && m % p != 0);
        for base in [BaseRing::rational(p).unwrap(), BaseRing::cyclotomic(m, p).unwrap()] {
            let ws = divisor_witnesses(&base, &g).unwrap();
            prop_assert_eq!(ws.len(), divisors(g.exponent()).unwrap().len());
            for w in ws {
                prop_assert_eq!(w.deg_phi, w.max_ideals * w.ord_norm);
                prop_assert_eq!(w.nu * w.deg_phi, euler_phi(w.d).unwrap());
                prop_assert_eq!(w.lambda, w.mu * w.nu);
            }
        }
    }

    #[test]
    fn clean_and_feebly_depend_on_exponent_only(p in odd_prime(), orders in small_group()) {
        let g = AbelianGroup::normalize(&orders).unwrap();
        prop_assume!(!g.exponent().is_multiple_of(p));
        let base = BaseRing::rational(p).unwrap();
        let a = classify_first_principles(&base, &g).unwrap().verdict;
        let c = classify_first_principles(&base, &AbelianGroup::cyclic(g.exponent()).unwrap()).unwrap().verdict;
        prop_assert_eq!(a.is_clean(), c.is_clean());
        prop_assert_eq!(a.is_feebly_clean(), c.is_feebly_clean());
        // more cyclic subgroups can only weaken the verdict
        prop_assert!(verdict_rank(a) >= verdict_rank(c));
    }

    #[test]
    fn subgroups_are_no_worse(p in odd_prime(), orders in small_group(), pick in 0usize..64) {
        let g = AbelianGroup::normalize(&orders).unwrap();
        prop_assume!(!g.exponent().is_multiple_of(p));
        let ds = divisors(g.exponent()).unwrap();
        let h = AbelianGroup::cyclic(ds[pick % ds.len()]).unwrap();
        let base = BaseRing::rational(p).unwrap();
        let vg = classify_first_principles(&base, &g).unwrap().verdict;
        let vh = classify_first_principles(&base, &h).unwrap().verdict;
        if vg.is_clean() {
            prop_assert!(vh.is_clean());
        }
        if vg.is_feebly_clean() {
            prop_assert!(vh.is_feebly_clean());
        }
    }

    #[test]
    fn rational_case_lists_agree(p in odd_prime(), orders in prop::collection::vec(1u64..=400, 1..=2)) {
        let g = AbelianGroup::normalize(&orders).unwrap();
        prop_assume!(!g.exponent().is_multiple_of(p));
        let base = BaseRing::rational(p).unwrap();
        let th = classify_theorem(&base, &g).unwrap();
        let fp = classify_first_principles(&base, &g).unwrap();
        prop_assert_eq!(th.verdict, fp.verdict, "case {:?}", th.matched_case);
    }

    #[test]
    fn cyclotomic_case_lists_agree(m in 1u64..=40, p in odd_prime(), n in 1u64..=200) {
        let g = AbelianGroup::cyclic(n).unwrap();
        prop_assume!(n % p != 0 && m % p != 0);
        let base = BaseRing::cyclotomic(m, p).unwrap();
        let th = classify_theorem(&base, &g).unwrap();
        let fp = classify_first_principles(&base, &g).unwrap();
        prop_assert_eq!(th.verdict, fp.verdict, "case {:?}", th.matched_case);
    }

    #[test]
    fn quadratic_disagreements_are_ledgered(d in -40i64..=40, p in odd_prime(), n in 1u64..=120) {
        let Ok(base) = BaseRing::quadratic(d, p) else { return Ok(()) };
        let g = AbelianGroup::cyclic(n).unwrap();
        prop_assume!(n % p != 0);
        let rec = cleanring::cross_validate(&base, &g, &DiscrepancyLedger::bundled().unwrap()).unwrap();
        prop_assert_ne!(rec.status, Agreement::Unexpected);
    }
}

// ---- serialization ----

proptest! {
    #[test]
    fn survey_rows_round_trip(p in odd_prime(), orders in small_group(), d in -20i64..=20) {
        let g = AbelianGroup::normalize(&orders).unwrap();
        prop_assume!(!g.exponent().is_multiple_of(p));
        let base = BaseRing::quadratic(d, p).unwrap_or_else(|_| BaseRing::rational(p).unwrap());
        let fp = classify_first_principles(&base, &g).unwrap();
        let row = SurveyRow {
            base_kind: base.kind.name().into(),
            base_param: base.kind.param(),
            p,
            group: g,
            verdict: fp.verdict,
            matched_case: Some("x".into()),
            agree: Agreement::Agree,
        };
        let rows = vec![row];
        prop_assert_eq!(&rows_from_csv(&rows_to_csv(&rows).unwrap()).unwrap(), &rows);
        prop_assert_eq!(&rows_from_json(&rows_to_json(&rows).unwrap()).unwrap(), &rows);
    }
}

#[test]
fn bundled_ledger_round_trips() {
    let ledger = DiscrepancyLedger::bundled().unwrap();
    let text = ledger.to_toml_string().unwrap();
    assert_eq!(DiscrepancyLedger::from_toml_str(&text).unwrap(), ledger);
}
