//! Acceptance gate: one PASS/FAIL line per criterion.

use std::process::Command;
use std::time::Instant;

use cleanring::classifier::{prop26_cases, prop26_direct, prop32_direct, prop32_item, ERRATA};
use cleanring::ntheory::primes_in;
use cleanring::survey::{
    quadratic_params, rows_from_csv, rows_from_json, rows_to_csv, rows_to_json, run_survey,
    with_jobs, GroupShape, SurveyRange, SurveyRow,
};
use cleanring::verify::{oracle_sweep, theorem_sweep};
use cleanring::{
    classify_first_principles, classify_theorem, AbelianGroup, BaseKind, BaseRing, CleannessClass,
    DiscrepancyLedger, Reading,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Multiplicative order by repeated multiplication.
fn brute_order(a: u64, n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let mut x = a % n;
    let mut k = 1;
    while x != 1 {
        x = x * a % n;
        k += 1;
    }
    k
}

fn erratum_case(list: &str, label: &str) -> bool {
    ERRATA.iter().any(|e| {
        e.list == list
            && e.case
                .split(", ")
                .any(|c| label == c || label.starts_with(&format!("{c}.")))
    })
}

fn criterion1() -> Outcome {
    let t = Instant::now();
    let s = with_jobs(1, || oracle_sweep(60, 50)).unwrap().map_err(|e| e.to_string())?;
    let secs = t.elapsed().as_secs_f64();
    ensure(s.passed(), format!("{} oracle failures", s.failures.len()))?;
    ensure(secs < 60.0, format!("took {secs:.1} s"))?;
    Ok(format!("{} (d, p) pairs, single-threaded {secs:.2} s", s.checked))
}

fn criterion2() -> Outcome {
    let t = Instant::now();
    let (mut checked, mut literal_off) = (0, 0);
    for n in 1..=300 {
        for p in primes_in(3, 100) {
            if n % p == 0 {
                continue;
            }
            let direct = prop26_direct(n, p).unwrap();
            for k in [1, 2, 4] {
                checked += 1;
                let c = prop26_cases(n, p, k, Reading::Corrected).unwrap();
                ensure(
                    c.is_some() == (direct == Some(k)),
                    format!("n={n} p={p} k={k}: {c:?} vs ratio {direct:?}"),
                )?;
                let l = prop26_cases(n, p, k, Reading::Literal).unwrap();
                if l.is_some() != (direct == Some(k)) {
                    literal_off += 1;
                    let label = l.or(c).unwrap_or("-");
                    ensure(
                        erratum_case("prop26", label),
                        format!("literal mismatch outside errata: n={n} p={p} k={k} {label}"),
                    )?;
                }
            }
        }
    }
    let secs = t.elapsed().as_secs_f64();
    ensure(secs < 30.0, format!("took {secs:.1} s"))?;
    Ok(format!(
        "{checked} checks, 0 mismatches; printed text differs at {literal_off}, all listed errata; {secs:.2} s"
    ))
}

fn criterion3() -> Outcome {
    let (mut checked, mut literal_off) = (0, 0);
    for n in 1..=300 {
        for p in primes_in(3, 100) {
            if n % p == 0 {
                continue;
            }
            for item in 1..=5 {
                checked += 1;
                let direct = prop32_direct(n, p, item).unwrap();
                let c = prop32_item(n, p, item, Reading::Corrected).unwrap();
                ensure(
                    c.is_some() == direct,
                    format!("n={n} p={p} item={item}: {c:?} vs {direct}"),
                )?;
                let l = prop32_item(n, p, item, Reading::Literal).unwrap();
                if l.is_some() != direct {
                    literal_off += 1;
                    let label = l.unwrap_or("-");
                    ensure(
                        erratum_case("prop32", label),
                        format!("literal mismatch outside errata: n={n} p={p} item={item} {label}"),
                    )?;
                }
            }
        }
    }
    Ok(format!(
        "{checked} checks, 0 mismatches; printed text differs at {literal_off}, all listed errata"
    ))
}

fn rational_groups() -> Vec<AbelianGroup> {
    GroupShape::DivisorSums.groups(1, 200).unwrap()
}

fn criterion4() -> Outcome {
    let range = SurveyRange::new(vec![BaseKind::Rational], 3, 100, rational_groups()).unwrap();
    let s = theorem_sweep(&range, &DiscrepancyLedger::empty()).map_err(|e| e.to_string())?;
    ensure(
        s.failures.is_empty(),
        format!("{} mismatches, first {:?}", s.failures.len(), s.failures.first()),
    )?;
    Ok(format!("{} instances, identical verdicts", s.checked))
}

fn criterion5() -> Outcome {
    let range = SurveyRange::new(
        (1..=16).map(|m| BaseKind::Cyclotomic { m }).collect(),
        3,
        60,
        GroupShape::CyclicAndSquare.groups(1, 60).unwrap(),
    )
    .unwrap();
    let s = theorem_sweep(&range, &DiscrepancyLedger::bundled().unwrap()).map_err(|e| e.to_string())?;
    ensure(
        s.passed(),
        format!("{} unledgered, first {:?}", s.failures.len(), s.failures.first()),
    )?;
    Ok(format!("{} instances, {} ledgered, 0 unledgered", s.checked, s.expected.len()))
}

fn criterion6() -> Outcome {
    let ledger = DiscrepancyLedger::bundled().unwrap();
    let range = SurveyRange::new(
        quadratic_params(30).into_iter().map(|d| BaseKind::Quadratic { d }).collect(),
        3,
        60,
        GroupShape::CyclicAndSquare.groups(1, 60).unwrap(),
    )
    .unwrap();
    let s = theorem_sweep(&range, &ledger).map_err(|e| e.to_string())?;
    ensure(
        s.passed(),
        format!("{} unledgered, first {:?}", s.failures.len(), s.failures.first()),
    )?;
    let four: AbelianGroup = "4".parse().unwrap();
    let base = BaseRing::quadratic(-1, 5).unwrap();
    let hit = ledger.find(
        &base,
        &four,
        Some("main2.2.b.half"),
        CleannessClass::FeeblyCleanNotWeaklyClean,
        CleannessClass::Clean,
    );
    ensure(hit.is_some(), "no ledger entry for d = -1, exp(G) = 4")?;
    ensure(
        ledger.entries.iter().any(|e| e.case == "main2.3.c"),
        "no ledger entry for the inert weakly case",
    )?;
    let records = run_survey(&range, &ledger).map_err(|e| e.to_string())?;
    ensure(
        records
            .iter()
            .all(|r| r.row.matched_case.as_deref() != Some("main2.3.c")),
        "main2.3.c matched somewhere",
    )?;
    Ok(format!(
        "{} instances, {} ledgered, 0 unledgered; main2.3.c never matched",
        s.checked,
        s.expected.len()
    ))
}

fn criterion7() -> Outcome {
    let mut checked = 0;
    for q in primes_in(2, 50) {
        for p in primes_in(3, 100) {
            if p == q {
                continue;
            }
            let base = BaseRing::rational(p).unwrap();
            let g = AbelianGroup::cyclic(q).unwrap();
            let o = brute_order(p, q);
            for v in [
                classify_theorem(&base, &g).unwrap().verdict,
                classify_first_principles(&base, &g).unwrap().verdict,
            ] {
                checked += 1;
                ensure(v.is_clean() == (o == q - 1), format!("q={q} p={p}: clean"))?;
                let half = 2 * o == q - 1;
                ensure(
                    (v == CleannessClass::WeaklyCleanNotClean) == half,
                    format!("q={q} p={p}: weakly"),
                )?;
                ensure(
                    (v.is_feebly_clean() && !v.is_clean()) == half,
                    format!("q={q} p={p}: feebly"),
                )?;
            }
        }
    }
    Ok(format!("{checked} classifications"))
}

fn criterion8() -> Outcome {
    ensure(brute_order(59, 25) == 10, "ord_25 59 != 10")?;
    let base = BaseRing::rational(59).unwrap();
    for (g, want) in [
        ("25", CleannessClass::FeeblyCleanNotWeaklyClean),
        ("5", CleannessClass::WeaklyCleanNotClean),
        ("5,5", CleannessClass::FeeblyCleanNotWeaklyClean),
    ] {
        let g: AbelianGroup = g.parse().unwrap();
        let th = classify_theorem(&base, &g).unwrap().verdict;
        let fp = classify_first_principles(&base, &g).unwrap().verdict;
        ensure(th == want && fp == want, format!("{g}: theorem {th}, first principles {fp}"))?;
    }
    Ok("p = 59: C25 feebly, C5 weakly, C5+C5 feebly".into())
}

fn criterion9() -> Outcome {
    let mut checked = 0;
    for p in primes_in(3, 100) {
        for g in rational_groups() {
            if g.exponent() % p == 0 {
                continue;
            }
            let r = classify_theorem(&BaseRing::rational(p).unwrap(), &g).unwrap().verdict;
            for m in [1, 2] {
                checked += 1;
                let c = classify_theorem(&BaseRing::cyclotomic(m, p).unwrap(), &g).unwrap().verdict;
                ensure(c == r, format!("m={m} p={p} G={g}: {c} vs {r}"))?;
            }
        }
    }
    Ok(format!("{checked} comparisons"))
}

fn bin(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cleanring"))
        .args(args)
        .env_remove("CLEANRING_LEDGER")
        .output()
        .expect("run cleanring");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn criterion10() -> Outcome {
    // Row count against an independent admissibility count.
    let (d_lo, d_hi, p_hi, n_hi) = (-10i64, 10i64, 30u64, 24u64);
    let squarefree = |d: i64| {
        let a = d.unsigned_abs();
        d != 0 && d != 1 && (2..=a).all(|k| !a.is_multiple_of(k * k))
    };
    let mut expected = 0;
    for _ in (d_lo..=d_hi).filter(|&d| squarefree(d)) {
        for p in primes_in(3, p_hi) {
            for n in 1..=n_hi {
                if n % p != 0 {
                    expected += if n > 1 { 2 } else { 1 };
                }
            }
        }
    }
    let (code, csv) = bin(&[
        "survey", "--base", "quadratic", "--d", "-10..10", "--p", "3..30", "--n", "1..24",
        "--shape", "cyclic-and-square", "--format", "csv",
    ]);
    ensure(code == 0, format!("survey exit {code}"))?;
    let rows: Vec<SurveyRow> = rows_from_csv(&csv).map_err(|e| e.to_string())?;
    ensure(rows.len() == expected, format!("{} rows, expected {expected}", rows.len()))?;
    let (_, json) = bin(&[
        "survey", "--base", "quadratic", "--d", "-10..10", "--p", "3..30", "--n", "1..24",
        "--shape", "cyclic-and-square", "--format", "json",
    ]);
    let from_json = rows_from_json(&json).map_err(|e| e.to_string())?;
    ensure(from_json == rows, "JSON and CSV rows differ")?;
    ensure(rows_to_csv(&rows).unwrap() == csv, "CSV round trip")?;
    ensure(rows_from_json(&rows_to_json(&rows).unwrap()).unwrap() == rows, "JSON round trip")?;

    let (c1, out1) = bin(&["classify", "--base", "rational", "--p", "3", "--group", "11"]);
    ensure(c1 == 0 && out1.contains("WeaklyCleanNotClean") && out1.contains("thm1.3b"), "example 1")?;
    let (c2, out2) = bin(&[
        "classify", "--base", "quadratic", "--d", "5", "--p", "19", "--group", "5", "--method",
        "both",
    ]);
    ensure(c2 == 0 && out2.contains("agreement agree") && out2.contains("Clean"), "example 2")?;
    let (c3, _) = bin(&["classify", "--base", "rational", "--p", "3", "--group", "6"]);
    ensure(c3 == 2, format!("example 3 exit {c3}"))?;
    Ok(format!("{} survey rows; round trips; exits 0, 0, 2", rows.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("oracle sweep", criterion1),
        ("ratio case lists", criterion2),
        ("refined case lists", criterion3),
        ("rational base vs first principles", criterion4),
        ("cyclotomic base vs first principles", criterion5),
        ("quadratic base vs first principles", criterion6),
        ("prime-order groups", criterion7),
        ("p = 59, q = 5 instance", criterion8),
        ("cyclotomic m = 1, 2 reduction", criterion9),
        ("command line contract", criterion10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
