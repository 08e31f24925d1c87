//! Exhaustive verification sweeps.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::base_rings::{BaseKind, BaseRing};
use crate::classifier::{
    prop26_cases, prop26_direct, prop32_direct, prop32_item, Agreement, DiscrepancyLedger, Reading,
};
use crate::error::Result;
use crate::ffpoly::verify_cyclotomic_factorization;
use crate::ntheory::primes_in;
use crate::survey::{run_survey, SurveyRange, SurveyRecord};

/// One failed (or ledgered) check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub input: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<Finding>,
    /// Disagreements covered by the ledger; they do not fail the sweep.
    pub expected: Vec<Finding>,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} checked, {} failed, {} ledgered",
            self.name,
            self.checked,
            self.failures.len(),
            self.expected.len()
        )?;
        for x in &self.failures {
            writeln!(f, "  FAIL {}: {}", x.input, x.detail)?;
        }
        for x in &self.expected {
            writeln!(f, "  ledgered {}: {}", x.input, x.detail)?;
        }
        Ok(())
    }
}

fn odd_primes(p_max: u64) -> Vec<u64> {
    primes_in(3, p_max)
}

/// `Phi_d mod p` factors into `phi(d)/ord_d p` pieces of degree `ord_d p`.
pub fn oracle_sweep(d_max: u64, p_max: u64) -> Result<SweepSummary> {
    let inputs: Vec<(u64, u64)> = (1..=d_max)
        .flat_map(|d| odd_primes(p_max).into_iter().map(move |p| (d, p)))
        .filter(|&(d, p)| d % p != 0)
        .collect();
    let records = inputs
        .par_iter()
        .map(|&(d, p)| verify_cyclotomic_factorization(d, p))
        .collect::<Result<Vec<_>>>()?;
    let failures = records
        .iter()
        .filter(|r| !r.pass)
        .map(|r| Finding {
            input: format!("d={} p={}", r.d, r.p),
            detail: format!(
                "expected [({}, {})], observed {:?}",
                r.expected_degree, r.expected_count, r.observed
            ),
        })
        .collect();
    Ok(SweepSummary {
        name: "oracle".into(),
        checked: records.len(),
        failures,
        expected: Vec::new(),
    })
}

fn coprime_pairs(n_max: u64, p_max: u64) -> Vec<(u64, u64)> {
    (1..=n_max)
        .flat_map(|n| odd_primes(p_max).into_iter().map(move |p| (n, p)))
        .filter(|&(n, p)| n % p != 0)
        .collect()
}

/// Case lists against `phi(n) = k ord_n p` for `k` in `{1, 2, 4}`.
pub fn prop26_sweep(n_max: u64, p_max: u64, reading: Reading) -> Result<SweepSummary> {
    let pairs = coprime_pairs(n_max, p_max);
    let per_pair = pairs
        .par_iter()
        .map(|&(n, p)| -> Result<Vec<Finding>> {
            let direct = prop26_direct(n, p)?;
            let mut out = Vec::new();
            for k in [1, 2, 4] {
                let case = prop26_cases(n, p, k, reading)?;
                if case.is_some() != (direct == Some(k)) {
                    out.push(Finding {
                        input: format!("n={n} p={p} k={k}"),
                        detail: format!("direct ratio {direct:?}, case list {case:?}"),
                    });
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepSummary {
        name: "prop26".into(),
        checked: pairs.len() * 3,
        failures: per_pair.into_iter().flatten().collect(),
        expected: Vec::new(),
    })
}

/// Items 1 to 5 against their divisor-quantified definitions.
pub fn prop32_sweep(n_max: u64, p_max: u64, reading: Reading) -> Result<SweepSummary> {
    let pairs = coprime_pairs(n_max, p_max);
    let per_pair = pairs
        .par_iter()
        .map(|&(n, p)| -> Result<Vec<Finding>> {
            let mut out = Vec::new();
            for item in 1..=5 {
                let direct = prop32_direct(n, p, item)?;
                let case = prop32_item(n, p, item, reading)?;
                if case.is_some() != direct {
                    out.push(Finding {
                        input: format!("n={n} p={p} item={item}"),
                        detail: format!("direct {direct}, case list {case:?}"),
                    });
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepSummary {
        name: "prop32".into(),
        checked: pairs.len() * 5,
        failures: per_pair.into_iter().flatten().collect(),
        expected: Vec::new(),
    })
}

fn describe(rec: &SurveyRecord) -> Finding {
    let c = &rec.comparison;
    Finding {
        input: format!(
            "{} p={} G={}",
            rec.base.kind,
            rec.base.p,
            rec.row.group
        ),
        detail: format!(
            "theorem {} ({}), first principles {}{}",
            c.theorem_verdict,
            c.matched_case.as_deref().unwrap_or("-"),
            c.first_principles_verdict,
            c.ledger_note
                .as_deref()
                .map(|n| format!("; ledger: {n}"))
                .unwrap_or_default()
        ),
    }
}

/// Closed-form classifier against first principles over a survey range.
pub fn theorem_sweep(range: &SurveyRange, ledger: &DiscrepancyLedger) -> Result<SweepSummary> {
    let records = run_survey(range, ledger)?;
    let mut failures = Vec::new();
    let mut expected = Vec::new();
    for rec in &records {
        match rec.comparison.status {
            Agreement::Agree => {}
            Agreement::Expected => expected.push(describe(rec)),
            Agreement::Unexpected => failures.push(describe(rec)),
        }
    }
    let name = match range.bases.first() {
        Some(BaseKind::Rational) | None => "theorems/rational",
        Some(BaseKind::Cyclotomic { .. }) => "theorems/cyclotomic",
        Some(BaseKind::Quadratic { .. }) => "theorems/quadratic",
    };
    Ok(SweepSummary {
        name: name.into(),
        checked: records.len(),
        failures,
        expected,
    })
}

/// Cyclotomic bases with `m = 1, 2` against the rational base.
pub fn reduction_sweep(n_max: u64, p_max: u64, groups: &[crate::AbelianGroup]) -> Result<SweepSummary> {
    let inputs: Vec<(u64, &crate::AbelianGroup)> = odd_primes(p_max)
        .into_iter()
        .flat_map(|p| groups.iter().map(move |g| (p, g)))
        .filter(|(p, g)| g.exponent() <= n_max && g.exponent() % p != 0)
        .collect();
    let per = inputs
        .par_iter()
        .map(|&(p, g)| -> Result<Vec<Finding>> {
            let rational = crate::classify_theorem(&BaseRing::rational(p)?, g)?;
            let mut out = Vec::new();
            for m in [1, 2] {
                let cyc = crate::classify_theorem(&BaseRing::cyclotomic(m, p)?, g)?;
                if cyc.verdict != rational.verdict {
                    out.push(Finding {
                        input: format!("m={m} p={p} G={g}"),
                        detail: format!("cyclotomic {} vs rational {}", cyc.verdict, rational.verdict),
                    });
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepSummary {
        name: "reduction".into(),
        checked: inputs.len() * 2,
        failures: per.into_iter().flatten().collect(),
        expected: Vec::new(),
    })
}
