//! Range surveys: classify every admissible `(base, p, G)` triple in a range.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::abelian::AbelianGroup;
use crate::base_rings::{discriminant, BaseKind, BaseRing};
use crate::classifier::{
    agreement, check_admissible, classify_first_principles, classify_theorem_with, Agreement,
    AgreementRecord, CleannessClass, DiscrepancyLedger, Reading,
};
use crate::error::{Error, Result};
use crate::ntheory::{divisors, primes_in};

/// Groups attached to each exponent `n` of a range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupShape {
    /// `C_n`.
    Cyclic,
    /// `C_n + C_n`.
    Square,
    /// `C_n` and `C_n + C_n`.
    CyclicAndSquare,
    /// `C_d + C_n` for every `d | n` (`d = 1` gives `C_n`).
    DivisorSums,
}

impl GroupShape {
    pub fn groups(self, n_min: u64, n_max: u64) -> Result<Vec<AbelianGroup>> {
        let mut out = Vec::new();
        for n in n_min.max(1)..=n_max {
            match self {
                GroupShape::Cyclic => out.push(AbelianGroup::cyclic(n)?),
                GroupShape::Square => out.push(AbelianGroup::normalize(&[n, n])?),
                GroupShape::CyclicAndSquare => {
                    out.push(AbelianGroup::cyclic(n)?);
                    if n > 1 {
                        out.push(AbelianGroup::normalize(&[n, n])?);
                    }
                }
                GroupShape::DivisorSums => {
                    for d in divisors(n)? {
                        let g = AbelianGroup::normalize(&[d, n])?;
                        if !out.contains(&g) {
                            out.push(g);
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Every squarefree `d` with `0 < |d| <= max`, `d != 1`, ascending.
pub fn quadratic_params(max: u64) -> Vec<i64> {
    let max = max as i64;
    (-max..=max).filter(|&d| discriminant(d).is_ok()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyRange {
    pub bases: Vec<BaseKind>,
    pub p_min: u64,
    pub p_max: u64,
    pub groups: Vec<AbelianGroup>,
    pub reading: Reading,
}

impl SurveyRange {
    pub fn new(bases: Vec<BaseKind>, p_min: u64, p_max: u64, groups: Vec<AbelianGroup>) -> Result<Self> {
        if bases.is_empty() {
            return Err(Error::InvalidArgument("no base rings in range".into()));
        }
        if groups.is_empty() {
            return Err(Error::InvalidArgument("no groups in range".into()));
        }
        if p_min > p_max {
            return Err(Error::InvalidArgument(format!("empty prime range {p_min}..={p_max}")));
        }
        Ok(Self {
            bases,
            p_min,
            p_max,
            groups,
            reading: Reading::Corrected,
        })
    }

    pub fn with_reading(mut self, reading: Reading) -> Self {
        self.reading = reading;
        self
    }

    /// Admissible triples in row order: by base parameter, then `p`, then group.
    pub fn instances(&self) -> Vec<(BaseRing, AbelianGroup)> {
        let mut bases = self.bases.clone();
        bases.sort_by_key(|b| (b.name(), b.param()));
        bases.dedup();
        let mut groups = self.groups.clone();
        groups.sort();
        groups.dedup();
        let primes = primes_in(self.p_min, self.p_max);
        let mut out = Vec::new();
        for kind in bases {
            for &p in &primes {
                let Ok(base) = BaseRing::new(kind, p) else {
                    continue;
                };
                for g in &groups {
                    if check_admissible(&base, g).is_ok() {
                        out.push((base, g.clone()));
                    }
                }
            }
        }
        out
    }
}

/// One output row of a survey.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub base_kind: String,
    pub base_param: Option<i64>,
    pub p: u64,
    #[serde(with = "group_text")]
    pub group: AbelianGroup,
    /// First-principles verdict.
    pub verdict: CleannessClass,
    /// Case matched by the closed-form classifier.
    pub matched_case: Option<String>,
    pub agree: Agreement,
}

mod group_text {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use crate::abelian::AbelianGroup;

    pub fn serialize<S: Serializer>(g: &AbelianGroup, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(g)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<AbelianGroup, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(D::Error::custom)
    }
}

/// A row together with the full comparison it summarises.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyRecord {
    pub base: BaseRing,
    pub row: SurveyRow,
    pub comparison: AgreementRecord,
}

pub fn survey_instance(
    base: &BaseRing,
    group: &AbelianGroup,
    reading: Reading,
    ledger: &DiscrepancyLedger,
) -> Result<SurveyRecord> {
    let fp = classify_first_principles(base, group)?;
    let th = classify_theorem_with(base, group, reading)?;
    let comparison = agreement(base, group, &th, &fp, ledger);
    Ok(SurveyRecord {
        base: *base,
        row: SurveyRow {
            base_kind: base.kind.name().to_string(),
            base_param: base.kind.param(),
            p: base.p,
            group: group.clone(),
            verdict: fp.verdict,
            matched_case: th.matched_case,
            agree: comparison.status,
        },
        comparison,
    })
}

/// Classifies every admissible triple on the current rayon pool; the output
/// order is the row order of [`SurveyRange::instances`].
pub fn run_survey(range: &SurveyRange, ledger: &DiscrepancyLedger) -> Result<Vec<SurveyRecord>> {
    range
        .instances()
        .par_iter()
        .map(|(base, g)| survey_instance(base, g, range.reading, ledger))
        .collect()
}

/// Runs `f` on a dedicated pool of `jobs` threads (`0` means rayon's default).
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

pub fn rows_to_csv(rows: &[SurveyRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).map_err(|e| Error::Parse(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

pub fn rows_from_csv(text: &str) -> Result<Vec<SurveyRow>> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .map(|r| r.map_err(|e| Error::Parse(e.to_string())))
        .collect()
}

pub fn rows_to_json(rows: &[SurveyRow]) -> Result<String> {
    serde_json::to_string_pretty(rows).map_err(|e| Error::Parse(e.to_string()))
}

pub fn rows_from_json(text: &str) -> Result<Vec<SurveyRow>> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn rows_to_table(rows: &[SurveyRow]) -> String {
    let header = ["base", "param", "p", "group", "verdict", "case", "agree"];
    let cells: Vec<[String; 7]> = rows
        .iter()
        .map(|r| {
            [
                r.base_kind.clone(),
                r.base_param.map(|x| x.to_string()).unwrap_or_else(|| "-".into()),
                r.p.to_string(),
                r.group.to_string(),
                r.verdict.to_string(),
                r.matched_case.clone().unwrap_or_else(|| "-".into()),
                r.agree.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let mut out = String::new();
    let line = |out: &mut String, row: &[&str]| {
        let parts: Vec<String> = row
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        let _ = writeln!(out, "{}", parts.join("  ").trim_end());
    };
    line(&mut out, &header);
    for row in &cells {
        line(&mut out, &row.iter().map(String::as_str).collect::<Vec<_>>());
    }
    out
}

pub fn emit(rows: &[SurveyRow], format: Format) -> Result<String> {
    match format {
        Format::Table => Ok(rows_to_table(rows)),
        Format::Json => rows_to_json(rows).map(|s| s + "\n"),
        Format::Csv => rows_to_csv(rows),
    }
}
