//! The `cleanring` command line: `classify`, `survey` and `verify`.
//!
//! Exit codes: 0 success, 1 a verification sweep failed, 2 invalid input
//! (including precondition violations and empty ranges), 3 an unexpected
//! disagreement under `classify --strict`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::abelian::AbelianGroup;
use crate::base_rings::{BaseKind, BaseRing};
use crate::classifier::{
    classify_first_principles, classify_theorem_with, Agreement, AgreementRecord,
    ClassificationReport, DiscrepancyLedger, Reading,
};
use crate::error::{Error, Result};
use crate::survey::{
    emit, quadratic_params, run_survey, survey_instance, with_jobs, Format, GroupShape,
    SurveyRange, SurveyRow,
};
use crate::verify::{self, SweepSummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_DISAGREE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "cleanring", version, about = "Clean, weakly clean and feebly clean group rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one group ring O_p[G].
    Classify(ClassifyArgs),
    /// Classify every admissible (base, p, G) in a range.
    Survey(SurveyArgs),
    /// Run an exhaustive verification sweep.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BaseArg {
    Rational,
    Cyclotomic,
    Quadratic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Theorem,
    FirstPrinciples,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Table,
    Json,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Table => Format::Table,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReadingArg {
    Literal,
    Corrected,
}

impl From<ReadingArg> for Reading {
    fn from(r: ReadingArg) -> Self {
        match r {
            ReadingArg::Literal => Reading::Literal,
            ReadingArg::Corrected => Reading::Corrected,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ShapeArg {
    Cyclic,
    Square,
    CyclicAndSquare,
    DivisorSums,
}

impl From<ShapeArg> for GroupShape {
    fn from(s: ShapeArg) -> Self {
        match s {
            ShapeArg::Cyclic => GroupShape::Cyclic,
            ShapeArg::Square => GroupShape::Square,
            ShapeArg::CyclicAndSquare => GroupShape::CyclicAndSquare,
            ShapeArg::DivisorSums => GroupShape::DivisorSums,
        }
    }
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long, value_enum)]
    pub base: BaseArg,
    /// Cyclotomic parameter m.
    #[arg(long)]
    pub m: Option<u64>,
    /// Quadratic parameter d (squarefree, not 0 or 1).
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<i64>,
    #[arg(long)]
    pub p: u64,
    /// Cyclic factor orders, e.g. `2,12` for C2 + C12.
    #[arg(long)]
    pub group: String,
    #[arg(long, value_enum, default_value = "theorem")]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value = "table")]
    pub format: FormatArg,
    #[arg(long, value_enum, default_value = "corrected")]
    pub reading: ReadingArg,
    /// Exit with status 3 on a disagreement not covered by the ledger.
    #[arg(long)]
    pub strict: bool,
    /// Discrepancy ledger (default: $CLEANRING_LEDGER, then the bundled copy).
    #[arg(long)]
    pub ledger: Option<PathBuf>,
}

/// An inclusive range written `A..B`, or a single value `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub lo: i64,
    pub hi: i64,
}

impl std::str::FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let num = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
            None => (num(s)?, num(s)?),
        };
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok(Span { lo, hi })
    }
}

impl Span {
    fn unsigned(self, what: &str) -> Result<(u64, u64)> {
        if self.lo < 1 {
            return Err(Error::InvalidArgument(format!("{what} must be positive")));
        }
        Ok((self.lo as u64, self.hi as u64))
    }
}

#[derive(Debug, Args)]
pub struct SurveyArgs {
    #[arg(long, value_enum)]
    pub base: BaseArg,
    /// Cyclotomic parameters, e.g. `1..16`.
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<Span>,
    /// Quadratic parameters, e.g. `-30..30`; non-squarefree values are skipped.
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<Span>,
    /// Primes, e.g. `3..60`.
    #[arg(long)]
    pub p: Span,
    /// Exponents, e.g. `1..60`.
    #[arg(long)]
    pub n: Option<Span>,
    #[arg(long, value_enum, default_value = "cyclic")]
    pub shape: ShapeArg,
    /// Explicit groups; repeat the flag. Overrides `--n`.
    #[arg(long)]
    pub group: Vec<String>,
    #[arg(long, value_enum, default_value = "table")]
    pub format: FormatArg,
    #[arg(long, value_enum, default_value = "corrected")]
    pub reading: ReadingArg,
    /// Worker threads (0: one per core).
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long)]
    pub ledger: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(subcommand)]
    pub which: VerifyWhich,
    /// Worker threads (0: one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Print the summary as JSON.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum VerifyWhich {
    /// Factor Phi_d mod p and compare with ord_d p.
    Oracle {
        #[arg(long, default_value_t = 60)]
        d_max: u64,
        #[arg(long, default_value_t = 50)]
        p_max: u64,
    },
    /// Ratio case lists (k = 1, 2, 4) against phi(n) = k ord_n p.
    Prop26 {
        #[arg(long, default_value_t = 300)]
        n_max: u64,
        #[arg(long, default_value_t = 100)]
        p_max: u64,
        #[arg(long, value_enum, default_value = "corrected")]
        reading: ReadingArg,
    },
    /// Refined case lists (items 1 to 5) against their divisor definitions.
    Prop32 {
        #[arg(long, default_value_t = 300)]
        n_max: u64,
        #[arg(long, default_value_t = 100)]
        p_max: u64,
        #[arg(long, value_enum, default_value = "corrected")]
        reading: ReadingArg,
    },
    /// Closed-form classifier against first principles.
    Theorems {
        #[arg(long, value_enum)]
        base: BaseArg,
        #[arg(long)]
        m_max: Option<u64>,
        #[arg(long)]
        d_max: Option<u64>,
        #[arg(long, alias = "exp-max")]
        n_max: Option<u64>,
        #[arg(long)]
        p_max: Option<u64>,
        #[arg(long, value_enum)]
        shape: Option<ShapeArg>,
        #[arg(long, value_enum, default_value = "corrected")]
        reading: ReadingArg,
        #[arg(long)]
        ledger: Option<PathBuf>,
    },
    /// Cyclotomic bases with m = 1, 2 against the rational base.
    Reduction {
        #[arg(long, default_value_t = 200)]
        n_max: u64,
        #[arg(long, default_value_t = 100)]
        p_max: u64,
    },
}

/// Parses `args` (program name first) and runs the command, writing to `out`
/// and `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Classify(a) => cmd_classify(&a, out),
        Command::Survey(a) => cmd_survey(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("write failed: {e}"))
}

fn base_kind(base: BaseArg, m: Option<u64>, d: Option<i64>) -> Result<BaseKind> {
    match base {
        BaseArg::Rational => Ok(BaseKind::Rational),
        BaseArg::Cyclotomic => m
            .map(|m| BaseKind::Cyclotomic { m })
            .ok_or_else(|| Error::InvalidArgument("--m is required for a cyclotomic base".into())),
        BaseArg::Quadratic => d
            .map(|d| BaseKind::Quadratic { d })
            .ok_or_else(|| Error::InvalidArgument("--d is required for a quadratic base".into())),
    }
}

#[derive(Serialize)]
struct BothReport<'a> {
    theorem: &'a ClassificationReport,
    first_principles: &'a ClassificationReport,
    agreement: &'a AgreementRecord,
}

fn agreement_text(a: &AgreementRecord) -> String {
    let mut s = format!("agreement {}", a.status);
    if a.status != Agreement::Agree {
        s.push_str(&format!(
            " (theorem {}, first principles {})",
            a.theorem_verdict, a.first_principles_verdict
        ));
    }
    s.push('\n');
    if let Some(note) = &a.ledger_note {
        s.push_str(&format!("ledger   {note}\n"));
    }
    s
}

pub fn cmd_classify(a: &ClassifyArgs, out: &mut dyn Write) -> Result<i32> {
    let kind = base_kind(a.base, a.m, a.d)?;
    let base = BaseRing::new(kind, a.p)?;
    let group: AbelianGroup = a.group.parse()?;
    let reading = Reading::from(a.reading);
    let ledger = DiscrepancyLedger::load(a.ledger.as_deref())?;

    let record = survey_instance(&base, &group, reading, &ledger)?;
    let th = classify_theorem_with(&base, &group, reading)?;
    let fp = classify_first_principles(&base, &group)?;
    let cmp = &record.comparison;

    let text = match (a.format, a.method) {
        (FormatArg::Table, MethodArg::Theorem) => th.to_text(),
        (FormatArg::Table, MethodArg::FirstPrinciples) => fp.to_text(),
        (FormatArg::Table, MethodArg::Both) => {
            format!("{}\n{}\n{}", th.to_text(), fp.to_text(), agreement_text(cmp))
        }
        (FormatArg::Json, MethodArg::Theorem) => json(&th)?,
        (FormatArg::Json, MethodArg::FirstPrinciples) => json(&fp)?,
        (FormatArg::Json, MethodArg::Both) => json(&BothReport {
            theorem: &th,
            first_principles: &fp,
            agreement: cmp,
        })?,
        (FormatArg::Csv, method) => {
            let mut row: SurveyRow = record.row.clone();
            if method == MethodArg::Theorem {
                row.verdict = th.verdict;
            }
            emit(&[row], Format::Csv)?
        }
    };
    out.write_all(text.as_bytes()).map_err(io)?;
    if a.strict && cmp.status == Agreement::Unexpected {
        return Ok(EXIT_DISAGREE);
    }
    Ok(EXIT_OK)
}

fn json<T: Serialize>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v)
        .map(|s| s + "\n")
        .map_err(|e| Error::Parse(e.to_string()))
}

fn survey_bases(a: &SurveyArgs) -> Result<Vec<BaseKind>> {
    Ok(match a.base {
        BaseArg::Rational => vec![BaseKind::Rational],
        BaseArg::Cyclotomic => {
            let span = a
                .m
                .ok_or_else(|| Error::InvalidArgument("--m is required for a cyclotomic base".into()))?;
            let (lo, hi) = span.unsigned("m")?;
            (lo..=hi).map(|m| BaseKind::Cyclotomic { m }).collect()
        }
        BaseArg::Quadratic => {
            let span = a
                .d
                .ok_or_else(|| Error::InvalidArgument("--d is required for a quadratic base".into()))?;
            let bound = span.lo.unsigned_abs().max(span.hi.unsigned_abs());
            quadratic_params(bound)
                .into_iter()
                .filter(|d| (span.lo..=span.hi).contains(d))
                .map(|d| BaseKind::Quadratic { d })
                .collect()
        }
    })
}

fn survey_groups(a: &SurveyArgs) -> Result<Vec<AbelianGroup>> {
    if !a.group.is_empty() {
        return a.group.iter().map(|g| g.parse()).collect();
    }
    let span = a
        .n
        .ok_or_else(|| Error::InvalidArgument("give --n or at least one --group".into()))?;
    let (lo, hi) = span.unsigned("n")?;
    GroupShape::from(a.shape).groups(lo, hi)
}

pub fn cmd_survey(a: &SurveyArgs, out: &mut dyn Write) -> Result<i32> {
    let (p_lo, p_hi) = a.p.unsigned("p")?;
    let range = SurveyRange::new(survey_bases(a)?, p_lo, p_hi, survey_groups(a)?)?
        .with_reading(a.reading.into());
    if range.instances().is_empty() {
        return Err(Error::InvalidArgument("no admissible (base, p, G) in range".into()));
    }
    let ledger = DiscrepancyLedger::load(a.ledger.as_deref())?;
    let records = with_jobs(a.jobs, || run_survey(&range, &ledger))??;
    let rows: Vec<SurveyRow> = records.into_iter().map(|r| r.row).collect();
    out.write_all(emit(&rows, a.format.into())?.as_bytes())
        .map_err(io)?;
    Ok(EXIT_OK)
}

fn theorem_range(
    base: BaseArg,
    m_max: Option<u64>,
    d_max: Option<u64>,
    n_max: Option<u64>,
    p_max: Option<u64>,
    shape: Option<ShapeArg>,
) -> Result<SurveyRange> {
    let (bases, n_def, p_def, shape_def) = match base {
        BaseArg::Rational => (vec![BaseKind::Rational], 200, 100, ShapeArg::DivisorSums),
        BaseArg::Cyclotomic => (
            (1..=m_max.unwrap_or(16)).map(|m| BaseKind::Cyclotomic { m }).collect(),
            60,
            60,
            ShapeArg::CyclicAndSquare,
        ),
        BaseArg::Quadratic => (
            quadratic_params(d_max.unwrap_or(30))
                .into_iter()
                .map(|d| BaseKind::Quadratic { d })
                .collect(),
            60,
            60,
            ShapeArg::CyclicAndSquare,
        ),
    };
    let groups = GroupShape::from(shape.unwrap_or(shape_def)).groups(1, n_max.unwrap_or(n_def))?;
    SurveyRange::new(bases, 3, p_max.unwrap_or(p_def), groups)
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let summary: SweepSummary = with_jobs(a.jobs, || -> Result<SweepSummary> {
        match &a.which {
            VerifyWhich::Oracle { d_max, p_max } => verify::oracle_sweep(*d_max, *p_max),
            VerifyWhich::Prop26 { n_max, p_max, reading } => {
                verify::prop26_sweep(*n_max, *p_max, (*reading).into())
            }
            VerifyWhich::Prop32 { n_max, p_max, reading } => {
                verify::prop32_sweep(*n_max, *p_max, (*reading).into())
            }
            VerifyWhich::Theorems {
                base,
                m_max,
                d_max,
                n_max,
                p_max,
                shape,
                reading,
                ledger,
            } => {
                let range = theorem_range(*base, *m_max, *d_max, *n_max, *p_max, *shape)?
                    .with_reading((*reading).into());
                let ledger = DiscrepancyLedger::load(ledger.as_deref())?;
                verify::theorem_sweep(&range, &ledger)
            }
            VerifyWhich::Reduction { n_max, p_max } => {
                let groups = GroupShape::DivisorSums.groups(1, *n_max)?;
                verify::reduction_sweep(*n_max, *p_max, &groups)
            }
        }
    })??;
    let text = if a.json {
        json(&summary)?
    } else {
        summary.to_string()
    };
    out.write_all(text.as_bytes()).map_err(io)?;
    Ok(if summary.passed() { EXIT_OK } else { EXIT_FAILED })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("cleanring").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn spans() {
        assert_eq!("3..60".parse::<Span>().unwrap(), Span { lo: 3, hi: 60 });
        assert_eq!("-30..=30".parse::<Span>().unwrap(), Span { lo: -30, hi: 30 });
        assert_eq!("7".parse::<Span>().unwrap(), Span { lo: 7, hi: 7 });
        assert!("9..3".parse::<Span>().is_err());
    }

    #[test]
    fn classify_exit_codes() {
        let (code, out, _) = call(&["classify", "--base", "rational", "--p", "3", "--group", "11"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("WeaklyCleanNotClean") && out.contains("thm1.3b"));
        let (code, _, err) = call(&["classify", "--base", "rational", "--p", "3", "--group", "6"]);
        assert_eq!(code, EXIT_INVALID);
        assert!(err.contains("divides"));
        let (code, _, _) = call(&["classify", "--base", "cyclotomic", "--p", "3", "--group", "4"]);
        assert_eq!(code, EXIT_INVALID);
    }

    #[test]
    fn strict_disagreement() {
        let args = [
            "classify", "--base", "quadratic", "--d", "-1", "--p", "5", "--group", "4", "--method",
            "both", "--strict",
        ];
        let (code, out, _) = call(&args);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("agreement expected"));
        let dir = std::env::temp_dir().join(format!("cleanring-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let empty = dir.join("empty.toml");
        std::fs::write(&empty, "version = 1\n").unwrap();
        let mut with_ledger: Vec<&str> = args.to_vec();
        let path = empty.to_str().unwrap();
        with_ledger.extend(["--ledger", path]);
        assert_eq!(call(&with_ledger).0, EXIT_DISAGREE);
    }

    #[test]
    fn survey_rows_and_empty_range() {
        let (code, out, _) = call(&[
            "survey", "--base", "rational", "--p", "3", "--n", "1..10", "--format", "csv",
        ]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().count(), 1 + 7);
        assert!(out.starts_with("base_kind,base_param,p,group,verdict,matched_case,agree"));
        let (code, _, _) = call(&["survey", "--base", "rational", "--p", "3", "--n", "3"]);
        assert_eq!(code, EXIT_INVALID);
    }

    #[test]
    fn verify_small() {
        let (code, out, _) = call(&["verify", "oracle", "--d-max", "12", "--p-max", "11"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("oracle:"));
        let (code, _, _) = call(&["verify", "prop26", "--n-max", "40", "--p-max", "13", "--reading", "literal"]);
        assert_eq!(code, EXIT_FAILED);
    }
}
