//! Run the verification sweeps at reduced ranges.

use cleanring::classifier::{DiscrepancyLedger, Reading};
use cleanring::survey::{GroupShape, SurveyRange};
use cleanring::verify::{oracle_sweep, prop26_sweep, reduction_sweep, theorem_sweep};
use cleanring::BaseKind;

fn main() -> cleanring::Result<()> {
    let ledger = DiscrepancyLedger::bundled()?;
    let groups = GroupShape::CyclicAndSquare.groups(1, 30)?;
    let summaries = vec![
        oracle_sweep(30, 31)?,
        prop26_sweep(100, 31, Reading::Corrected)?,
        theorem_sweep(&SurveyRange::new(vec![BaseKind::Rational], 3, 31, groups.clone())?, &ledger)?,
        reduction_sweep(30, 31, &groups)?,
    ];
    for s in &summaries {
        println!("{}: {} checked, {} failed", s.name, s.checked, s.failures.len());
    }
    Ok(())
}
