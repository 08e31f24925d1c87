//! Survey rational bases and print CSV.

use cleanring::classifier::DiscrepancyLedger;
use cleanring::survey::{emit, run_survey, Format, GroupShape, SurveyRange};
use cleanring::BaseKind;

fn main() -> cleanring::Result<()> {
    let range = SurveyRange::new(vec![BaseKind::Rational], 3, 11, GroupShape::Cyclic.groups(1, 12)?)?;
    let rows: Vec<_> = run_survey(&range, &DiscrepancyLedger::bundled()?)?
        .into_iter()
        .map(|r| r.row)
        .collect();
    print!("{}", emit(&rows, Format::Csv)?);
    Ok(())
}
