//! Compare the closed-form verdict with the first-principles one over a
//! quadratic base and report any disagreements with their ledger notes.

use cleanring::classifier::DiscrepancyLedger;
use cleanring::survey::{run_survey, GroupShape, SurveyRange};
use cleanring::{Agreement, BaseKind};

fn main() -> cleanring::Result<()> {
    let ledger = DiscrepancyLedger::bundled()?;
    let range = SurveyRange::new(
        vec![BaseKind::Quadratic { d: -1 }, BaseKind::Quadratic { d: 5 }],
        3,
        31,
        GroupShape::Cyclic.groups(1, 24)?,
    )?;
    let records = run_survey(&range, &ledger)?;
    let mut counts = [0usize; 3];
    for r in &records {
        let c = &r.comparison;
        match c.status {
            Agreement::Agree => counts[0] += 1,
            Agreement::Expected => {
                counts[1] += 1;
                println!(
                    "{} p={} {}: {} vs {}",
                    r.base.kind, r.base.p, r.row.group, c.theorem_verdict, c.first_principles_verdict
                );
            }
            Agreement::Unexpected => counts[2] += 1,
        }
    }
    println!("agree {} expected {} unexpected {}", counts[0], counts[1], counts[2]);
    Ok(())
}
