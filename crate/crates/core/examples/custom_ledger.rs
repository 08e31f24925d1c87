//! Load a discrepancy ledger from TOML and look up an entry.

use cleanring::classifier::DiscrepancyLedger;
use cleanring::{cross_validate, AbelianGroup, BaseRing};

const LEDGER: &str = r#"
version = 1

[[entry]]
base = "quadratic"
case = "main2.2.*"
param = -1
exp = 4
p_mod = [4, 1]
theorem = "FeeblyCleanNotWeaklyClean"
first_principles = "Clean"
note = "Gaussian integers at p = 1 (mod 4)"
"#;

fn main() -> cleanring::Result<()> {
    let ledger = DiscrepancyLedger::from_toml_str(LEDGER)?;
    let base = BaseRing::quadratic(-1, 5)?;
    let group = AbelianGroup::cyclic(4)?;
    let rec = cross_validate(&base, &group, &ledger)?;
    println!("{}: {:?}", rec.status, rec.ledger_note);

    let rec = cross_validate(&base, &group, &DiscrepancyLedger::empty())?;
    println!("with an empty ledger: {}", rec.status);
    Ok(())
}
