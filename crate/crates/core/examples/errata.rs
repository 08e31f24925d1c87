//! List the corrections applied by the default reading, and show how the
//! literal reading fails on each witness sweep.

use cleanring::classifier::{Reading, ERRATA};
use cleanring::verify::{prop26_sweep, prop32_sweep};

fn main() -> cleanring::Result<()> {
    for e in ERRATA {
        println!("{} {}\n  fix: {}\n  witness: {}", e.list, e.case, e.fix, e.witness);
    }
    for reading in [Reading::Literal, Reading::Corrected] {
        let a = prop26_sweep(120, 60, reading)?;
        let b = prop32_sweep(120, 60, reading)?;
        println!(
            "{reading:?}: ratio lists {} failures, refined lists {} failures",
            a.failures.len(),
            b.failures.len()
        );
    }
    Ok(())
}
