//! Divisor-quantified items 1 to 5 for a fixed prime, with matched cases.

use cleanring::classifier::{prop32_direct, prop32_item, Reading};

fn main() -> cleanring::Result<()> {
    let p = 13;
    for n in [4u64, 8, 12, 16, 24, 40, 48, 84] {
        for item in 1..=5 {
            let direct = prop32_direct(n, p, item)?;
            let case = prop32_item(n, p, item, Reading::Corrected)?;
            if direct || case.is_some() {
                println!("n={n:>3} p={p} item {item}: direct={direct} case={case:?}");
            }
        }
    }
    Ok(())
}
