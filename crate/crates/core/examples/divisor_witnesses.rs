//! Print the per-divisor counts behind a first-principles verdict.

use cleanring::classifier::{divisor_witnesses, verdict_from_witnesses};
use cleanring::{AbelianGroup, BaseRing};

fn main() -> cleanring::Result<()> {
    let base = BaseRing::rational(7)?;
    let group = AbelianGroup::normalize(&[3, 12])?;
    let ws = divisor_witnesses(&base, &group)?;
    println!("Z_(7)[{group}]");
    println!("{:>4} {:>6} {:>6} {:>4} {:>4} {:>4} {:>6}", "d", "deg", "ord", "t", "mu", "nu", "lambda");
    for w in &ws {
        println!(
            "{:>4} {:>6} {:>6} {:>4} {:>4} {:>4} {:>6}",
            w.d, w.deg_phi, w.ord_norm, w.max_ideals, w.mu, w.nu, w.lambda
        );
    }
    println!("verdict: {}", verdict_from_witnesses(&ws));
    Ok(())
}
