//! Classify a single group ring with both methods.
//!
//!     cargo run --example classify_one

use cleanring::{classify_first_principles, classify_theorem, AbelianGroup, BaseRing};

fn main() -> cleanring::Result<()> {
    let base = BaseRing::quadratic(5, 19)?;
    let group = AbelianGroup::cyclic(5)?;

    let th = classify_theorem(&base, &group)?;
    let fp = classify_first_principles(&base, &group)?;
    print!("{}", th.to_text());
    print!("{}", fp.to_text());
    assert_eq!(th.verdict, fp.verdict);
    Ok(())
}
