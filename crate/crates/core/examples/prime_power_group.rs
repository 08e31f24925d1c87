//! Groups of exponent a prime power q^r over Z_(p): the verdict depends on
//! the order of p modulo q and q^2.

use cleanring::{classify_first_principles, AbelianGroup, BaseRing};

fn main() -> cleanring::Result<()> {
    let p = 59;
    for g in [[1u64, 5], [5, 5], [1, 25], [5, 25]] {
        let group = AbelianGroup::normalize(&g)?;
        let r = classify_first_principles(&BaseRing::rational(p)?, &group)?;
        println!("Z_({p})[{group}]: {}", r.verdict);
    }
    Ok(())
}
