//! Which case of the ratio lists explains phi(n)/ord_n p for small n.

use cleanring::classifier::{prop26_cases, prop26_direct, Reading};

fn main() -> cleanring::Result<()> {
    let p = 5;
    for n in 1..=40u64 {
        if n % p == 0 {
            continue;
        }
        let ratio = prop26_direct(n, p)?;
        let hits: Vec<String> = [1, 2, 4]
            .iter()
            .filter_map(|&k| {
                prop26_cases(n, p, k, Reading::Corrected)
                    .ok()
                    .flatten()
                    .map(|c| format!("k={k}: {c}"))
            })
            .collect();
        println!("n={n:>3} ratio={:<8} {}", format!("{ratio:?}"), hits.join(", "));
    }
    Ok(())
}
