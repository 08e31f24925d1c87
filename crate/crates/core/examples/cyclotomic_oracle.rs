//! Factor Phi_d mod p by distinct-degree factorization and compare the
//! observed degrees with ord_d p.

use cleanring::ffpoly::{cyclotomic_polynomial, ddf_degrees, verify_cyclotomic_factorization};

fn main() -> cleanring::Result<()> {
    let phi = cyclotomic_polynomial(15)?;
    println!("Phi_15 = {phi}");
    for p in [7, 11, 29, 31, 61] {
        let f = phi.reduce_mod(p);
        println!("  mod {p:>2}: (degree, count) = {:?}", ddf_degrees(&f)?);
    }

    let mut failed = 0;
    for d in 1..=40 {
        for p in [3, 5, 7, 11, 13] {
            if d % p != 0 && !verify_cyclotomic_factorization(d, p)?.pass {
                failed += 1;
            }
        }
    }
    println!("mismatches for d <= 40: {failed}");
    Ok(())
}
