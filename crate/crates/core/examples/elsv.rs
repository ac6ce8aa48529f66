//! Simple Hurwitz numbers against the Hodge-integral side of ELSV.

use hurwitz_gw::gwh::elsv_check;
use hurwitz_gw::partitions::enumerate_partitions;
use hurwitz_gw::qseries::rational_to_string;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for d in 1..=4 {
        for mu in enumerate_partitions(d) {
            for g in 0..=2 {
                match elsv_check(&mu, g) {
                    Ok(c) => println!(
                        "μ={mu:<10} g={g} m={:>2} lhs={:>12} rhs={:>12} {}",
                        c.m,
                        rational_to_string(&c.lhs),
                        rational_to_string(&c.rhs),
                        if c.equal { "ok" } else { "MISMATCH" }
                    ),
                    Err(e) => println!("μ={mu:<10} g={g} skipped: {e}"),
                }
            }
        }
    }
    Ok(())
}
