//! Numerical I-function coefficients, with and without a marking.

use hurwitz_gw::gwh::{i_function_connected_empty, i_function_empty, i_function_numeric};
use hurwitz_gw::partitions::enumerate_partitions;
use hurwitz_gw::qseries::{int, rational_to_string};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("without markings (only nonzero values with z-degree >= 0):");
    for d in 1..=4u32 {
        for eta in enumerate_partitions(d) {
            for g in (1 - d as i64)..=1 {
                let i = i_function_empty(g, &eta)?;
                if i.z_degree >= 0 && i.value != int(0) {
                    println!(
                        "  g={g:>2} η={eta:<10} {} z^{}",
                        rational_to_string(&i.value),
                        i.z_degree
                    );
                }
            }
        }
    }

    println!("\nconnected, genus 0, two parts:");
    for eta in ["(1,1)", "(2,1)", "(2,2)", "(3,1)"] {
        let i = i_function_connected_empty(0, &eta.parse()?)?;
        println!(
            "  η={eta:<6} {} z^{}",
            rational_to_string(&i.value),
            i.z_degree
        );
    }

    println!("\none marking τ_k:");
    for (g, eta, k) in [
        (0, "(1)", 0),
        (0, "(1)", 2),
        (-1, "(1,1)", 1),
        (0, "(2)", 3),
    ] {
        let i = i_function_numeric(g, &eta.parse()?, k)?;
        println!(
            "  g={g:>2} η={eta:<6} k={k} {} z^{}",
            rational_to_string(&i.value),
            i.z_degree
        );
    }
    Ok(())
}
