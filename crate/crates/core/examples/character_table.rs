//! Character tables of symmetric groups and central characters.

use hurwitz_gw::characters::{f2_shifted, f_eta, table};
use hurwitz_gw::Partition;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = 5;
    let t = table(d)?;
    let cols: Vec<String> = t.partitions().iter().map(|p| format!("{p:>11}")).collect();
    println!("{:>11} {}", "λ \\ μ", cols.join(" "));
    for (lambda, row) in t.partitions().iter().zip(t.matrix()) {
        let vals: Vec<String> = row.iter().map(|v| format!("{v:>11}")).collect();
        println!("{:>11} {}", lambda.to_string(), vals.join(" "));
    }

    // The central character of a transposition is the shifted sum f_2(λ).
    let transposition = Partition::transposition(d)?;
    println!();
    for lambda in t.partitions() {
        println!(
            "{lambda:>11}: dim = {:>2}, f_(2)(λ) = {:>3}, f_2(λ) = {:>3}",
            t.dim(lambda)?,
            f_eta(&transposition, lambda)?,
            f2_shifted(lambda)
        );
    }
    Ok(())
}
