//! Partitions, their statistics and class sums in Z(d).

use hurwitz_gw::partitions::{enumerate_partitions, subpartitions_by_removing_ones};
use hurwitz_gw::qseries::rat;
use hurwitz_gw::{ClassSum, Partition};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for mu in enumerate_partitions(4) {
        println!(
            "{mu:<10} ℓ={} |Aut|={} z={} conjugate={}",
            mu.len(),
            mu.aut(),
            mu.z(),
            mu.conjugate()
        );
    }

    let mu: Partition = "(3,1^2)".parse()?;
    println!("\nremoving ones from {mu}:");
    for (sub, weight) in subpartitions_by_removing_ones(&mu) {
        println!("  {weight} × {sub}");
    }

    let mut c = ClassSum::zero(2);
    c.add_term("(2)".parse()?, rat(1, 1))?;
    c.add_term("(1,1)".parse()?, rat(-1, 2))?;
    println!("\nclass sum: {c}");
    println!("as JSON:   {}", serde_json::to_string(&c)?);
    Ok(())
}
