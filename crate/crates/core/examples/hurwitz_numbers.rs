//! Hurwitz numbers from character sums, checked against brute-force monodromy.

use hurwitz_gw::hurwitz::{hurwitz_connected, hurwitz_disconnected, monodromy_oracle, BranchData};
use hurwitz_gw::partitions::parse_profiles;
use hurwitz_gw::qseries::rational_to_string;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (1, 2, ""),
        (0, 2, "(2);(2)"),
        (0, 3, "(3);(3);(3)"),
        (0, 3, "(2,1);(2,1);(2,1);(2,1)"),
        (1, 3, "(2,1);(2,1)"),
    ];
    println!(
        "{:>2} {:>2} {:<28} {:>10} {:>10} {:>10}",
        "h", "d", "profiles", "Burnside", "oracle", "connected"
    );
    for (h, d, profiles) in cases {
        let profiles = if profiles.is_empty() {
            Vec::new()
        } else {
            parse_profiles(profiles)?
        };
        let b = BranchData::new(h, d, profiles)?;
        println!(
            "{h:>2} {d:>2} {:<28} {:>10} {:>10} {:>10}",
            b.profiles
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(";"),
            rational_to_string(&hurwitz_disconnected(&b)?),
            rational_to_string(&monodromy_oracle(&b, false)?),
            rational_to_string(&hurwitz_connected(&b)?),
        );
    }
    Ok(())
}
