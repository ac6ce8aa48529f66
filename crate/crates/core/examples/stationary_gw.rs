//! Stationary Gromov–Witten invariants of curves via completed cycles.

use hurwitz_gw::gwh::{stationary_gw, stationary_gw_wallcrossing};
use hurwitz_gw::qseries::rational_to_string;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases: [(u32, u32, &[u32]); 5] = [
        (1, 1, &[]),
        (1, 2, &[1, 1]),
        (0, 2, &[1, 1]),
        (0, 1, &[2]),
        (1, 3, &[1, 1, 2]),
    ];
    for (h, d, ks) in cases {
        let gw = stationary_gw(h, d, ks)?;
        let again = stationary_gw_wallcrossing(h, d, ks)?;
        let by_genus: Vec<String> = gw
            .by_genus
            .iter()
            .map(|(g, v)| format!("g={g}: {}", rational_to_string(v)))
            .collect();
        println!(
            "h={h} d={d} τ{ks:?}: total {} [{}] (dimension genus {:?}, routes agree: {})",
            rational_to_string(&gw.total),
            by_genus.join(", "),
            gw.dimension_genus,
            gw == again
        );
    }
    Ok(())
}
