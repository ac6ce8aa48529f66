//! Vacuum expectations of operator words on the infinite wedge.

use hurwitz_gw::fock::{correlator, OperatorAtom, Truncation};
use hurwitz_gw::MultiSeries;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let trunc = Truncation::new(&["z"], &[7]);
    let z = MultiSeries::var(&["z"], "z")?;

    // ⟨α_2 α_{−2}⟩ = 2.
    let c = correlator(
        &[OperatorAtom::Alpha(2), OperatorAtom::Alpha(-2)],
        None,
        &trunc,
    )?;
    println!("<α_2 α_-2> = {c}");

    // ⟨ℰ_0(z)⟩ = 1/ς(z).
    let e0 = OperatorAtom::CalE { r: 0, z: z.clone() };
    println!("<E_0(z)> = {}", correlator(&[e0], None, &trunc)?);

    // ⟨α_2 α_1 ℰ_{−3}(z)⟩ = ς(2z) ς(z) / ς(z).
    let word = [
        OperatorAtom::Alpha(2),
        OperatorAtom::Alpha(1),
        OperatorAtom::CalE { r: -3, z },
    ];
    println!("<α_2 α_1 E_-3(z)> = {}", correlator(&word, None, &trunc)?);

    // ⟨(1,1)| e^{α_{−1}}⟩: paired with the boson vector α_{−1}² v_∅.
    let left = "(1,1)".parse()?;
    println!(
        "<(1,1)| e^(α_-1)> = {}",
        correlator(&[OperatorAtom::ExpAlpha(-1)], Some(&left), &trunc)?
    );
    Ok(())
}
