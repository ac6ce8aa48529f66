//! Hodge series against tabulated intersection numbers on M̄_{1,1}, M̄_{1,2}
//! and M̄_{2,1}, and against the infinite-wedge evaluation of the character sum.

use hurwitz_gw::fock::{correlator, OperatorAtom, Truncation};
use hurwitz_gw::gwh::{hodge_h_connected, hodge_h_series};
use hurwitz_gw::partitions::enumerate_partitions;
use hurwitz_gw::qseries::{factorial, int, rat};
use hurwitz_gw::{Partition, Rational};
use num_bigint::BigInt;

/// `∏ μ_j · ∫_{M̄_{g,n}} Λ∨(1) / ∏(1 − μ_j ψ_j)`, i.e. the `u^{2g−2}` coefficient of `H°(μ; u)`.
fn hodge_side(mu: &Partition, g: i64) -> Rational {
    hodge_h_connected(mu, 2 * g - 1)
        .unwrap()
        .coeff(&[2 * g - 2])
        .unwrap()
}

#[test]
fn genus_one_one_point() {
    // ∫ψ = ∫λ₁ = 1/24 on M̄_{1,1}: ∫ (1 − λ₁)/(1 − aψ) = (a − 1)/24
    for a in 1..=4i64 {
        let mu = Partition::row(a as u32);
        assert_eq!(hodge_side(&mu, 1), int(a) * rat(a - 1, 24), "μ = {mu}");
    }
}

#[test]
fn genus_one_two_points() {
    // On M̄_{1,2}: ∫ψ₁² = ∫ψ₁ψ₂ = ∫λ₁ψ_i = 1/24.
    for (a, b) in [(1i64, 1i64), (2, 1), (3, 1), (2, 2)] {
        let mu = Partition::new(vec![a as u32, b as u32]).unwrap();
        let integral = rat(a * a + a * b + b * b, 24) - rat(a + b, 24);
        assert_eq!(hodge_side(&mu, 1), int(a * b) * integral, "μ = {mu}");
    }
}

#[test]
fn genus_two_one_point() {
    // On M̄_{2,1}: ∫ψ⁴ = 1/1152, ∫λ₁ψ³ = 1/480, ∫λ₂ψ² = 7/5760.
    for a in 1..=3i64 {
        let integral = rat(a.pow(4), 1152) - rat(a.pow(3), 480) + rat(7 * a * a, 5760);
        assert_eq!(
            hodge_side(&Partition::row(a as u32), 2),
            int(a) * integral,
            "a = {a}"
        );
    }
}

#[test]
fn disconnected_series_matches_fock_evaluation() {
    // Σ_λ (dim λ/d!) χ^λ_η e^{u f_2(λ)} = (∏α_{−η} v_∅, e^{uF_2} e^{α_{−1}} v_∅)
    let order = 6;
    for d in 1..=4u32 {
        for eta in enumerate_partitions(d) {
            let shift = eta.len() as i64 + d as i64;
            let h = hodge_h_series(&eta, order - shift).unwrap();
            let trunc = Truncation::new(&["u"], &[order]);
            let fock = correlator(
                &[OperatorAtom::ExpUF2, OperatorAtom::ExpAlpha(-1)],
                Some(&eta),
                &trunc,
            )
            .unwrap();
            let prefactor: Rational = eta
                .parts()
                .iter()
                .map(|&q| Rational::new(factorial(q as u64), BigInt::from(q).pow(q)))
                .product();
            for n in 0..order {
                let expected = fock.coeff(&[n]).unwrap() * &prefactor;
                assert_eq!(h.coeff(&[n - shift]).unwrap(), expected, "η = {eta}, u^{n}");
            }
        }
    }
}

#[test]
fn connected_two_point_genus_zero() {
    // [u^{-2}] H°((a,b)) = a b / (a + b), the unstable genus-zero convention.
    for (a, b) in [(1u32, 1u32), (2, 1), (3, 1), (2, 2), (3, 2)] {
        let mu = Partition::new(vec![a, b]).unwrap();
        assert_eq!(
            hodge_side(&mu, 0),
            rat((a * b) as i64, (a + b) as i64),
            "μ = {mu}"
        );
    }
}
