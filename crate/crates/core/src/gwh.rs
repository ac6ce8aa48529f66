//! Completed cycles, numerical I-functions, stationary Gromov–Witten
//! invariants of target curves and the numerical ELSV check.
//!
//! Two independent routes produce the completed cycle `τ_k^d ∈ Z(d)`:
//!
//! * [`completed_cycle`]: the closed formula
//!   `τ_k^d = Σ_{μ ⊢ d, μ̃ ≤ μ} C(m_1(μ), m_1(μ̃)) ρ_{k,μ̃} (μ)` with
//!   `ρ_{k,μ} = (∏μ_j/|μ|!) [x^{k+2−|μ|−ℓ(μ)}] S(x)^{|μ|−1} ∏ S(μ_j x)`;
//! * [`tau_via_wallcrossing`]: the degeneration sum
//!   `Σ_{b,η} z(μ) Hur^{P¹}(μ, η, (−(2))^b/b!) I_{g,η}(τ_k)` with one-marking
//!   I-functions evaluated on the infinite wedge.
//!
//! # Conventions
//!
//! Boson vectors are unnormalized: `∏_j α_{−η_j} v_∅ = Σ_λ χ^λ_η v_λ`. With that,
//! the one-marking I-function is
//! `I_{g,η}(τ_k) = [u^{vd} w^{k+1}] (∏α_{−η_j} v_∅, e^{uF_2} e^{α_{−1}} A*(w,uw) v_∅)`
//! with `vd = 2g − 1 + d + ℓ(η)` and z-degree `k + 2 − 2g − d − ℓ(η)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::characters::{f2_shifted, table};
use crate::error::{Error, Result};
use crate::fock::{apply_word, boson_vector, FockState, OperatorAtom, Truncation};
use crate::hurwitz::{
    double_hurwitz_exp_series, hurwitz_connected, hurwitz_disconnected, BranchData,
};
use crate::partitions::{
    enumerate_partitions, subpartitions_by_removing_ones, ClassSum, Partition,
};
use crate::qseries::{
    exp_linear_series, factorial, int, s_series, serialize_rational, MultiSeries, Rational,
    SeriesError,
};

/// Whether the `μ̃ = ∅` term (present when `μ = (1^d)`) belongs to the completed
/// cycle. Including it is what makes the closed formula agree with the
/// wall-crossing route at every degree (see [`gwh_crosscheck`]); excluding it
/// already fails at `(k, d) = (0, 1)`.
pub const INCLUDE_EMPTY_SUBPARTITION: bool = true;

/// `ρ_{k,μ}`; for `μ = ∅` this is `[x^{k+2}] S(x)^{−1}`.
pub fn rho(k: u32, mu: &Partition) -> Rational {
    let n = mu.size() as i64;
    let target = k as i64 + 2 - n - mu.len() as i64;
    if target < 0 || target % 2 != 0 {
        return Rational::zero();
    }
    let order = target + 1;
    let s = s_series("x", order);
    let mut acc = s.pow(n - 1).expect("S is a unit");
    for &p in mu.parts() {
        acc = acc
            .mul(&s.rescale(&int(p as i64)).expect("univariate"))
            .expect("same variable");
    }
    let prod: Rational = mu.parts().iter().map(|&p| int(p as i64)).product();
    let coeff = acc.coeff(&[target]).expect("generated to the needed order");
    prod / Rational::from_integer(factorial(n as u64)) * coeff
}

/// A completed cycle `τ_k^d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompletedCycle {
    pub k: u32,
    pub d: u32,
    pub value: ClassSum,
}

/// `τ_k^d` from the closed `ρ`-formula.
pub fn completed_cycle(k: u32, d: u32) -> Result<CompletedCycle> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "completed cycles need degree d >= 1".into(),
        ));
    }
    let mut value = ClassSum::zero(d);
    for mu in enumerate_partitions(d) {
        for (sub, weight) in subpartitions_by_removing_ones(&mu) {
            if sub.is_empty() && !INCLUDE_EMPTY_SUBPARTITION {
                continue;
            }
            value.add_term(mu.clone(), Rational::from_integer(weight) * rho(k, &sub))?;
        }
    }
    Ok(CompletedCycle { k, d, value })
}

/// A numerical I-function: `value · z^{z_degree}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IFunctionCoefficient {
    pub g: i64,
    pub eta: Partition,
    /// Descendent index of the single marking; `None` for I-functions without markings.
    pub k: Option<u32>,
    #[serde(serialize_with = "serialize_rational")]
    pub value: Rational,
    pub z_degree: i64,
}

fn i_function_word() -> Vec<OperatorAtom> {
    let vars = ["u", "w"];
    vec![
        OperatorAtom::ExpUF2,
        OperatorAtom::ExpAlpha(-1),
        OperatorAtom::AStar {
            a: MultiSeries::var(&vars, "w").expect("own variable"),
            b: MultiSeries::monomial(&vars, &[1, 1], Rational::one()),
        },
    ]
}

/// `e^{uF_2} e^{α_{−1}} A*(w,uw) v_∅`, restricted to energy `d`.
fn i_function_state(d: u32, u_order: i64, w_order: i64) -> Result<FockState> {
    let trunc = Truncation::new(&["u", "w"], &[u_order, w_order]);
    let state = apply_word(
        &i_function_word(),
        &FockState::vacuum(&trunc.vars),
        Some(d),
        &trunc,
    )?;
    Ok(state.restrict_energy(d))
}

/// Runs `f` with growing slack until it stops hitting precision limits.
fn with_slack<T>(mut f: impl FnMut(i64) -> Result<T>) -> Result<T> {
    let mut slack = 2;
    loop {
        match f(slack) {
            Err(Error::Series(SeriesError::Precision { .. })) if slack < 32 => slack *= 2,
            other => return other,
        }
    }
}

/// One-marking numerical I-function `I_{g,η}(τ_k)`.
pub fn i_function_numeric(g: i64, eta: &Partition, k: u32) -> Result<IFunctionCoefficient> {
    let d = eta.size();
    if d == 0 {
        return Err(Error::InvalidArgument(
            "I-functions need a nonempty profile".into(),
        ));
    }
    let l = eta.len() as i64;
    let vd = 2 * g - 1 + d as i64 + l;
    let z_degree = k as i64 + 2 - 2 * g - d as i64 - l;
    let value = with_slack(|slack| {
        let state = i_function_state(d, vd.max(0) + 1 + slack, k as i64 + 2 + slack)?;
        let x = boson_vector(&["u", "w"], eta)?.pair(&state)?;
        if vd < x.floor()[0] {
            return Ok(Rational::zero());
        }
        Ok(x.coeff(&[vd, k as i64 + 1])?)
    })?;
    Ok(IFunctionCoefficient {
        g,
        eta: eta.clone(),
        k: Some(k),
        value,
        z_degree,
    })
}

/// I-function without markings: `[u^{vd}] Σ_λ (dim λ/d!) χ^λ_η e^{u f_2(λ)}`,
/// `vd = 2g − 2 + d + ℓ(η)`, of z-degree `1 − vd`.
pub fn i_function_empty(g: i64, eta: &Partition) -> Result<IFunctionCoefficient> {
    let d = eta.size();
    let vd = 2 * g - 2 + d as i64 + eta.len() as i64;
    let value = if vd < 0 {
        Rational::zero()
    } else {
        hodge_inner_series(eta, vd + 1)?.coeff(&[vd])?
    };
    Ok(IFunctionCoefficient {
        g,
        eta: eta.clone(),
        k: None,
        value,
        z_degree: 1 - vd,
    })
}

/// Connected I-function without markings:
/// `∏_j η_j^{η_j}/η_j! · [u^{2g−2}] H°(η; u)`, of z-degree `−vd`.
pub fn i_function_connected_empty(g: i64, eta: &Partition) -> Result<IFunctionCoefficient> {
    let d = eta.size();
    let vd = 2 * g - 2 + d as i64 + eta.len() as i64;
    let h = hodge_h_connected(eta, 2 * g - 1)?;
    let value = h.coeff(&[2 * g - 2])? * power_prefactor(eta).recip();
    Ok(IFunctionCoefficient {
        g,
        eta: eta.clone(),
        k: None,
        value,
        z_degree: -vd,
    })
}

/// `∏_j η_j!/η_j^{η_j}`.
fn power_prefactor(eta: &Partition) -> Rational {
    eta.parts()
        .iter()
        .map(|&p| {
            Rational::new(
                factorial(p as u64),
                num_traits::pow(BigInt::from(p), p as usize),
            )
        })
        .product()
}

/// `Σ_λ (dim λ/d!) χ^λ_η e^{u f_2(λ)}`, known below `u^order`.
fn hodge_inner_series(eta: &Partition, order: i64) -> Result<MultiSeries> {
    let d = eta.size();
    let t = table(d)?;
    let d_fact = Rational::from_integer(factorial(d as u64));
    let mut acc = MultiSeries::zero(&["u"]).truncated(&[order]);
    for lambda in t.partitions() {
        let c = int(t.dim(lambda)? * t.chi_int(lambda, eta)?) / &d_fact;
        if c.is_zero() {
            continue;
        }
        acc = acc.add(&exp_linear_series("u", &f2_shifted(lambda), order).scale(&c))?;
    }
    Ok(acc)
}

/// Disconnected Hodge series
/// `H(η; u) = u^{−ℓ(η)−|η|} ∏_j (η_j!/η_j^{η_j}) Σ_λ (dim λ/d!) χ^λ_η e^{u f_2(λ)}`,
/// known below `u^u_order`.
pub fn hodge_h_series(eta: &Partition, u_order: i64) -> Result<MultiSeries> {
    if eta.is_empty() {
        return Err(Error::InvalidArgument(
            "Hodge series need a nonempty profile".into(),
        ));
    }
    let shift = eta.len() as i64 + eta.size() as i64;
    let inner = hodge_inner_series(eta, u_order + shift)?;
    Ok(inner.shift(&[-shift]).scale(&power_prefactor(eta)))
}

/// Connected Hodge series `H°(η; u)`, obtained from
/// `H(η; u) = Σ_{set partitions of the parts} ∏ H°(blocks; u)` by Möbius inversion.
pub fn hodge_h_connected(eta: &Partition, u_order: i64) -> Result<MultiSeries> {
    let parts = eta.parts();
    let l = parts.len();
    if l == 0 {
        return Err(Error::InvalidArgument(
            "Hodge series need a nonempty profile".into(),
        ));
    }
    if l > 16 {
        return Err(Error::Limit("at most 16 parts are supported".into()));
    }
    let slack = 2 * (eta.len() as i64 + eta.size() as i64);
    let full = (1usize << l) - 1;
    let sub_partition = |mask: usize| {
        Partition::new(
            (0..l)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| parts[i])
                .collect(),
        )
        .expect("positive parts")
    };
    let mut disconnected: Vec<Option<MultiSeries>> = vec![None; full + 1];
    for (mask, slot) in disconnected.iter_mut().enumerate().skip(1) {
        *slot = Some(hodge_h_series(&sub_partition(mask), u_order + slack)?);
    }
    let mut connected: Vec<Option<MultiSeries>> = vec![None; full + 1];
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let mut value = disconnected[mask].clone().unwrap();
        // proper subsets T of mask containing its lowest element
        let rest = mask ^ low;
        let mut sub = rest;
        loop {
            let t = sub | low;
            if t != mask {
                let term = connected[t]
                    .as_ref()
                    .unwrap()
                    .mul(disconnected[mask ^ t].as_ref().unwrap())?;
                value = value.sub(&term)?;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        connected[mask] = Some(value);
    }
    let out = connected[full].take().unwrap();
    Ok(out.truncated(&[u_order]))
}

/// `τ_k^d` assembled from double Hurwitz numbers and one-marking I-functions.
pub fn tau_via_wallcrossing(k: u32, d: u32) -> Result<ClassSum> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "completed cycles need degree d >= 1".into(),
        ));
    }
    let k = k as i64;
    with_slack(|slack| {
        let order = k + 3 + slack;
        let state = i_function_state(d, order, k + 2 + slack)?;
        let parts = enumerate_partitions(d);
        let mut x_series = Vec::with_capacity(parts.len());
        for eta in &parts {
            x_series.push(boson_vector(&["u", "w"], eta)?.pair(&state)?);
        }
        let mut out = ClassSum::zero(d);
        for mu in &parts {
            let mut coeff = Rational::zero();
            for (eta, x) in parts.iter().zip(&x_series) {
                let hur = double_hurwitz_exp_series(mu, eta, k + 3)?;
                let l = eta.len() as i64;
                for b in 0..=k + 2 {
                    // genus g with b = k + 2 − 2g − d − ℓ(η)
                    if (k + 2 - b - d as i64 - l) % 2 != 0 {
                        continue;
                    }
                    let vd = k + 1 - b;
                    if vd < x.floor()[0] {
                        continue;
                    }
                    let h = hur.coeff(&[b])?;
                    if h.is_zero() {
                        continue;
                    }
                    coeff += h * x.coeff(&[vd, k + 1])?;
                }
            }
            out.add_term(mu.clone(), coeff * mu.z_factor())?;
        }
        Ok(out)
    })
}

/// The diagonal coefficient `[u^{k+1} w^{k+1}] ⟨∏_j α_{μ_j} e^{α_{−1}} A*(w,uw)⟩`.
pub fn cycle_coefficient_via_fock(k: u32, mu: &Partition) -> Result<Rational> {
    let k = k as i64;
    with_slack(|slack| {
        let trunc = Truncation::new(&["u", "w"], &[k + 2 + slack, k + 2 + slack]);
        let mut word: Vec<OperatorAtom> = mu
            .parts()
            .iter()
            .map(|&p| OperatorAtom::Alpha(p as i64))
            .collect();
        word.extend(i_function_word().into_iter().skip(1));
        let c = crate::fock::correlator(&word, None, &trunc)?;
        Ok(c.coeff(&[k + 1, k + 1])?)
    })
}

/// Result of [`stationary_gw`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StationaryGw {
    #[serde(serialize_with = "serialize_rational")]
    pub total: Rational,
    /// Contributions keyed by the Riemann–Hurwitz genus `g₀` of the cover,
    /// `2g₀ − 2 = d(2h − 2) + Σ_i (d − ℓ(μ^i))`.
    #[serde(serialize_with = "serialize_genus_map")]
    pub by_genus: BTreeMap<i64, Rational>,
    /// The genus fixed by the dimension constraint `Σ k_i = 2g − 2 + d(2 − 2h)`, if integral.
    pub dimension_genus: Option<i64>,
}

fn serialize_genus_map<S: serde::Serializer>(
    map: &BTreeMap<i64, Rational>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut m = serializer.serialize_map(Some(map.len()))?;
    for (g, v) in map {
        m.serialize_entry(&g.to_string(), &crate::qseries::rational_to_string(v))?;
    }
    m.end()
}

/// `⟨τ_{k_1}(ω)…τ_{k_n}(ω)⟩ = Hur^X(τ_{k_1}^d, …, τ_{k_n}^d)` for a target of genus `h`.
pub fn stationary_gw(h: u32, d: u32, ks: &[u32]) -> Result<StationaryGw> {
    let cycles = ks
        .iter()
        .map(|&k| completed_cycle(k, d).map(|c| c.value))
        .collect::<Result<Vec<_>>>()?;
    stationary_from_cycles(h, d, ks, &cycles)
}

/// [`stationary_gw`] with every `τ_k^d` taken from [`tau_via_wallcrossing`].
pub fn stationary_gw_wallcrossing(h: u32, d: u32, ks: &[u32]) -> Result<StationaryGw> {
    let cycles = ks
        .iter()
        .map(|&k| tau_via_wallcrossing(k, d))
        .collect::<Result<Vec<_>>>()?;
    stationary_from_cycles(h, d, ks, &cycles)
}

fn stationary_from_cycles(h: u32, d: u32, ks: &[u32], cycles: &[ClassSum]) -> Result<StationaryGw> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "stationary invariants need degree d >= 1".into(),
        ));
    }
    let mut by_genus: BTreeMap<i64, Rational> = BTreeMap::new();
    let mut total = Rational::zero();
    let mut stack: Vec<(usize, Vec<Partition>, Rational)> = vec![(0, Vec::new(), Rational::one())];
    while let Some((i, profiles, weight)) = stack.pop() {
        if i == cycles.len() {
            let branching: i64 = profiles.iter().map(|p| d as i64 - p.len() as i64).sum();
            let value = weight * hurwitz_disconnected(&BranchData::new(h, d, profiles)?)?;
            if value.is_zero() {
                continue;
            }
            let twice_chi = d as i64 * (2 * h as i64 - 2) + branching;
            let g0 = twice_chi.div_euclid(2) + 1;
            total += &value;
            *by_genus.entry(g0).or_insert_with(Rational::zero) += value;
            continue;
        }
        for (mu, c) in cycles[i].terms() {
            let mut next = profiles.clone();
            next.push(mu.clone());
            stack.push((i + 1, next, &weight * c));
        }
    }
    by_genus.retain(|_, v| !v.is_zero());
    let sum_k: i64 = ks.iter().map(|&k| k as i64).sum();
    let twice = sum_k - d as i64 * (2 - 2 * h as i64) + 2;
    let dimension_genus = if twice % 2 == 0 {
        Some(twice / 2)
    } else {
        None
    };
    Ok(StationaryGw {
        total,
        by_genus,
        dimension_genus,
    })
}

/// Result of [`elsv_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElsvCheck {
    pub mu: Partition,
    pub g: u32,
    /// Number of simple branch points `m = 2g − 2 + ℓ(μ) + |μ|`.
    pub m: u32,
    #[serde(serialize_with = "serialize_rational")]
    pub lhs: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub rhs: Rational,
    pub equal: bool,
    /// `2g − 2 + ℓ(μ) > 0`; the unstable cases `(0,1)` and `(0,2)` use the
    /// conventions built into the Hodge series.
    pub stable: bool,
}

/// Compares `(m!/|Aut μ|) ∏ μ_j^{μ_j}/μ_j! ∫ Λ∨(1)/∏(1 − μ_j ψ_j)` with `Hur°^{P¹}(μ, (2)^m)`.
pub fn elsv_check(mu: &Partition, g: u32) -> Result<ElsvCheck> {
    let d = mu.size();
    if d == 0 {
        return Err(Error::InvalidArgument(
            "ELSV needs a nonempty partition".into(),
        ));
    }
    let l = mu.len() as i64;
    let m = 2 * g as i64 - 2 + l + d as i64;
    if m <= 0 {
        return Err(Error::Unstable(format!(
            "(g, μ) = ({g}, {mu}) has no simple branch points (m = {m})"
        )));
    }
    let m = m as u32;
    let h = hodge_h_connected(mu, 2 * g as i64 - 1)?;
    let integral = h.coeff(&[2 * g as i64 - 2])?;
    let prefactor: Rational = mu
        .parts()
        .iter()
        .map(|&p| {
            Rational::new(
                num_traits::pow(BigInt::from(p), p as usize - 1),
                factorial(p as u64),
            )
        })
        .product();
    let lhs = Rational::new(factorial(m as u64), mu.aut()) * prefactor * integral;
    let rhs = if d == 1 {
        Rational::zero()
    } else {
        let mut profiles = vec![mu.clone()];
        profiles.extend(std::iter::repeat_n(
            Partition::transposition(d)?,
            m as usize,
        ));
        hurwitz_connected(&BranchData::new(0, d, profiles)?)?
    };
    Ok(ElsvCheck {
        mu: mu.clone(),
        g,
        m,
        equal: lhs == rhs,
        lhs,
        rhs,
        stable: 2 * g as i64 - 2 + l > 0,
    })
}

/// One `(d, k)` comparison in a [`CrosscheckReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscheckRow {
    pub d: u32,
    pub k: u32,
    pub pass: bool,
    pub mismatches: Vec<Mismatch>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub mu: Partition,
    #[serde(serialize_with = "serialize_rational")]
    pub closed_formula: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub wallcrossing: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub pass: bool,
    pub rows: Vec<CrosscheckRow>,
}

/// Compares [`completed_cycle`] with [`tau_via_wallcrossing`] for all `1 ≤ d ≤ d_max`, `k ≤ k_max`.
pub fn gwh_crosscheck(d_max: u32, k_max: u32) -> Result<CrosscheckReport> {
    let mut rows = Vec::new();
    for d in 1..=d_max {
        for k in 0..=k_max {
            let direct = completed_cycle(k, d)?.value;
            let wall = tau_via_wallcrossing(k, d)?;
            let mismatches: Vec<Mismatch> = enumerate_partitions(d)
                .into_iter()
                .filter(|mu| direct.coeff(mu) != wall.coeff(mu))
                .map(|mu| Mismatch {
                    closed_formula: direct.coeff(&mu),
                    wallcrossing: wall.coeff(&mu),
                    mu,
                })
                .collect();
            rows.push(CrosscheckRow {
                d,
                k,
                pass: mismatches.is_empty(),
                mismatches,
            });
        }
    }
    Ok(CrosscheckReport {
        pass: rows.iter().all(|r| r.pass),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::rat;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn rho_spot_values() {
        assert_eq!(rho(0, &p("(1)")), int(1));
        assert_eq!(rho(1, &p("(2)")), int(1));
        assert_eq!(rho(3, &p("(2)")), rat(5, 24));
        assert_eq!(rho(0, &Partition::empty()), rat(-1, 24));
    }

    #[test]
    fn rho_parity() {
        for d in 1..=6 {
            for mu in enumerate_partitions(d) {
                for k in 0..=10u32 {
                    let t = k as i64 + 2 - d as i64 - mu.len() as i64;
                    if t % 2 != 0 || t < 0 {
                        assert!(rho(k, &mu).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn tau_1_2() {
        let c = completed_cycle(1, 2).unwrap().value;
        assert_eq!(c, ClassSum::basis(&p("(2)")));
        for k in 0..6 {
            for d in 2..5 {
                let c = completed_cycle(k, d).unwrap().value;
                assert_eq!(c.coeff(&Partition::row(d)), rho(k, &Partition::row(d)));
            }
        }
    }

    #[test]
    fn wallcrossing_small() {
        assert_eq!(
            tau_via_wallcrossing(1, 2).unwrap(),
            ClassSum::basis(&p("(2)"))
        );
        for k in 0..=4 {
            assert_eq!(
                tau_via_wallcrossing(k, 1).unwrap(),
                completed_cycle(k, 1).unwrap().value,
                "k={k}"
            );
        }
    }

    #[test]
    fn fock_specialization() {
        for d in 1..=2 {
            for k in 0..=4 {
                let cycle = completed_cycle(k, d).unwrap().value;
                for mu in enumerate_partitions(d) {
                    assert_eq!(
                        cycle_coefficient_via_fock(k, &mu).unwrap(),
                        cycle.coeff(&mu),
                        "k={k} μ={mu}"
                    );
                }
            }
        }
    }

    #[test]
    fn empty_i_functions() {
        for d in 2..=4u32 {
            let simple =
                i_function_empty(2 - d as i64, &Partition::transposition(d).unwrap()).unwrap();
            assert_eq!((simple.value, simple.z_degree), (int(1), 0));
            let trivial = i_function_empty(1 - d as i64, &Partition::ones(d)).unwrap();
            assert_eq!((trivial.value, trivial.z_degree), (int(1), 1));
        }
    }

    #[test]
    fn unstable_two_point_value() {
        for (a, b) in [(1u32, 1u32), (2, 1), (3, 2), (2, 2)] {
            let eta = Partition::new(vec![a, b]).unwrap();
            let i = i_function_connected_empty(0, &eta).unwrap();
            let pw = |x: u32| {
                Rational::new(
                    num_traits::pow(BigInt::from(x), x as usize + 1),
                    factorial(x as u64),
                )
            };
            let expected = pw(a) * pw(b) / int((a + b) as i64);
            assert_eq!(i.value, expected, "η = {eta}");
        }
    }

    #[test]
    fn elsv_spot() {
        let c = elsv_check(&p("(2)"), 1).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone()), (rat(1, 2), rat(1, 2)));
        assert!(c.equal && c.stable);
        let c = elsv_check(&p("(1,1)"), 0).unwrap();
        assert!(c.equal, "{c:?}");
        assert_eq!(c.rhs, rat(1, 2));
        assert!(matches!(elsv_check(&p("(1)"), 0), Err(Error::Unstable(_))));
    }

    #[test]
    fn stationary_spots() {
        assert_eq!(stationary_gw(1, 2, &[1, 1]).unwrap().total, int(2));
        assert_eq!(stationary_gw(0, 2, &[1, 1]).unwrap().total, rat(1, 2));
        assert_eq!(stationary_gw(1, 1, &[]).unwrap().total, int(1));
    }
}
