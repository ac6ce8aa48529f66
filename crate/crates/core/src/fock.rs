//! The charge-zero infinite wedge and an exact evaluator for vacuum
//! expectations of operator words.
//!
//! A basis vector `v_λ` corresponds to the set `S = {λ_i − i + ½}` of
//! half-integers. Internally a half-integer `k` is handled through the integer
//! `m = k − ½`, so `S ↔ {λ_i − i}`. Every fermionic sign in this module comes
//! from [`apply_e_elem`]-style moves: moving an element of `S` past others
//! contributes `(−1)^{#elements strictly between}`.
//!
//! # Operators
//!
//! * `α_r = Σ_k E_{k−r,k}`, changing energy by `−r`;
//! * `e^{α_{±1}}`;
//! * `e^{uF_2}`, diagonal with eigenvalue `e^{u f_2(λ)}`;
//! * `ℰ_r(z) = Σ_k e^{z(k−r/2)} E_{k−r,k} + δ_{r,0}/ς(z)` (normal-ordered diagonal);
//! * `A(a,b) = S(b)^a Σ_k ς(b)^k/(a+1)_k ℰ_k(b)` and its adjoint
//!   `A*(a,b) = S(b)^a Σ_k ς(b)^k/(a+1)_k ℰ_{−k}(b)`.
//!
//! # Precision and energy caps
//!
//! Coefficients are [`MultiSeries`] that carry their own known box. A
//! coefficient that cancels to zero inside its box is *kept* as an empty series,
//! because "zero below order N" is still information a later Laurent factor can
//! consume.
//!
//! Words are evaluated right to left on the vacuum and finally paired with a
//! left vector of energy `E_L`. After applying the atom at position `i`, only
//! components of energy at most `E_L + Σ_{j<i} lower(atom_j)` can still reach
//! the left vector, where `lower` is the most energy an atom can remove:
//! `α_r` and `ℰ_r` remove `max(r, 0)`, `e^{α_1}`, `A` and `A*` are unbounded,
//! everything else removes nothing. Components above this cap are dropped
//! exactly (no approximation). The cap also bounds the raising parts of
//! `e^{α_{−1}}`, `A` and `A*`; a raising atom under an unbounded cap is an
//! [`Error::EnergyCap`] error.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::One;

use crate::characters::f2_shifted;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::qseries::{
    exp_linear_series, factorial, int, pochhammer_series, rat, s_series, sigma_series, MultiSeries,
    Rational, UNBOUNDED,
};

/// A half-integer `k ∈ Z + ½`, stored as `2k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i64);

impl HalfInt {
    /// From the doubled value `2k`, which must be odd.
    pub fn from_twice(t: i64) -> Self {
        assert!(t.rem_euclid(2) == 1, "half-integers have odd doubles");
        HalfInt(t)
    }

    /// `m + ½`.
    pub fn above(m: i64) -> Self {
        HalfInt(2 * m + 1)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    /// `k − ½`.
    pub fn below(self) -> i64 {
        (self.0 - 1) / 2
    }

    pub fn to_rational(self) -> Rational {
        rat(self.0, 2)
    }
}

/// The elements `λ_i − i` for `i = 1..=len` (with `λ_i = 0` past the length).
fn window(lambda: &Partition, len: usize) -> Vec<i64> {
    (0..len)
        .map(|i| lambda.parts().get(i).copied().unwrap_or(0) as i64 - (i as i64 + 1))
        .collect()
}

/// Whether `m + ½` lies in `S(λ)`.
fn contains(lambda: &Partition, m: i64) -> bool {
    let l = lambda.len() as i64;
    m < -l || window(lambda, lambda.len()).contains(&m)
}

/// Moves the element `from + ½` of `S(λ)` to `to + ½`. `None` unless `from ∈ S`, `to ∉ S`.
fn move_element(lambda: &Partition, from: i64, to: i64) -> Option<(i64, Partition)> {
    if from == to {
        return None;
    }
    let len = (lambda.len() as i64).max(-from.min(to)) as usize + 1;
    let mut elems = window(lambda, len);
    let pos = elems.iter().position(|&x| x == from)?;
    if elems.contains(&to) {
        return None;
    }
    let (lo, hi) = (from.min(to), from.max(to));
    let between = elems.iter().filter(|&&x| x > lo && x < hi).count();
    elems[pos] = to;
    elems.sort_unstable_by(|a, b| b.cmp(a));
    let parts: Vec<u32> = elems
        .iter()
        .enumerate()
        .map(|(i, &x)| (x + i as i64 + 1) as u32)
        .filter(|&p| p > 0)
        .collect();
    let sign = if between % 2 == 0 { 1 } else { -1 };
    Some((
        sign,
        Partition::new(parts).expect("fermion moves give partitions"),
    ))
}

/// `E_{i,j} v_λ` as `(sign, λ')`, or `None` when it vanishes.
///
/// Off the diagonal this removes `j` and inserts `i`. On the diagonal the
/// normal-ordered convention applies: `+v_λ` if `j ∈ S, j > 0`, `−v_λ` if
/// `j ∉ S, j < 0`, zero otherwise.
pub fn apply_e_elem(i: HalfInt, j: HalfInt, lambda: &Partition) -> Option<(i64, Partition)> {
    if i == j {
        let m = j.below();
        let inside = contains(lambda, m);
        return if inside && j.twice() > 0 {
            Some((1, lambda.clone()))
        } else if !inside && j.twice() < 0 {
            Some((-1, lambda.clone()))
        } else {
            None
        };
    }
    move_element(lambda, j.below(), i.below())
}

/// All nonzero terms of `Σ_k E_{k−r,k} v_λ` for `r ≠ 0`, as `(k − ½, sign, λ')`.
fn shift_moves(lambda: &Partition, r: i64) -> Vec<(i64, i64, Partition)> {
    let len = lambda.len() + r.unsigned_abs() as usize + 1;
    window(lambda, len)
        .into_iter()
        .filter_map(|m| move_element(lambda, m, m - r).map(|(s, p)| (m, s, p)))
        .collect()
}

/// Nonzero diagonal terms `E_{k,k} v_λ` as `(k − ½, sign)`.
fn diagonal_terms(lambda: &Partition) -> Vec<(i64, i64)> {
    let l = lambda.len() as i64;
    let elems = window(lambda, lambda.len());
    let mut out: Vec<(i64, i64)> = elems.iter().filter(|&&m| m >= 0).map(|&m| (m, 1)).collect();
    out.extend((-l..0).filter(|m| !elems.contains(m)).map(|m| (m, -1)));
    out
}

/// Series variables and generation orders used when expanding operator coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncation {
    pub vars: Vec<String>,
    /// Per-variable order to which generated series (exponentials, `ς`, `S`, Pochhammer
    /// factors) are expanded. Results are exact wherever their known box says so.
    pub order: Vec<i64>,
}

impl Truncation {
    pub fn new<S: AsRef<str>>(vars: &[S], order: &[i64]) -> Self {
        assert_eq!(vars.len(), order.len());
        Truncation {
            vars: vars.iter().map(|v| v.as_ref().to_string()).collect(),
            order: order.to_vec(),
        }
    }

    /// Order for univariate generating series before substitution; two extra
    /// terms absorb the `1/ς` Laurent shift.
    fn x_order(&self) -> i64 {
        self.order
            .iter()
            .copied()
            .filter(|&o| o < UNBOUNDED)
            .max()
            .unwrap_or(8)
            + 2
    }

    fn var_index(&self, name: &str) -> Result<usize> {
        self.vars.iter().position(|v| v == name).ok_or_else(|| {
            Error::InvalidArgument(format!("variable {name} not in {:?}", self.vars))
        })
    }
}

/// A finite combination `Σ c_λ v_λ` with series coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockState {
    vars: Vec<String>,
    terms: BTreeMap<Partition, MultiSeries>,
}

impl FockState {
    /// The exact zero vector.
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        FockState {
            vars: vars.iter().map(|v| v.as_ref().to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn vacuum<S: AsRef<str>>(vars: &[S]) -> Self {
        Self::basis(vars, &Partition::empty())
    }

    pub fn basis<S: AsRef<str>>(vars: &[S], lambda: &Partition) -> Self {
        let mut s = Self::zero(vars);
        s.terms.insert(lambda.clone(), MultiSeries::one(vars));
        s
    }

    /// A state with exact rational coefficients.
    pub fn from_scalars<S: AsRef<str>>(
        vars: &[S],
        terms: impl IntoIterator<Item = (Partition, Rational)>,
    ) -> Self {
        let mut s = Self::zero(vars);
        for (p, c) in terms {
            let c = MultiSeries::constant(vars, c);
            s.accumulate(p, c).expect("same variables");
        }
        s
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// All stored coefficients, including those known to vanish only to finite precision.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &MultiSeries)> {
        self.terms.iter()
    }

    /// Coefficients that have at least one nonzero known term.
    pub fn nonzero_terms(&self) -> impl Iterator<Item = (&Partition, &MultiSeries)> {
        self.terms.iter().filter(|(_, c)| !c.is_zero())
    }

    pub fn coeff(&self, lambda: &Partition) -> MultiSeries {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(|| MultiSeries::zero(&self.vars))
    }

    /// True when no basis vector can carry a nonzero coefficient.
    pub fn is_exactly_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_energy(&self) -> Option<u32> {
        self.terms.keys().map(Partition::size).max()
    }

    pub fn min_energy(&self) -> Option<u32> {
        self.terms.keys().map(Partition::size).min()
    }

    fn accumulate(&mut self, lambda: Partition, c: MultiSeries) -> Result<()> {
        let slot = match self.terms.remove(&lambda) {
            Some(prev) => prev.add(&c)?,
            None => c,
        };
        self.terms.insert(lambda, slot);
        Ok(())
    }

    pub fn add(&self, other: &FockState) -> Result<FockState> {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.accumulate(p.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &FockState) -> Result<FockState> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> FockState {
        FockState {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(p, s)| (p.clone(), s.scale(c)))
                .collect(),
        }
    }

    pub fn mul_series(&self, c: &MultiSeries) -> Result<FockState> {
        let mut terms = BTreeMap::new();
        for (p, s) in &self.terms {
            terms.insert(p.clone(), s.mul(c)?);
        }
        Ok(FockState {
            vars: self.vars.clone(),
            terms,
        })
    }

    /// Drops all components of energy above `cap`.
    pub fn restrict_energy(&self, cap: u32) -> FockState {
        FockState {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.size() <= cap)
                .map(|(p, s)| (p.clone(), s.clone()))
                .collect(),
        }
    }

    /// Real bilinear pairing `(s, t) = Σ_λ s_λ t_λ`.
    pub fn pair(&self, other: &FockState) -> Result<MultiSeries> {
        let mut acc = MultiSeries::zero(&self.vars);
        for (p, c) in &self.terms {
            if let Some(d) = other.terms.get(p) {
                acc = acc.add(&c.mul(d)?)?;
            }
        }
        Ok(acc)
    }

    /// Whether two states agree coefficientwise on the common known boxes.
    pub fn agrees_with(&self, other: &FockState) -> bool {
        let keys: std::collections::BTreeSet<&Partition> =
            self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().all(|p| {
            let a = self.coeff(p);
            let b = other.coeff(p);
            let order: Vec<i64> = a
                .order()
                .iter()
                .zip(b.order())
                .map(|(x, y)| *x.min(y))
                .collect();
            a.truncated(&order) == b.truncated(&order)
        })
    }
}

impl fmt::Display for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .nonzero_terms()
            .map(|(p, c)| format!("[{c}]·v{p}"))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// One factor of an operator word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperatorAtom {
    /// `α_r`, `r ≠ 0`.
    Alpha(i64),
    /// `e^{α_r}` for `r = ±1`.
    ExpAlpha(i64),
    /// `e^{uF_2}`; the state variables must include `u`.
    ExpUF2,
    /// `ℰ_r(z)`.
    CalE { r: i64, z: MultiSeries },
    /// `A(a, b)`.
    A { a: MultiSeries, b: MultiSeries },
    /// `A*(a, b)`.
    AStar { a: MultiSeries, b: MultiSeries },
}

impl OperatorAtom {
    /// The largest amount of energy the atom can remove; `None` if unbounded.
    pub fn lowering_budget(&self) -> Option<u32> {
        match self {
            OperatorAtom::Alpha(r) | OperatorAtom::CalE { r, .. } => Some((*r).max(0) as u32),
            OperatorAtom::ExpAlpha(r) if *r > 0 => None,
            OperatorAtom::A { .. } | OperatorAtom::AStar { .. } => None,
            _ => Some(0),
        }
    }
}

/// Energy caps for each position of a word whose value is paired with a vector of energy `left_energy`.
pub fn energy_caps(word: &[OperatorAtom], left_energy: u32) -> Vec<Option<u32>> {
    let mut caps = Vec::with_capacity(word.len());
    let mut acc = Some(left_energy);
    for atom in word {
        caps.push(acc);
        acc = match (acc, atom.lowering_budget()) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
    }
    caps
}

/// `e^{c z}` with enough terms for the truncation.
fn exp_of(z: &MultiSeries, c: &Rational, trunc: &Truncation) -> Result<MultiSeries> {
    let n = trunc.x_order().max(z.terms_needed());
    Ok(exp_linear_series("x", c, n).compose(z)?)
}

fn sigma_of(z: &MultiSeries, trunc: &Truncation) -> Result<MultiSeries> {
    let n = trunc.x_order().max(z.terms_needed()) + 2;
    Ok(sigma_series("x", n).compose(z)?)
}

/// `1/(x+1)_k` as a univariate series in `x`.
fn inverse_pochhammer(k: i64, order: i64) -> Result<MultiSeries> {
    let vars = ["x"];
    if k == 0 {
        return Ok(MultiSeries::one(&vars));
    }
    if k > 0 {
        return Ok(pochhammer_series(k, "x", order).inverse()?);
    }
    // 1/(x+1)_k = x(x−1)…(x−|k|+1) for k < 0
    let x = MultiSeries::var(&vars, "x")?;
    let mut acc = MultiSeries::one(&vars);
    for m in 0..(-k) {
        acc = acc.mul(&x.sub(&MultiSeries::constant(&vars, int(m)))?)?;
    }
    Ok(acc)
}

/// Prefactors `S(b)^a ς(b)^k / (a+1)_k` shared by `A` and `A*`.
struct APrefactors<'a> {
    a: &'a MultiSeries,
    trunc: &'a Truncation,
    s_pow: MultiSeries,
    sigma: MultiSeries,
    sigma_inv: Option<MultiSeries>,
    cache: HashMap<i64, MultiSeries>,
}

impl<'a> APrefactors<'a> {
    fn new(a: &'a MultiSeries, b: &'a MultiSeries, trunc: &'a Truncation) -> Result<Self> {
        let n = trunc.x_order().max(b.terms_needed());
        let log_s = s_series("x", n).compose(b)?.log()?;
        let s_pow = a.mul(&log_s)?.exp()?;
        Ok(APrefactors {
            a,
            trunc,
            s_pow,
            sigma: sigma_of(b, trunc)?,
            sigma_inv: None,
            cache: HashMap::new(),
        })
    }

    fn get(&mut self, k: i64) -> Result<MultiSeries> {
        if let Some(v) = self.cache.get(&k) {
            return Ok(v.clone());
        }
        let sig_pow = if k >= 0 {
            self.sigma.pow(k)?
        } else {
            if self.sigma_inv.is_none() {
                self.sigma_inv = Some(self.sigma.inverse()?);
            }
            self.sigma_inv.as_ref().unwrap().pow(-k)?
        };
        let n = self.trunc.x_order().max(self.a.terms_needed());
        let poch = inverse_pochhammer(k, n)?.compose(self.a)?;
        let v = self.s_pow.mul(&sig_pow)?.mul(&poch)?;
        self.cache.insert(k, v.clone());
        Ok(v)
    }
}

/// The coefficients of `ℰ_r(z) v_λ`, as `(λ', series)`.
fn cal_e_terms(
    r: i64,
    z: &MultiSeries,
    lambda: &Partition,
    trunc: &Truncation,
    exp_cache: &mut HashMap<i64, MultiSeries>,
    inv_sigma: &mut Option<MultiSeries>,
) -> Result<Vec<(Partition, MultiSeries)>> {
    let mut exp_twice = |t: i64| -> Result<MultiSeries> {
        if let Some(v) = exp_cache.get(&t) {
            return Ok(v.clone());
        }
        let v = exp_of(z, &rat(t, 2), trunc)?;
        exp_cache.insert(t, v.clone());
        Ok(v)
    };
    let mut out = Vec::new();
    if r != 0 {
        for (m, sign, target) in shift_moves(lambda, r) {
            // k − r/2 with k = m + ½
            let e = exp_twice(2 * m + 1 - r)?;
            out.push((target, e.scale(&int(sign))));
        }
    } else {
        if inv_sigma.is_none() {
            *inv_sigma = Some(sigma_of(z, trunc)?.inverse()?);
        }
        let mut acc = inv_sigma.clone().unwrap();
        for (m, sign) in diagonal_terms(lambda) {
            acc = acc.add(&exp_twice(2 * m + 1)?.scale(&int(sign)))?;
        }
        out.push((lambda.clone(), acc));
    }
    Ok(out)
}

fn check_vars(state: &FockState, s: &MultiSeries, what: &str) -> Result<()> {
    if s.vars() != state.vars() {
        return Err(Error::InvalidArgument(format!(
            "{what} has variables {:?}, state has {:?}",
            s.vars(),
            state.vars()
        )));
    }
    Ok(())
}

fn apply_alpha(r: i64, state: &FockState) -> Result<FockState> {
    if r == 0 {
        return Err(Error::InvalidArgument(
            "α_0 is not an operator word atom".into(),
        ));
    }
    let mut out = FockState::zero(&state.vars);
    for (lambda, c) in &state.terms {
        for (_, sign, target) in shift_moves(lambda, r) {
            out.accumulate(target, c.scale(&int(sign)))?;
        }
    }
    Ok(out)
}

fn require_cap(cap: Option<u32>, what: &str) -> Result<u32> {
    cap.ok_or_else(|| {
        Error::EnergyCap(format!(
            "{what} raises energy without bound; nothing to its left limits the energy"
        ))
    })
}

/// Applies one atom to a state, dropping components above `cap` (if any).
pub fn apply_atom(
    atom: &OperatorAtom,
    state: &FockState,
    cap: Option<u32>,
    trunc: &Truncation,
) -> Result<FockState> {
    let out = match atom {
        OperatorAtom::Alpha(r) => apply_alpha(*r, state)?,
        OperatorAtom::ExpAlpha(r) => {
            if r.abs() != 1 {
                return Err(Error::InvalidArgument(format!(
                    "e^(α_{r}) is only supported for r = ±1"
                )));
            }
            if *r < 0 {
                require_cap(cap, "e^(α_-1)")?;
            }
            let mut out = state.clone();
            let mut cur = state.clone();
            for n in 1u64.. {
                cur = apply_alpha(*r, &cur)?.scale(&rat(1, n as i64));
                if let Some(c) = cap {
                    cur = cur.restrict_energy(c);
                }
                if cur.is_exactly_zero() {
                    break;
                }
                out = out.add(&cur)?;
            }
            out
        }
        OperatorAtom::ExpUF2 => {
            let iu = trunc.var_index("u")?;
            let mut unit = vec![0; state.vars.len()];
            unit[iu] = 1;
            let n = trunc.order[iu];
            let mut out = FockState::zero(&state.vars);
            for (lambda, c) in &state.terms {
                let f2 = f2_shifted(lambda);
                let e = exp_linear_series("x", &f2, n).substitute_monomial(
                    &state.vars,
                    &unit,
                    &Rational::one(),
                )?;
                out.accumulate(lambda.clone(), c.mul(&e)?)?;
            }
            out
        }
        OperatorAtom::CalE { r, z } => {
            check_vars(state, z, "ℰ argument")?;
            let mut exp_cache = HashMap::new();
            let mut inv_sigma = None;
            let mut out = FockState::zero(&state.vars);
            for (lambda, c) in &state.terms {
                if let Some(cp) = cap {
                    if lambda.size() as i64 - r > cp as i64 {
                        continue;
                    }
                }
                for (target, e) in
                    cal_e_terms(*r, z, lambda, trunc, &mut exp_cache, &mut inv_sigma)?
                {
                    out.accumulate(target, c.mul(&e)?)?;
                }
            }
            out
        }
        OperatorAtom::A { a, b } | OperatorAtom::AStar { a, b } => {
            check_vars(state, a, "A parameter a")?;
            check_vars(state, b, "A parameter b")?;
            let adjoint = matches!(atom, OperatorAtom::AStar { .. });
            let cap = require_cap(cap, if adjoint { "A*" } else { "A" })?;
            let mut pre = APrefactors::new(a, b, trunc)?;
            let mut exp_cache = HashMap::new();
            let mut inv_sigma = None;
            let mut out = FockState::zero(&state.vars);
            for (lambda, c) in &state.terms {
                let e = lambda.size() as i64;
                // the new energy e' = e + k (A*) or e − k (A) must lie in [0, cap]
                let (lo, hi) = if adjoint {
                    (-e, cap as i64 - e)
                } else {
                    (e - cap as i64, e)
                };
                for k in lo..=hi {
                    let r = if adjoint { -k } else { k };
                    let terms = cal_e_terms(r, b, lambda, trunc, &mut exp_cache, &mut inv_sigma)?;
                    if terms.is_empty() {
                        continue;
                    }
                    let p = pre.get(k)?;
                    let pc = p.mul(c)?;
                    for (target, ser) in terms {
                        out.accumulate(target, pc.mul(&ser)?)?;
                    }
                }
            }
            out
        }
    };
    Ok(match cap {
        Some(c) => out.restrict_energy(c),
        None => out,
    })
}

/// Applies a word (rightmost atom first) to `state`, with caps derived from the energy of the
/// vector the result will be paired with (`None` when the result is used unpaired).
pub fn apply_word(
    word: &[OperatorAtom],
    state: &FockState,
    left_energy: Option<u32>,
    trunc: &Truncation,
) -> Result<FockState> {
    let caps = match left_energy {
        Some(e) => energy_caps(word, e),
        None => vec![None; word.len()],
    };
    let mut cur = state.clone();
    for (atom, cap) in word.iter().zip(caps).rev() {
        cur = apply_atom(atom, &cur, cap, trunc)?;
    }
    Ok(cur)
}

/// `∏_j α_{−η_j} v_∅`, exactly.
pub fn boson_vector<S: AsRef<str>>(vars: &[S], eta: &Partition) -> Result<FockState> {
    let mut cur = FockState::vacuum(vars);
    for &p in eta.parts() {
        cur = apply_alpha(-(p as i64), &cur)?;
    }
    Ok(cur)
}

/// `(∏_j α_{−μ_j} v_∅, word · v_∅)`, or `(v_∅, word · v_∅)` when `left` is `None`.
pub fn correlator(
    word: &[OperatorAtom],
    left: Option<&Partition>,
    trunc: &Truncation,
) -> Result<MultiSeries> {
    let left_vec = match left {
        Some(mu) => boson_vector(&trunc.vars, mu)?,
        None => FockState::vacuum(&trunc.vars),
    };
    let left_energy = left.map(Partition::size).unwrap_or(0);
    let state = apply_word(
        word,
        &FockState::vacuum(&trunc.vars),
        Some(left_energy),
        trunc,
    )?;
    left_vec.pair(&state)
}

/// The diagonal `F_2` eigenvalue read off from the normal-ordered fermion content of `λ`.
pub fn f2_from_fermions(lambda: &Partition) -> Rational {
    diagonal_terms(lambda)
        .into_iter()
        .map(|(m, sign)| {
            let k = HalfInt::above(m).to_rational();
            int(sign) * k.clone() * k / int(2)
        })
        .sum()
}

/// `1/n!` as a rational (used by exponential word expansions in tests and examples).
pub fn inv_factorial(n: u64) -> Rational {
    Rational::new(1.into(), factorial(n))
}
