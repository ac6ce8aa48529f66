//! Hurwitz numbers of target curves of any genus.
//!
//! * [`hurwitz_disconnected`]: the Burnside character sum
//!   `Σ_λ (dim λ/d!)^{2−2h} ∏_i f_{η^i}(λ)`.
//! * [`monodromy_oracle`]: brute-force count of monodromy tuples, the ground
//!   truth every normalization in this crate is checked against.
//! * [`hurwitz_connected`]: connected counts by peeling off the component that
//!   contains a marked sheet.
//! * [`double_hurwitz_exp_series`]: `Σ_λ χ^λ_μ χ^λ_η e^{−u f_2(λ)} / (z(μ) z(η))`,
//!   whose `u^b` coefficient times `(−1)^b b!` is `Hur^{P¹}(μ, η, (2)^b)`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::characters::{central_character, f2_shifted, table};
use crate::error::{Error, Result};
use crate::partitions::{ClassSum, Partition};
use crate::qseries::{exp_linear_series, factorial, MultiSeries, Rational};

/// Default largest degree the monodromy oracle will enumerate.
pub const DEFAULT_ORACLE_MAX_DEGREE: u32 = 5;

/// Target genus, degree and an ordered list of ramification profiles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BranchData {
    pub target_genus: u32,
    pub degree: u32,
    pub profiles: Vec<Partition>,
}

impl BranchData {
    pub fn new(target_genus: u32, degree: u32, profiles: Vec<Partition>) -> Result<Self> {
        if let Some(bad) = profiles.iter().find(|p| p.size() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree as usize,
                right: bad.size() as usize,
            });
        }
        Ok(BranchData {
            target_genus,
            degree,
            profiles,
        })
    }
}

/// Possibly disconnected Hurwitz number via the Burnside formula.
pub fn hurwitz_disconnected(b: &BranchData) -> Result<Rational> {
    let d = b.degree;
    if d == 0 {
        return Ok(Rational::one());
    }
    let t = table(d)?;
    let d_fact = Rational::from_integer(factorial(d as u64));
    let exponent = 2 - 2 * b.target_genus as i64;
    let terms: Vec<Result<Rational>> = t
        .partitions()
        .par_iter()
        .map(|lambda| {
            let ratio = Rational::from_integer(BigInt::from(t.dim(lambda)?)) / &d_fact;
            let mut term = if exponent >= 0 {
                num_traits::pow(ratio, exponent as usize)
            } else {
                num_traits::pow(ratio.recip(), (-exponent) as usize)
            };
            for eta in &b.profiles {
                term *= central_character(&t, eta, lambda)?;
            }
            Ok(term)
        })
        .collect();
    terms.into_iter().sum()
}

/// Multilinear extension of [`hurwitz_disconnected`] to class sums.
pub fn hurwitz_classsum(h: u32, d: u32, args: &[ClassSum]) -> Result<Rational> {
    if let Some(bad) = args.iter().find(|a| a.degree() != d) {
        return Err(Error::DegreeMismatch {
            left: d as usize,
            right: bad.degree() as usize,
        });
    }
    let mut total = Rational::zero();
    let mut stack: Vec<(usize, Vec<Partition>, Rational)> = vec![(0, Vec::new(), Rational::one())];
    while let Some((i, profiles, weight)) = stack.pop() {
        if i == args.len() {
            total += weight * hurwitz_disconnected(&BranchData::new(h, d, profiles)?)?;
            continue;
        }
        for (mu, c) in args[i].terms() {
            let mut next = profiles.clone();
            next.push(mu.clone());
            stack.push((i + 1, next, &weight * c));
        }
    }
    Ok(total)
}

/// All ways to pick a sub-multiset of `p` of total `size`, with its complement.
fn sub_multisets(p: &Partition, size: u32) -> Vec<(Partition, Partition)> {
    let mults = p.multiplicities();
    let mut out = Vec::new();
    fn rec(
        mults: &[(u32, usize)],
        i: usize,
        remaining: u32,
        chosen: &mut Vec<u32>,
        rest: &mut Vec<u32>,
        out: &mut Vec<(Partition, Partition)>,
    ) {
        if i == mults.len() {
            if remaining == 0 {
                out.push((
                    Partition::new(chosen.clone()).expect("positive parts"),
                    Partition::new(rest.clone()).expect("positive parts"),
                ));
            }
            return;
        }
        let (part, m) = mults[i];
        for take in 0..=m {
            let used = part * take as u32;
            if used > remaining {
                break;
            }
            chosen.extend(std::iter::repeat_n(part, take));
            rest.extend(std::iter::repeat_n(part, m - take));
            rec(mults, i + 1, remaining - used, chosen, rest, out);
            chosen.truncate(chosen.len() - take);
            rest.truncate(rest.len() - (m - take));
        }
    }
    rec(&mults, 0, size, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// All compositions of `n` into `k` nonnegative parts.
fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in compositions(n - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All splittings of every profile into a part of size `d1` and its complement,
/// up to reordering of the profiles. Identical profiles are grouped, so each
/// returned splitting carries the number of ordered splittings it stands for.
fn profile_splittings(
    profiles: &[Partition],
    d1: u32,
) -> Vec<(Vec<Partition>, Vec<Partition>, BigInt)> {
    let mut groups: BTreeMap<&Partition, usize> = BTreeMap::new();
    for p in profiles {
        *groups.entry(p).or_insert(0) += 1;
    }
    let mut acc: Vec<(Vec<Partition>, Vec<Partition>, BigInt)> =
        vec![(Vec::new(), Vec::new(), BigInt::one())];
    for (p, count) in groups {
        let subs = sub_multisets(p, d1);
        let mut next = Vec::new();
        for comp in compositions(count, subs.len()) {
            let multinomial = comp
                .iter()
                .fold(factorial(count as u64), |acc, &c| acc / factorial(c as u64));
            for (a, b, w) in &acc {
                let mut a2 = a.clone();
                let mut b2 = b.clone();
                for ((s, c), &n) in subs.iter().zip(&comp) {
                    a2.extend(std::iter::repeat_n(s.clone(), n));
                    b2.extend(std::iter::repeat_n(c.clone(), n));
                }
                next.push((a2, b2, w * &multinomial));
            }
        }
        acc = next;
    }
    for (a, b, _) in &mut acc {
        a.sort();
        b.sort();
    }
    acc
}

/// Connected Hurwitz number.
///
/// With labelled sheets, the component through sheet 1 has some degree `d₁`
/// and the remaining sheets form an arbitrary cover, so
/// `H•(d, η) = Σ_{d₁} (d₁/d) Σ_ν H°(d₁, ν) H•(d−d₁, η−ν)` where each `ν^i` is a
/// sub-multiset of `η^i` of size `d₁`. The `d₁ = d` term is the connected count.
pub fn hurwitz_connected(b: &BranchData) -> Result<Rational> {
    let mut memo = HashMap::new();
    connected_rec(b.target_genus, b.degree, &b.profiles, &mut memo)
}

fn connected_rec(
    h: u32,
    d: u32,
    profiles: &[Partition],
    memo: &mut HashMap<(u32, Vec<Partition>), Rational>,
) -> Result<Rational> {
    if d == 0 {
        return Ok(Rational::zero());
    }
    let mut sorted = profiles.to_vec();
    sorted.sort();
    let key = (d, sorted);
    if let Some(v) = memo.get(&key) {
        return Ok(v.clone());
    }
    let mut value = hurwitz_disconnected(&BranchData::new(h, d, profiles.to_vec())?)?;
    for d1 in 1..d {
        let weight = Rational::new(BigInt::from(d1), BigInt::from(d));
        for (nu, rest, count) in profile_splittings(profiles, d1) {
            let conn = connected_rec(h, d1, &nu, memo)?;
            if conn.is_zero() {
                continue;
            }
            let disc = hurwitz_disconnected(&BranchData::new(h, d - d1, rest)?)?;
            value -= &weight * Rational::from_integer(count) * conn * disc;
        }
    }
    memo.insert(key, value.clone());
    Ok(value)
}

/// `Σ_λ χ^λ_μ χ^λ_η e^{−u f_2(λ)} / (z(μ) z(η))` in the variable `u`, known below `u^u_order`.
///
/// The `1/(z(μ) z(η))` normalization makes the `u^b` coefficient equal to
/// `(−1)^b/b! · Hur^{P¹}(μ, η, (2)^b)` (checked against the monodromy oracle).
pub fn double_hurwitz_exp_series(
    mu: &Partition,
    eta: &Partition,
    u_order: i64,
) -> Result<MultiSeries> {
    if mu.size() != eta.size() {
        return Err(Error::DegreeMismatch {
            left: mu.size() as usize,
            right: eta.size() as usize,
        });
    }
    let d = mu.size();
    let vars = ["u"];
    let mut acc = MultiSeries::zero(&vars).truncated(&[u_order]);
    let t = table(d)?;
    let norm = Rational::new(BigInt::one(), mu.z() * eta.z());
    for lambda in t.partitions() {
        let c = Rational::from_integer(BigInt::from(
            t.chi_int(lambda, mu)? * t.chi_int(lambda, eta)?,
        ));
        if c.is_zero() {
            continue;
        }
        let e = exp_linear_series("u", &-f2_shifted(lambda), u_order);
        acc = acc.add(&e.scale(&(c * &norm)))?;
    }
    Ok(acc)
}

/// The symmetric group `S_d` with full multiplication table.
struct SymGroup {
    d: usize,
    perms: Vec<Vec<u8>>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    identity: u32,
}

impl SymGroup {
    fn new(d: usize) -> Self {
        let mut perms = Vec::new();
        let mut cur: Vec<u8> = (0..d as u8).collect();
        loop {
            perms.push(cur.clone());
            // next lexicographic permutation
            let Some(i) = (1..d).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..d).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        let index: HashMap<Vec<u8>, u32> = perms
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i as u32))
            .collect();
        let n = perms.len();
        let mut mul = vec![0u32; n * n];
        let mut inv = vec![0u32; n];
        for (i, p) in perms.iter().enumerate() {
            let mut q = vec![0u8; d];
            for (a, &b) in p.iter().enumerate() {
                q[b as usize] = a as u8;
            }
            inv[i] = index[&q];
            for (j, r) in perms.iter().enumerate() {
                let comp: Vec<u8> = (0..d).map(|x| p[r[x] as usize]).collect();
                mul[i * n + j] = index[&comp];
            }
        }
        SymGroup {
            d,
            perms,
            mul,
            inv,
            identity: 0,
        }
    }

    fn len(&self) -> usize {
        self.perms.len()
    }

    fn m(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.len() + b as usize]
    }

    fn cycle_type(&self, p: u32) -> Partition {
        let perm = &self.perms[p as usize];
        let mut seen = vec![false; self.d];
        let mut parts = Vec::new();
        for s in 0..self.d {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = perm[x] as usize;
                len += 1;
            }
            parts.push(len);
        }
        Partition::new(parts).expect("cycle lengths are positive")
    }

    /// Orbit partition of the group generated by `gens`, as a canonical label code.
    fn orbits(&self, gens: &[u32]) -> u64 {
        let mut parent: Vec<usize> = (0..self.d).collect();
        for &g in gens {
            for (x, &y) in self.perms[g as usize].iter().enumerate() {
                union(&mut parent, x, y as usize);
            }
        }
        encode(&mut parent)
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// Labels blocks by order of first appearance, four bits per point.
fn encode(parent: &mut [usize]) -> u64 {
    let mut labels: Vec<usize> = Vec::new();
    let mut code = 0u64;
    for x in 0..parent.len() {
        let r = find(parent, x);
        let label = match labels.iter().position(|&l| l == r) {
            Some(i) => i,
            None => {
                labels.push(r);
                labels.len() - 1
            }
        };
        code |= (label as u64) << (4 * x);
    }
    code
}

fn join(d: usize, a: u64, b: u64) -> u64 {
    let mut parent: Vec<usize> = (0..d).collect();
    for code in [a, b] {
        let mut first: [Option<usize>; 16] = [None; 16];
        for x in 0..d {
            let l = ((code >> (4 * x)) & 0xf) as usize;
            match first[l] {
                Some(y) => union(&mut parent, x, y),
                None => first[l] = Some(x),
            }
        }
    }
    encode(&mut parent)
}

/// `(1/d!) #{(a_1,b_1,…,a_h,b_h,σ_1,…,σ_n) : ∏[a_i,b_i] ∏σ_j = 1, σ_j ∈ C_{η^j}}`,
/// optionally restricted to tuples generating a transitive subgroup.
pub fn monodromy_oracle(b: &BranchData, transitive_only: bool) -> Result<Rational> {
    monodromy_oracle_bounded(b, transitive_only, DEFAULT_ORACLE_MAX_DEGREE)
}

/// [`monodromy_oracle`] with an explicit degree bound.
///
/// Tuples are counted by dynamic programming over (partial product, orbit
/// partition of the elements so far). Commutator pairs are grouped by
/// `([a,b], orbits of ⟨a,b⟩)` before the sweep.
pub fn monodromy_oracle_bounded(
    b: &BranchData,
    transitive_only: bool,
    max_degree: u32,
) -> Result<Rational> {
    let d = b.degree;
    if d > max_degree {
        return Err(Error::Limit(format!(
            "monodromy enumeration is bounded to degree {max_degree}, got {d}"
        )));
    }
    if d > 15 {
        return Err(Error::Limit("orbit codes support at most 15 points".into()));
    }
    if d == 0 {
        return Ok(if transitive_only {
            Rational::zero()
        } else {
            Rational::one()
        });
    }
    let g = SymGroup::new(d as usize);
    let n = g.len() as u32;
    let discrete = g.orbits(&[]);

    let mut states: HashMap<(u32, u64), u128> = HashMap::new();
    states.insert((g.identity, discrete), 1);

    if b.target_genus > 0 {
        let mut pairs: HashMap<(u32, u64), u128> = HashMap::new();
        for a in 0..n {
            for c in 0..n {
                let comm = g.m(g.m(a, c), g.m(g.inv[a as usize], g.inv[c as usize]));
                *pairs.entry((comm, g.orbits(&[a, c]))).or_default() += 1;
            }
        }
        let pairs: Vec<((u32, u64), u128)> = pairs.into_iter().collect();
        for _ in 0..b.target_genus {
            states = sweep(&g, &states, &pairs);
        }
    }
    for eta in &b.profiles {
        let class: Vec<((u32, u64), u128)> = (0..n)
            .filter(|&p| &g.cycle_type(p) == eta)
            .map(|p| ((p, g.orbits(&[p])), 1))
            .collect();
        states = sweep(&g, &states, &class);
    }
    let one_block = 0u64;
    let count: u128 = states
        .iter()
        .filter(|((p, orbits), _)| *p == g.identity && (!transitive_only || *orbits == one_block))
        .map(|(_, c)| *c)
        .sum();
    Ok(Rational::new(BigInt::from(count), factorial(d as u64)))
}

fn sweep(
    g: &SymGroup,
    states: &HashMap<(u32, u64), u128>,
    factors: &[((u32, u64), u128)],
) -> HashMap<(u32, u64), u128> {
    let mut out: HashMap<(u32, u64), u128> = HashMap::new();
    for (&(p, orb), &c) in states {
        for &((f, forb), fc) in factors {
            let key = (g.m(p, f), join(g.d, orb, forb));
            *out.entry(key).or_default() += c * fc;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{int, rat};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn bd(h: u32, d: u32, profiles: &[&str]) -> BranchData {
        BranchData::new(h, d, profiles.iter().map(|s| p(s)).collect()).unwrap()
    }

    #[test]
    fn burnside_spot_values() {
        assert_eq!(hurwitz_disconnected(&bd(1, 2, &[])).unwrap(), int(2));
        assert_eq!(
            hurwitz_disconnected(&bd(0, 2, &["(2)", "(2)"])).unwrap(),
            rat(1, 2)
        );
        assert_eq!(
            hurwitz_disconnected(&bd(0, 3, &["(3)", "(3)", "(3)"])).unwrap(),
            rat(1, 3)
        );
    }

    #[test]
    fn oracle_spot_values() {
        assert_eq!(
            monodromy_oracle(&bd(0, 2, &["(2)", "(2)"]), false).unwrap(),
            rat(1, 2)
        );
        assert_eq!(monodromy_oracle(&bd(1, 2, &[]), true).unwrap(), rat(3, 2));
        assert_eq!(monodromy_oracle(&bd(0, 1, &[]), false).unwrap(), int(1));
        assert_eq!(
            monodromy_oracle(&bd(0, 3, &["(3)", "(3)", "(3)"]), false).unwrap(),
            rat(1, 3)
        );
        assert!(monodromy_oracle(&bd(0, 6, &[]), false).is_err());
    }

    #[test]
    fn connected_spot_values() {
        assert_eq!(
            hurwitz_connected(&bd(0, 2, &["(2)", "(2)"])).unwrap(),
            rat(1, 2)
        );
        assert_eq!(hurwitz_connected(&bd(1, 2, &[])).unwrap(), rat(3, 2));
        assert_eq!(
            hurwitz_disconnected(&bd(0, 2, &["(1,1)", "(1,1)"])).unwrap(),
            rat(1, 2)
        );
        assert_eq!(
            hurwitz_connected(&bd(0, 2, &["(1,1)", "(1,1)"])).unwrap(),
            int(0)
        );
    }

    #[test]
    fn class_sum_linearity() {
        let two = ClassSum::basis(&p("(2)"));
        let eleven = ClassSum::basis(&p("(1,1)"));
        assert_eq!(
            hurwitz_classsum(1, 2, std::slice::from_ref(&two)).unwrap(),
            int(0)
        );
        assert_eq!(
            hurwitz_classsum(1, 2, &[two.clone(), two.clone()]).unwrap(),
            int(2)
        );
        let sum = two.add(&eleven.scale(&int(3))).unwrap();
        let lhs = hurwitz_classsum(0, 2, &[sum, two.clone()]).unwrap();
        let rhs = hurwitz_classsum(0, 2, &[two.clone(), two.clone()]).unwrap()
            + int(3) * hurwitz_classsum(0, 2, &[eleven, two]).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn identity_insertion() {
        for h in 0..=2 {
            for d in 1..=4 {
                let base = bd(h, d, &[]);
                let mut with = base.clone();
                with.profiles.push(Partition::ones(d));
                assert_eq!(
                    hurwitz_disconnected(&base).unwrap(),
                    hurwitz_disconnected(&with).unwrap()
                );
            }
        }
    }

    #[test]
    fn double_hurwitz_normalization() {
        // μ = η = (2): cosh(u)/2
        let s = double_hurwitz_exp_series(&p("(2)"), &p("(2)"), 6).unwrap();
        let expected = [rat(1, 2), int(0), rat(1, 4), int(0), rat(1, 48), int(0)];
        for (n, e) in expected.iter().enumerate() {
            assert_eq!(&s.coeff(&[n as i64]).unwrap(), e);
        }
        let s = double_hurwitz_exp_series(&p("(1)"), &p("(1)"), 4).unwrap();
        assert_eq!(s.constant_term().unwrap(), int(1));
        assert_eq!(s.num_terms(), 1);
    }

    #[test]
    fn double_hurwitz_matches_explicit_branching() {
        for d in 1..=4u32 {
            let parts = crate::partitions::enumerate_partitions(d);
            for mu in &parts {
                for eta in &parts {
                    let s = double_hurwitz_exp_series(mu, eta, 5).unwrap();
                    for b in 0..5u32 {
                        let mut profiles = vec![mu.clone(), eta.clone()];
                        if d >= 2 {
                            profiles.extend(std::iter::repeat_n(
                                Partition::transposition(d).unwrap(),
                                b as usize,
                            ));
                        } else if b > 0 {
                            assert_eq!(s.coeff(&[b as i64]).unwrap(), int(0));
                            continue;
                        }
                        let hur = hurwitz_disconnected(&BranchData::new(0, d, profiles).unwrap())
                            .unwrap();
                        let sign = if b % 2 == 0 { int(1) } else { int(-1) };
                        let expected = sign * hur / Rational::from_integer(factorial(b as u64));
                        assert_eq!(s.coeff(&[b as i64]).unwrap(), expected);
                    }
                }
            }
        }
    }
}
