//! Integer partitions and the class algebra `Z(d)`.
//!
//! Partitions are ordered by size and then reverse-lexicographically, so the
//! partitions of 4 come out as `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`. This
//! order is used everywhere a partition list is materialized (character
//! tables, serialized class sums, CLI output).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qseries::{binomial, factorial, rational_to_string, Rational};

/// A weakly decreasing tuple of positive integers. The empty partition is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from parts in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Partition(format!("zero part in {parts:?}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(d)`; empty for `d = 0`.
    pub fn row(d: u32) -> Self {
        if d == 0 {
            Self::empty()
        } else {
            Partition(vec![d])
        }
    }

    /// `(1^d)`.
    pub fn ones(d: u32) -> Self {
        Partition(vec![1; d as usize])
    }

    /// The simple-branching profile `(2, 1^{d-2})`; requires `d >= 2`.
    pub fn transposition(d: u32) -> Result<Self> {
        if d < 2 {
            return Err(Error::Partition(format!(
                "no transposition class in degree {d}"
            )));
        }
        let mut parts = vec![2];
        parts.extend(std::iter::repeat_n(1, d as usize - 2));
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    pub fn m1(&self) -> usize {
        self.multiplicity(1)
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `|Aut(μ)| = ∏ m_i!`.
    pub fn aut(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .map(|(_, m)| factorial(m as u64))
            .product()
    }

    /// `z(μ) = |Aut(μ)| ∏ μ_j`, the centralizer order of a permutation of cycle type μ.
    pub fn z(&self) -> BigInt {
        self.0
            .iter()
            .fold(self.aut(), |acc, &p| acc * BigInt::from(p))
    }

    pub fn z_factor(&self) -> Rational {
        Rational::from_integer(self.z())
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    /// Product of all hook lengths.
    pub fn hook_product(&self) -> BigInt {
        let conj = self.conjugate();
        let mut acc = BigInt::one();
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.0[j as usize] - i as u32 - 1;
                acc *= BigInt::from(arm + leg + 1);
            }
        }
        acc
    }

    /// Concatenation of parts (the union of two cycle types).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// The partition with all parts equal to 1 removed.
    pub fn without_ones(&self) -> Partition {
        Partition(self.0.iter().copied().filter(|&p| p != 1).collect())
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"(3,1,1)"`, `"()"`, and the exponent shorthand `"(2,1^3)"`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Partition(format!("expected \"(a,b,...)\", got {s:?}")))?;
        let mut parts = Vec::new();
        if !inner.trim().is_empty() {
            for tok in inner.split(',') {
                let tok = tok.trim();
                let (base, exp) = match tok.split_once('^') {
                    Some((b, e)) => (b.trim(), e.trim()),
                    None => (tok, "1"),
                };
                let bad = || Error::Partition(format!("bad part {tok:?} in {s:?}"));
                let base: u32 = base.parse().map_err(|_| bad())?;
                let exp: usize = exp.parse().map_err(|_| bad())?;
                parts.extend(std::iter::repeat_n(base, exp));
            }
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a `;`-separated list of partitions such as `"(3);(2,1);(3)"`. The empty string is the empty list.
pub fn parse_profiles(s: &str) -> Result<Vec<Partition>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(';').map(str::parse).collect()
}

/// All partitions of `d` in canonical (reverse-lexicographic) order.
pub fn enumerate_partitions(d: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    out
}

/// All `μ̃` with `μ = (1^i, μ̃)`, paired with the weight `C(m_1(μ), m_1(μ̃))`.
///
/// Ordered from `μ̃ = μ` down to `μ̃ = μ` with every 1 removed (which is `∅` when
/// `μ = (1^d)`).
pub fn subpartitions_by_removing_ones(mu: &Partition) -> Vec<(Partition, BigInt)> {
    let m1 = mu.m1() as u64;
    let core = mu.without_ones();
    (0..=m1)
        .rev()
        .map(|kept| {
            let mut parts = core.0.clone();
            parts.extend(std::iter::repeat_n(1, kept as usize));
            (Partition(parts), binomial(m1, kept))
        })
        .collect()
}

/// A formal rational combination of partitions of a fixed degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassSum {
    degree: u32,
    terms: BTreeMap<Partition, Rational>,
}

impl ClassSum {
    pub fn zero(degree: u32) -> Self {
        ClassSum {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The single basis element `(μ)`.
    pub fn basis(mu: &Partition) -> Self {
        let mut s = Self::zero(mu.size());
        s.terms.insert(mu.clone(), Rational::one());
        s
    }

    pub fn from_terms(
        degree: u32,
        terms: impl IntoIterator<Item = (Partition, Rational)>,
    ) -> Result<Self> {
        let mut s = Self::zero(degree);
        for (p, c) in terms {
            s.add_term(p, c)?;
        }
        Ok(s)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn add_term(&mut self, mu: Partition, c: Rational) -> Result<()> {
        if mu.size() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree as usize,
                right: mu.size() as usize,
            });
        }
        if c.is_zero() {
            return Ok(());
        }
        let slot = self.terms.entry(mu.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&mu);
        }
        Ok(())
    }

    pub fn coeff(&self, mu: &Partition) -> Rational {
        self.terms.get(mu).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &ClassSum) -> Result<ClassSum> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree as usize,
                right: other.degree as usize,
            });
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ClassSum) -> Result<ClassSum> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> ClassSum {
        let mut out = Self::zero(self.degree);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect();
        }
        out
    }
}

impl Serialize for ClassSum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (p, c) in &self.terms {
            map.serialize_entry(&p.to_string(), &rational_to_string(c))?;
        }
        map.end()
    }
}

impl fmt::Display for ClassSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| format!("{}·{}", rational_to_string(c), p))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{int, rat};
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Partition counts from Euler's pentagonal-number recurrence.
    fn euler_counts(n: usize) -> Vec<u64> {
        let mut c = vec![0i64; n + 1];
        c[0] = 1;
        for m in 1..=n {
            let mut acc = 0i64;
            for k in 1.. {
                let k = k as i64;
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                acc += sign * c[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    acc += sign * c[m - g2];
                }
            }
            c[m] = acc;
        }
        c.into_iter().map(|x| x as u64).collect()
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        let four: Vec<String> = enumerate_partitions(4)
            .iter()
            .map(|x| x.to_string())
            .collect();
        assert_eq!(four, ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
        assert_eq!(enumerate_partitions(10).len(), 42);
        let counts = euler_counts(40);
        for d in 0..=40u32 {
            let parts = enumerate_partitions(d);
            assert_eq!(parts.len() as u64, counts[d as usize], "d = {d}");
            if d <= 12 {
                assert!(parts.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn z_factors() {
        assert_eq!(Partition::ones(5).z(), factorial(5));
        assert_eq!(Partition::row(7).z(), BigInt::from(7));
        assert_eq!(p("(3,1,1)").z(), BigInt::from(6));
        for d in 0..=10 {
            let total: Rational = enumerate_partitions(d)
                .iter()
                .map(|mu| Rational::new(factorial(d as u64), mu.z()))
                .sum();
            assert_eq!(total, Rational::from_integer(factorial(d as u64)));
        }
    }

    #[test]
    fn subpartitions() {
        let got: Vec<(String, BigInt)> = subpartitions_by_removing_ones(&p("(2,1,1)"))
            .into_iter()
            .map(|(q, c)| (q.to_string(), c))
            .collect();
        assert_eq!(
            got,
            vec![
                ("(2,1,1)".to_string(), BigInt::from(1)),
                ("(2,1)".to_string(), BigInt::from(2)),
                ("(2)".to_string(), BigInt::from(1))
            ]
        );
        assert_eq!(
            subpartitions_by_removing_ones(&p("(3)")),
            vec![(p("(3)"), BigInt::from(1))]
        );
        let ones = subpartitions_by_removing_ones(&p("(1,1)"));
        assert_eq!(ones.last().unwrap(), &(Partition::empty(), BigInt::from(1)));
        for d in 1..=8 {
            for mu in enumerate_partitions(d) {
                let total: BigInt = subpartitions_by_removing_ones(&mu)
                    .into_iter()
                    .map(|(_, c)| c)
                    .sum();
                assert_eq!(total, BigInt::from(1u64 << mu.m1()));
            }
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(p("(3, 1,1)").parts(), &[3, 1, 1]);
        assert_eq!(p("(1,3,1)"), p("(3,1,1)"));
        assert_eq!(p("()"), Partition::empty());
        assert_eq!(p("(2,1^3)"), p("(2,1,1,1)"));
        assert!("3,1".parse::<Partition>().is_err());
        assert!("(3,0)".parse::<Partition>().is_err());
        assert!("(a)".parse::<Partition>().is_err());
        assert_eq!(parse_profiles("(3);(3);(3)").unwrap().len(), 3);
        assert!(parse_profiles("").unwrap().is_empty());
    }

    #[test]
    fn class_sums() {
        let two = ClassSum::basis(&p("(2)"));
        let eleven = ClassSum::basis(&p("(1,1)"));
        assert_eq!(two.add(&two).unwrap(), two.scale(&int(2)));
        assert!(two.scale(&int(0)).is_zero());
        assert_eq!(two.scale(&int(0)).degree(), 2);
        assert_eq!(two.add(&eleven).unwrap().sub(&eleven).unwrap(), two);
        assert!(two.add(&ClassSum::basis(&p("(3)"))).is_err());
        let json = serde_json::to_string(&two.add(&eleven.scale(&rat(-1, 2))).unwrap()).unwrap();
        assert_eq!(json, r#"{"(2)":"1","(1,1)":"-1/2"}"#);
    }

    #[test]
    fn hooks_and_conjugates() {
        assert_eq!(p("(2,1)").hook_product(), BigInt::from(3));
        assert_eq!(p("(2,2)").hook_product(), BigInt::from(12));
        assert_eq!(p("(3,1)").conjugate(), p("(2,1,1)"));
    }

    proptest! {
        #[test]
        fn display_parse_roundtrip(parts in proptest::collection::vec(1u32..9, 0..8)) {
            let mu = Partition::new(parts).unwrap();
            prop_assert_eq!(mu.to_string().parse::<Partition>().unwrap(), mu.clone());
            prop_assert_eq!(mu.conjugate().conjugate(), mu.clone());
            prop_assert_eq!(mu.conjugate().size(), mu.size());
        }
    }
}
