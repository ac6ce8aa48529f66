//! Exact rationals and truncated Laurent series in one or two variables.
//!
//! A [`MultiSeries`] is known exactly on a box of exponents: every stored
//! exponent `e` satisfies `floor <= e < order` componentwise, and every
//! coefficient inside that box is known (absent means zero). Coefficients
//! with some component at or above `order` are unknown, and asking for them
//! is a [`SeriesError::Precision`] error rather than a silent zero.
//!
//! Products keep the box honest: if `a` is known below `oa` with floor `fa`
//! and `b` below `ob` with floor `fb`, the product is known below
//! `min(oa + fb, ob + fa)`. With Laurent floors this is strictly smaller than
//! either operand order.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = BigRational;

/// Order value used for exactly known directions (polynomials).
pub const UNBOUNDED: i64 = i64::MAX / 4;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("variable sets differ: {left:?} vs {right:?}")]
    VariableMismatch {
        left: Vec<String>,
        right: Vec<String>,
    },
    #[error("coefficient at {exponents:?} is beyond the known precision (known below {order:?})")]
    Precision {
        exponents: Vec<i64>,
        order: Vec<i64>,
    },
    #[error("{0}")]
    Domain(String),
}

pub type SeriesResult<T> = Result<T, SeriesError>;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Formats a rational as `p/q`, or `p` when the denominator is one.
pub fn rational_to_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// `serialize_with` helper writing a rational as a `"p/q"` string.
pub fn serialize_rational<S: Serializer>(q: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.serialize_str(&rational_to_string(q))
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

fn add_ord(order: i64, shift: i64) -> i64 {
    if order >= UNBOUNDED {
        UNBOUNDED
    } else {
        (order + shift).min(UNBOUNDED)
    }
}

/// Truncated Laurent series in one or two named variables with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiSeries {
    vars: Vec<String>,
    floor: Vec<i64>,
    order: Vec<i64>,
    coeffs: BTreeMap<Vec<i64>, Rational>,
}

impl MultiSeries {
    fn empty(vars: Vec<String>, floor: Vec<i64>, order: Vec<i64>) -> Self {
        assert!(
            (1..=2).contains(&vars.len()),
            "series support one or two variables"
        );
        MultiSeries {
            vars,
            floor,
            order,
            coeffs: BTreeMap::new(),
        }
    }

    fn owned_vars<S: AsRef<str>>(vars: &[S]) -> Vec<String> {
        vars.iter().map(|v| v.as_ref().to_string()).collect()
    }

    /// The exact zero series.
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        let n = vars.len();
        Self::empty(Self::owned_vars(vars), vec![0; n], vec![UNBOUNDED; n])
    }

    pub fn one<S: AsRef<str>>(vars: &[S]) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant<S: AsRef<str>>(vars: &[S], c: Rational) -> Self {
        let n = vars.len();
        Self::monomial(vars, &vec![0; n], c)
    }

    /// `c * prod var_i^exps_i`, exact. The declared floor is `min(exps, 0)`.
    pub fn monomial<S: AsRef<str>>(vars: &[S], exps: &[i64], c: Rational) -> Self {
        assert_eq!(vars.len(), exps.len());
        let mut s = Self::empty(
            Self::owned_vars(vars),
            exps.iter().map(|&e| e.min(0)).collect(),
            vec![UNBOUNDED; vars.len()],
        );
        if !c.is_zero() {
            s.coeffs.insert(exps.to_vec(), c);
        }
        s
    }

    /// The series consisting of the single variable `name`.
    pub fn var<S: AsRef<str>>(vars: &[S], name: &str) -> SeriesResult<Self> {
        let idx = vars
            .iter()
            .position(|v| v.as_ref() == name)
            .ok_or_else(|| {
                SeriesError::Domain(format!(
                    "variable {name} not in {:?}",
                    Self::owned_vars(vars)
                ))
            })?;
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        Ok(Self::monomial(vars, &exps, Rational::one()))
    }

    /// Builds a series from explicit terms. Terms at or above `order` are dropped;
    /// terms below `floor` are rejected.
    pub fn from_terms<S: AsRef<str>>(
        vars: &[S],
        floor: &[i64],
        order: &[i64],
        terms: impl IntoIterator<Item = (Vec<i64>, Rational)>,
    ) -> SeriesResult<Self> {
        let mut s = Self::empty(Self::owned_vars(vars), floor.to_vec(), order.to_vec());
        for (e, c) in terms {
            if e.len() != s.vars.len() {
                return Err(SeriesError::Domain(format!(
                    "exponent {e:?} has wrong arity"
                )));
            }
            if e.iter().zip(&s.floor).any(|(x, f)| x < f) {
                return Err(SeriesError::Domain(format!(
                    "exponent {e:?} below floor {:?}",
                    s.floor
                )));
            }
            s.push(e, c);
        }
        Ok(s)
    }

    /// Univariate series from a coefficient function on `floor..order`.
    pub fn univariate(var: &str, floor: i64, order: i64, coeff: impl Fn(i64) -> Rational) -> Self {
        let mut s = Self::empty(vec![var.to_string()], vec![floor], vec![order]);
        for n in floor..order {
            s.push(vec![n], coeff(n));
        }
        s
    }

    fn push(&mut self, e: Vec<i64>, c: Rational) {
        if c.is_zero() || !self.in_order(&e) {
            return;
        }
        let entry = self.coeffs.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn in_order(&self, e: &[i64]) -> bool {
        e.iter().zip(&self.order).all(|(x, o)| x < o)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn floor(&self) -> &[i64] {
        &self.floor
    }

    pub fn order(&self) -> &[i64] {
        &self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Rational)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// No stored coefficients. For a truncated series this means zero *to the known precision*.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.order.iter().all(|&o| o >= UNBOUNDED)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Coefficient at `exps`; a precision error if any component is at or beyond the order.
    pub fn coeff(&self, exps: &[i64]) -> SeriesResult<Rational> {
        if exps.len() != self.vars.len() {
            return Err(SeriesError::Domain(format!(
                "exponent {exps:?} has wrong arity"
            )));
        }
        if !self.in_order(exps) {
            return Err(SeriesError::Precision {
                exponents: exps.to_vec(),
                order: self.order.clone(),
            });
        }
        Ok(self
            .coeffs
            .get(exps)
            .cloned()
            .unwrap_or_else(Rational::zero))
    }

    /// Constant coefficient, which must be inside the known range.
    pub fn constant_term(&self) -> SeriesResult<Rational> {
        self.coeff(&vec![0; self.vars.len()])
    }

    /// Lowers the order to at most `order` componentwise.
    pub fn truncated(&self, order: &[i64]) -> Self {
        let mut s = self.clone();
        s.truncate_in_place(order);
        s
    }

    fn truncate_in_place(&mut self, order: &[i64]) {
        for (o, &n) in self.order.iter_mut().zip(order) {
            *o = (*o).min(n);
        }
        let ord = self.order.clone();
        self.coeffs
            .retain(|e, _| e.iter().zip(&ord).all(|(x, o)| x < o));
    }

    /// Replaces the declared floor with a lower one (always sound).
    pub fn with_floor_at_most(&self, floor: &[i64]) -> Self {
        let mut s = self.clone();
        for (f, &n) in s.floor.iter_mut().zip(floor) {
            *f = (*f).min(n);
        }
        s
    }

    fn check_vars(&self, other: &Self) -> SeriesResult<()> {
        if self.vars != other.vars {
            return Err(SeriesError::VariableMismatch {
                left: self.vars.clone(),
                right: other.vars.clone(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> SeriesResult<Self> {
        self.check_vars(other)?;
        let floor = self
            .floor
            .iter()
            .zip(&other.floor)
            .map(|(a, b)| *a.min(b))
            .collect();
        let order = self
            .order
            .iter()
            .zip(&other.order)
            .map(|(a, b)| *a.min(b))
            .collect();
        let mut out = Self::empty(self.vars.clone(), floor, order);
        for (e, c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            out.push(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> SeriesResult<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::empty(self.vars.clone(), self.floor.clone(), self.order.clone());
        if !c.is_zero() {
            for (e, v) in &self.coeffs {
                out.coeffs.insert(e.clone(), v * c);
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> SeriesResult<Self> {
        self.check_vars(other)?;
        let n = self.vars.len();
        let floor: Vec<i64> = (0..n).map(|i| self.floor[i] + other.floor[i]).collect();
        let order: Vec<i64> = (0..n)
            .map(|i| {
                add_ord(self.order[i], other.floor[i]).min(add_ord(other.order[i], self.floor[i]))
            })
            .collect();
        let mut out = Self::empty(self.vars.clone(), floor, order);
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                if out.in_order(&e) {
                    out.push(e, ca * cb);
                }
            }
        }
        Ok(out)
    }

    /// Multiplication by an exact monomial `prod var^exps`.
    pub fn shift(&self, exps: &[i64]) -> Self {
        let floor = self.floor.iter().zip(exps).map(|(f, e)| f + e).collect();
        let order = self
            .order
            .iter()
            .zip(exps)
            .map(|(o, e)| add_ord(*o, *e))
            .collect();
        let mut out = Self::empty(self.vars.clone(), floor, order);
        for (e, c) in &self.coeffs {
            out.coeffs
                .insert(e.iter().zip(exps).map(|(x, y)| x + y).collect(), c.clone());
        }
        out
    }

    pub fn pow(&self, n: i64) -> SeriesResult<Self> {
        if n < 0 {
            return self.inverse()?.pow(-n);
        }
        let mut acc = Self::one(&self.vars);
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Checks that powers of `self` eventually leave the known box, so that
    /// Taylor compositions terminate. Requires nonnegative floors and no constant term.
    fn check_nilpotent(&self, what: &str) -> SeriesResult<()> {
        if self.floor.iter().any(|&f| f < 0) {
            return Err(SeriesError::Domain(format!(
                "{what} requires a power series argument, got floor {:?}",
                self.floor
            )));
        }
        for e in self.coeffs.keys() {
            let finite_degree: i64 = e
                .iter()
                .zip(&self.order)
                .filter(|(_, o)| **o < UNBOUNDED)
                .map(|(x, _)| *x)
                .sum();
            if e.iter().all(|&x| x == 0) {
                return Err(SeriesError::Domain(format!(
                    "{what} requires zero constant term"
                )));
            }
            if finite_degree < 1 {
                return Err(SeriesError::Domain(format!(
                    "{what} needs a finite truncation order in the variables of term {e:?}"
                )));
            }
        }
        Ok(())
    }

    /// Sum of `coeff(n) * self^n` for `n >= 0` until the powers vanish within precision.
    fn taylor(&self, what: &str, coeff: impl Fn(u64) -> Rational) -> SeriesResult<Self> {
        self.check_nilpotent(what)?;
        let mut result = Self::constant(&self.vars, coeff(0)).truncated(&self.order);
        let mut power = Self::one(&self.vars);
        for n in 1u64.. {
            power = power.mul(self)?;
            if power.is_zero() {
                // keep the precision bound contributed by the vanished tail
                result.truncate_in_place(&power.order.clone());
                break;
            }
            let c = coeff(n);
            result = result.add(&power.scale(&c))?;
        }
        let floor = vec![0; self.vars.len()];
        result.floor = floor;
        Ok(result)
    }

    /// `exp(self)`; requires a zero constant term.
    pub fn exp(&self) -> SeriesResult<Self> {
        self.taylor("exp", |n| {
            Rational::from_integer(BigInt::one()) / Rational::from_integer(factorial(n))
        })
    }

    /// `log(self)`; requires constant term 1 and a power series.
    pub fn log(&self) -> SeriesResult<Self> {
        if self.floor.iter().any(|&f| f < 0) {
            return Err(SeriesError::Domain("log requires a power series".into()));
        }
        let c0 = self.constant_term()?;
        if !c0.is_one() {
            return Err(SeriesError::Domain(format!(
                "log requires constant term 1, got {c0}"
            )));
        }
        let b = self.sub(&Self::one(&self.vars))?;
        let mut out = b.taylor("log", |n| {
            if n == 0 {
                Rational::zero()
            } else {
                let s = if n % 2 == 1 { 1 } else { -1 };
                rat(s, n as i64)
            }
        })?;
        out.floor = vec![0; self.vars.len()];
        Ok(out)
    }

    /// Multiplicative inverse of `monomial * unit`.
    pub fn inverse(&self) -> SeriesResult<Self> {
        if self.is_zero() {
            return Err(SeriesError::Domain(
                "cannot invert a series that vanishes to known precision".into(),
            ));
        }
        let n = self.vars.len();
        let lead: Vec<i64> = (0..n)
            .map(|i| self.coeffs.keys().map(|e| e[i]).min().unwrap())
            .collect();
        if !self.coeffs.contains_key(&lead) {
            return Err(SeriesError::Domain(format!(
                "series is not a monomial times a unit (no term at {lead:?})"
            )));
        }
        let tight = self.is_exact() || n == 1 || self.floor == lead;
        if !tight {
            return Err(SeriesError::Domain(format!(
                "leading monomial {lead:?} is above the declared floor {:?}",
                self.floor
            )));
        }
        let neg_lead: Vec<i64> = lead.iter().map(|x| -x).collect();
        let mut unit = self.shift(&neg_lead);
        unit.floor = vec![0; n];
        let c0 = unit.coeffs[&vec![0; n]].clone();
        let inv_c0 = c0.recip();
        let b = unit.scale(&inv_c0).sub(&Self::one(&self.vars))?;
        if b.is_zero() {
            let mut r = Self::constant(&self.vars, inv_c0).truncated(&b.order);
            r = r.shift(&neg_lead);
            return Ok(r);
        }
        if unit.is_exact() {
            return Err(SeriesError::Domain(
                "inverse of an exact non-monomial series needs a truncation order".into(),
            ));
        }
        let inv_unit = b
            .taylor("inverse", |k| {
                if k % 2 == 0 {
                    Rational::one()
                } else {
                    -Rational::one()
                }
            })?
            .scale(&inv_c0);
        Ok(inv_unit.shift(&neg_lead))
    }

    pub fn div(&self, other: &Self) -> SeriesResult<Self> {
        self.mul(&other.inverse()?)
    }

    /// Embeds the series into a variable set containing its own variables.
    pub fn embed<S: AsRef<str>>(&self, target: &[S]) -> SeriesResult<Self> {
        let target = Self::owned_vars(target);
        let map: Vec<usize> =
            self.vars
                .iter()
                .map(|v| {
                    target.iter().position(|t| t == v).ok_or_else(|| {
                        SeriesError::VariableMismatch {
                            left: self.vars.clone(),
                            right: target.clone(),
                        }
                    })
                })
                .collect::<Result<_, _>>()?;
        let n = target.len();
        let mut floor = vec![0; n];
        let mut order = vec![UNBOUNDED; n];
        for (i, &j) in map.iter().enumerate() {
            floor[j] = self.floor[i];
            order[j] = self.order[i];
        }
        let mut out = Self::empty(target, floor, order);
        for (e, c) in &self.coeffs {
            let mut t = vec![0; n];
            for (i, &j) in map.iter().enumerate() {
                t[j] = e[i];
            }
            out.coeffs.insert(t, c.clone());
        }
        Ok(out)
    }

    /// For a univariate series `f(x)`, returns `f(scale * prod target^exps)`.
    pub fn substitute_monomial<S: AsRef<str>>(
        &self,
        target: &[S],
        exps: &[i64],
        scale: &Rational,
    ) -> SeriesResult<Self> {
        if self.vars.len() != 1 {
            return Err(SeriesError::Domain(
                "substitution needs a univariate series".into(),
            ));
        }
        if exps.iter().any(|&e| e < 0) || exps.iter().all(|&e| e == 0) {
            return Err(SeriesError::Domain(format!(
                "bad substitution exponents {exps:?}"
            )));
        }
        if scale.is_zero() {
            return Err(SeriesError::Domain(
                "substitution scale must be nonzero".into(),
            ));
        }
        let f = self.floor[0];
        let o = self.order[0];
        let floor: Vec<i64> = exps.iter().map(|&e| f * e).collect();
        let order: Vec<i64> = exps
            .iter()
            .map(|&e| {
                if e == 0 || o >= UNBOUNDED {
                    UNBOUNDED
                } else {
                    o * e
                }
            })
            .collect();
        let mut out = Self::empty(Self::owned_vars(target), floor, order);
        for (e, c) in &self.coeffs {
            let k = e[0];
            let factor = if k >= 0 {
                num_traits::pow(scale.clone(), k as usize)
            } else {
                num_traits::pow(scale.recip(), (-k) as usize)
            };
            let t: Vec<i64> = exps.iter().map(|&x| x * k).collect();
            out.push(t, c * factor);
        }
        Ok(out)
    }

    /// For a univariate series `x -> c * x`.
    pub fn rescale(&self, c: &Rational) -> SeriesResult<Self> {
        let v = self.vars.clone();
        self.substitute_monomial(&v, &[1], c)
    }

    /// If `self` is an exact single term, returns `(coefficient, exponents)`.
    pub fn as_monomial(&self) -> Option<(&Rational, &[i64])> {
        if self.is_exact() && self.coeffs.len() == 1 {
            let (e, c) = self.coeffs.iter().next().unwrap();
            Some((c, e.as_slice()))
        } else {
            None
        }
    }

    /// Composition `f(z)` of a univariate series `f` with a series `z` of positive valuation.
    ///
    /// Monomial arguments are substituted directly; for other arguments `f` must be a
    /// power series known to enough terms to cover the known box of `z`.
    pub fn compose(&self, z: &Self) -> SeriesResult<Self> {
        if self.vars.len() != 1 {
            return Err(SeriesError::Domain(
                "composition needs a univariate outer series".into(),
            ));
        }
        if let Some((c, e)) = z.as_monomial() {
            return self.substitute_monomial(&z.vars, e, c);
        }
        if self.floor[0] < 0 {
            return Err(SeriesError::Domain(
                "Laurent outer series only compose with monomials".into(),
            ));
        }
        z.check_nilpotent("composition")?;
        let needed = z.terms_needed();
        if self.order[0] < needed {
            return Err(SeriesError::Precision {
                exponents: vec![needed - 1],
                order: self.order.clone(),
            });
        }
        let outer = self;
        z.taylor("composition", |n| {
            outer
                .coeffs
                .get(&vec![n as i64])
                .cloned()
                .unwrap_or_else(Rational::zero)
        })
    }

    /// Number of outer Taylor terms needed so that `self^n` leaves the known box.
    pub fn terms_needed(&self) -> i64 {
        let delta = self
            .coeffs
            .keys()
            .map(|e| {
                e.iter()
                    .zip(&self.order)
                    .filter(|(_, o)| **o < UNBOUNDED)
                    .map(|(x, _)| *x)
                    .sum::<i64>()
            })
            .min()
            .unwrap_or(1)
            .max(1);
        let span: i64 = self
            .order
            .iter()
            .filter(|o| **o < UNBOUNDED)
            .map(|o| (o - 1).max(0))
            .sum();
        span / delta + 1
    }

    /// Substitutes `x -> -x` in every variable of the given index.
    pub fn negate_var(&self, idx: usize) -> Self {
        let mut out = self.clone();
        out.coeffs = self
            .coeffs
            .iter()
            .map(|(e, c)| {
                let c = if e[idx].rem_euclid(2) == 1 {
                    -c.clone()
                } else {
                    c.clone()
                };
                (e.clone(), c)
            })
            .collect();
        out
    }
}

impl fmt::Display for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            let sign = if c.is_negative() {
                " - "
            } else if i > 0 {
                " + "
            } else {
                ""
            };
            let mag = c.abs();
            write!(f, "{sign}")?;
            let mono: Vec<String> = e
                .iter()
                .zip(&self.vars)
                .filter(|(x, _)| **x != 0)
                .map(|(x, v)| {
                    if *x == 1 {
                        v.clone()
                    } else {
                        format!("{v}^{x}")
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", rational_to_string(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", rational_to_string(&mag), mono.join("*"))?;
            }
        }
        let known: Vec<String> = self
            .order
            .iter()
            .zip(&self.vars)
            .filter(|(o, _)| **o < UNBOUNDED)
            .map(|(o, v)| format!("{v}^{o}"))
            .collect();
        if !known.is_empty() {
            write!(f, " + O({})", known.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermRecord {
    exponents: Vec<i64>,
    value: String,
}

impl Serialize for MultiSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let order: Vec<Option<i64>> = self
            .order
            .iter()
            .map(|&o| if o >= UNBOUNDED { None } else { Some(o) })
            .collect();
        let terms: Vec<TermRecord> = self
            .coeffs
            .iter()
            .map(|(e, c)| TermRecord {
                exponents: e.clone(),
                value: rational_to_string(c),
            })
            .collect();
        let mut st = serializer.serialize_struct("MultiSeries", 4)?;
        st.serialize_field("vars", &self.vars)?;
        st.serialize_field("floor", &self.floor)?;
        st.serialize_field("order", &order)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// `ς(x) = e^{x/2} - e^{-x/2}`, known below `x^order`.
pub fn sigma_series(var: &str, order: i64) -> MultiSeries {
    MultiSeries::univariate(var, 1, order.max(1), |n| {
        if n % 2 == 1 {
            let den = BigInt::from(2).pow((n - 1) as u32) * factorial(n as u64);
            Rational::new(BigInt::one(), den)
        } else {
            Rational::zero()
        }
    })
}

/// `S(x) = ς(x)/x`, known below `x^order`.
pub fn s_series(var: &str, order: i64) -> MultiSeries {
    MultiSeries::univariate(var, 0, order.max(0), |n| {
        if n % 2 == 0 {
            let den = BigInt::from(2).pow(n as u32) * factorial(n as u64 + 1);
            Rational::new(BigInt::one(), den)
        } else {
            Rational::zero()
        }
    })
}

/// `exp(c x)`, known below `x^order`.
pub fn exp_linear_series(var: &str, c: &Rational, order: i64) -> MultiSeries {
    MultiSeries::univariate(var, 0, order.max(0), |n| {
        num_traits::pow(c.clone(), n as usize) / Rational::from_integer(factorial(n as u64))
    })
}

/// The Pochhammer symbol `(w+1)_k` as a series in `var`, known below `var^order`.
///
/// For `k >= 0` this is the polynomial `(w+1)...(w+k)`. For `k < 0` it is
/// `1/(w(w-1)...(w+k+1))`, whose `1/w` factor is a Laurent term and whose other
/// factors `1/(w-m)` expand as `-(1/m) sum_j (w/m)^j`.
pub fn pochhammer_series(k: i64, var: &str, order: i64) -> MultiSeries {
    let vars = [var];
    let w = MultiSeries::var(&vars, var).expect("own variable");
    if k >= 0 {
        let mut acc = MultiSeries::one(&vars);
        for i in 1..=k {
            let factor = w
                .add(&MultiSeries::constant(&vars, int(i)))
                .expect("same vars");
            acc = acc.mul(&factor).expect("same vars");
        }
        return acc.truncated(&[order]);
    }
    // 1/w times prod_{m=1}^{|k|-1} 1/(w - m); generate one order higher to absorb the 1/w shift.
    let inner = order + 1;
    let mut acc = MultiSeries::one(&vars).truncated(&[inner]);
    for m in 1..(-k) {
        let geometric = MultiSeries::univariate(var, 0, inner.max(0), |j| {
            -Rational::new(BigInt::one(), BigInt::from(m).pow(j as u32 + 1))
        });
        acc = acc.mul(&geometric).expect("same vars");
    }
    acc.shift(&[-1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(order: i64) -> MultiSeries {
        MultiSeries::var(&["x"], "x").unwrap().truncated(&[order])
    }

    fn c1(s: &MultiSeries, n: i64) -> Rational {
        s.coeff(&[n]).unwrap()
    }

    #[test]
    fn polynomial_product() {
        let one = MultiSeries::one(&["x"]);
        let xs = MultiSeries::var(&["x"], "x").unwrap();
        let p = one.add(&xs).unwrap().mul(&one.sub(&xs).unwrap()).unwrap();
        assert_eq!(c1(&p, 0), int(1));
        assert_eq!(c1(&p, 1), int(0));
        assert_eq!(c1(&p, 2), int(-1));
        assert_eq!(p.num_terms(), 2);
        assert!(p.is_exact());
    }

    #[test]
    fn laurent_unit() {
        let inv = MultiSeries::monomial(&["x"], &[-1], int(1));
        let xs = MultiSeries::var(&["x"], "x").unwrap();
        let p = inv.mul(&xs).unwrap();
        assert_eq!(p.floor(), &[-1]);
        assert_eq!(c1(&p, 0), int(1));
        assert_eq!(p.num_terms(), 1);
    }

    #[test]
    fn sigma_and_s_expansions() {
        let sig = sigma_series("x", 6);
        assert_eq!(c1(&sig, 1), int(1));
        assert_eq!(c1(&sig, 3), rat(1, 24));
        assert_eq!(c1(&sig, 5), rat(1, 1920));
        assert_eq!(sig.num_terms(), 3);
        let s = s_series("x", 5);
        assert_eq!(c1(&s, 0), int(1));
        assert_eq!(c1(&s, 2), rat(1, 24));
        assert_eq!(c1(&s, 4), rat(1, 1920));
        assert!(s.coeff(&[5]).is_err());
    }

    #[test]
    fn sigma_squared() {
        // square the expansion x + x^3/24 + x^5/1920 by hand
        let sig = sigma_series("x", 8);
        let sq = sig.mul(&sig).unwrap();
        assert_eq!(c1(&sq, 2), int(1));
        assert_eq!(c1(&sq, 4), rat(1, 12));
        assert_eq!(c1(&sq, 6), rat(2, 1920) + rat(1, 576));
        assert_eq!(c1(&sq, 6), rat(1, 360));
    }

    #[test]
    fn exp_and_log() {
        let e = MultiSeries::zero(&["x"]).truncated(&[4]).exp().unwrap();
        assert_eq!(c1(&e, 0), int(1));
        assert_eq!(e.num_terms(), 1);
        let e = x(4).exp().unwrap();
        assert_eq!(
            (0..4).map(|n| c1(&e, n)).collect::<Vec<_>>(),
            vec![int(1), int(1), rat(1, 2), rat(1, 6)]
        );
        assert!(e.coeff(&[4]).is_err());
        let l = s_series("x", 5).log().unwrap();
        assert_eq!(c1(&l, 0), int(0));
        assert_eq!(c1(&l, 2), rat(1, 24));
        assert_eq!(c1(&l, 4), rat(-1, 2880));
    }

    #[test]
    fn exp_log_preconditions() {
        let one_plus = MultiSeries::one(&["x"]).add(&x(5)).unwrap();
        assert!(one_plus.exp().is_err());
        assert!(x(5).log().is_err());
        assert!(MultiSeries::var(&["x"], "x").unwrap().exp().is_err());
    }

    #[test]
    fn inverse_of_sigma_has_simple_pole() {
        let inv = sigma_series("x", 8).inverse().unwrap();
        assert_eq!(inv.floor(), &[-1]);
        assert_eq!(c1(&inv, -1), int(1));
        assert_eq!(c1(&inv, 1), rat(-1, 24));
        assert_eq!(inv.order(), &[6]);
    }

    #[test]
    fn pochhammer() {
        assert_eq!(
            pochhammer_series(0, "w", 5),
            MultiSeries::one(&["w"]).truncated(&[5])
        );
        let p2 = pochhammer_series(2, "w", 5);
        assert_eq!(
            (0..3).map(|n| c1(&p2, n)).collect::<Vec<_>>(),
            vec![int(2), int(3), int(1)]
        );
        let pm1 = pochhammer_series(-1, "w", 5);
        assert_eq!(pm1.floor(), &[-1]);
        assert_eq!(c1(&pm1, -1), int(1));
        assert_eq!(pm1.num_terms(), 1);
        // 1/(w(w-1)) = -1/w - 1 - w - ...
        let pm2 = pochhammer_series(-2, "w", 4);
        for n in -1..4 {
            assert_eq!(c1(&pm2, n), int(-1));
        }
        // (w+1)_{-k} * w(w-1)...(w-k+1) = 1
        let vars = ["w"];
        let w = MultiSeries::var(&vars, "w").unwrap();
        let mut poly = MultiSeries::one(&vars);
        for m in 0..3 {
            poly = poly
                .mul(&w.sub(&MultiSeries::constant(&vars, int(m))).unwrap())
                .unwrap();
        }
        let prod = pochhammer_series(-3, "w", 6).mul(&poly).unwrap();
        assert_eq!(c1(&prod, 0), int(1));
        for n in 1..prod.order()[0] {
            assert_eq!(c1(&prod, n), int(0));
        }
    }

    #[test]
    fn precision_is_reported() {
        let s = s_series("x", 4);
        assert!(matches!(s.coeff(&[4]), Err(SeriesError::Precision { .. })));
        let a = MultiSeries::monomial(&["x"], &[-2], int(1));
        let p = a.mul(&s).unwrap();
        assert_eq!(p.order(), &[2]);
        assert!(p.coeff(&[2]).is_err());
    }

    #[test]
    fn variable_mismatch() {
        let a = MultiSeries::one(&["x"]);
        let b = MultiSeries::one(&["y"]);
        assert!(matches!(
            a.mul(&b),
            Err(SeriesError::VariableMismatch { .. })
        ));
    }

    #[test]
    fn bivariate_substitution() {
        let vars = ["u", "w"];
        let sig = sigma_series("x", 7)
            .substitute_monomial(&vars, &[1, 1], &int(1))
            .unwrap();
        assert_eq!(sig.floor(), &[1, 1]);
        assert_eq!(sig.order(), &[7, 7]);
        assert_eq!(sig.coeff(&[3, 3]).unwrap(), rat(1, 24));
        assert_eq!(sig.coeff(&[3, 2]).unwrap(), int(0));
        let inv = sig.inverse().unwrap();
        assert_eq!(inv.coeff(&[-1, -1]).unwrap(), int(1));
        assert_eq!(inv.coeff(&[1, 1]).unwrap(), rat(-1, 24));
        // compose agrees with direct substitution
        let uw = MultiSeries::monomial(&vars, &[1, 1], int(1));
        assert_eq!(sigma_series("x", 7).compose(&uw).unwrap(), sig);
    }

    #[test]
    fn general_composition() {
        let vars = ["u", "w"];
        let z = MultiSeries::var(&vars, "u")
            .unwrap()
            .add(&MultiSeries::var(&vars, "w").unwrap())
            .unwrap()
            .truncated(&[4, 4]);
        let e = exp_linear_series("x", &int(1), z.terms_needed())
            .compose(&z)
            .unwrap();
        // exp(u + w) = exp(u) exp(w)
        assert_eq!(e.coeff(&[2, 3]).unwrap(), rat(1, 12));
        assert_eq!(e, z.exp().unwrap());
    }

    #[test]
    fn s_is_even_sigma_is_odd() {
        let s = s_series("x", 12);
        let sig = sigma_series("x", 12);
        assert!(s.terms().all(|(e, _)| e[0] % 2 == 0));
        assert!(sig.terms().all(|(e, _)| e[0] % 2 == 1));
        let s_neg = s.negate_var(0);
        assert_eq!(s.mul(&s_neg).unwrap(), s.mul(&s).unwrap());
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rational_to_string(&rat(6, 4)), "3/2");
        assert_eq!(rational_to_string(&rat(-4, 2)), "-2");
        assert_eq!(parse_rational("-3/6"), Some(rat(-1, 2)));
        assert_eq!(parse_rational("7"), Some(int(7)));
        assert_eq!(parse_rational("1/0"), None);
    }

    fn arb_series(vars: &'static [&'static str]) -> impl Strategy<Value = MultiSeries> {
        let n = vars.len();
        proptest::collection::vec(
            (proptest::collection::vec(-1i64..4, n), -5i64..6, 1i64..4),
            0..6,
        )
        .prop_map(move |terms| {
            MultiSeries::from_terms(
                vars,
                &vec![-1; n],
                &vec![4; n],
                terms.into_iter().map(|(e, p, q)| (e, rat(p, q))),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_series(&["u", "w"]), b in arb_series(&["u", "w"]), c in arb_series(&["u", "w"])) {
            let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
            let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
            let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs.truncated(rhs.order()), rhs.truncated(lhs.order()));
        }

        #[test]
        fn exp_log_roundtrip(coeffs in proptest::collection::vec(-4i64..5, 1..7)) {
            let order = coeffs.len() as i64 + 1;
            let a = MultiSeries::univariate("x", 0, order, |n| {
                if n == 0 { int(0) } else { rat(coeffs[(n - 1) as usize], 3) }
            });
            prop_assert_eq!(a.exp().unwrap().log().unwrap(), a.clone());
            let b = MultiSeries::one(&["x"]).add(&a).unwrap();
            prop_assert_eq!(b.log().unwrap().exp().unwrap(), b);
        }
    }
}
