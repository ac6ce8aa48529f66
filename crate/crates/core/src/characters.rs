//! Irreducible characters of symmetric groups via the Murnaghan–Nakayama rule,
//! hook-length dimensions, central characters `f_η(λ)` and the shifted-square
//! eigenvalue `f_2(λ)`.
//!
//! Whole tables are built per degree and kept in a process-wide cache; the CLI
//! layer can pre-populate that cache from disk with [`install_table`].

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};
use crate::qseries::{factorial, int, Rational};

/// Largest degree for which a full table is built (values stay well inside `i64`).
pub const MAX_TABLE_DEGREE: u32 = 20;

/// Character values `χ^λ_μ` of `S_d`, rows `λ` and columns `μ` in canonical partition order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    degree: u32,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    matrix: Vec<Vec<i64>>,
}

impl CharacterTable {
    /// Computes the table of `S_d` from scratch.
    pub fn build(d: u32) -> Result<Self> {
        if d > MAX_TABLE_DEGREE {
            return Err(Error::Limit(format!(
                "character tables are limited to degree {MAX_TABLE_DEGREE}, got {d}"
            )));
        }
        let partitions = enumerate_partitions(d);
        let matrix: Vec<Vec<i64>> = partitions
            .par_iter()
            .map(|lambda| {
                let mut memo = HashMap::new();
                partitions
                    .iter()
                    .map(|mu| mn_character(lambda, mu.parts(), &mut memo))
                    .collect()
            })
            .collect();
        Self::from_matrix(d, partitions, matrix)
    }

    /// Assembles a table from stored data, checking shape and canonical order.
    pub fn from_matrix(d: u32, partitions: Vec<Partition>, matrix: Vec<Vec<i64>>) -> Result<Self> {
        if partitions != enumerate_partitions(d) {
            return Err(Error::InvalidArgument(format!(
                "partition list is not the canonical list for degree {d}"
            )));
        }
        let n = partitions.len();
        if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidArgument(format!(
                "character matrix is not {n}x{n}"
            )));
        }
        let index = partitions
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        Ok(CharacterTable {
            degree: d,
            partitions,
            index,
            matrix,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    fn idx(&self, p: &Partition) -> Result<usize> {
        self.index.get(p).copied().ok_or(Error::DegreeMismatch {
            left: self.degree as usize,
            right: p.size() as usize,
        })
    }

    pub fn chi_int(&self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        Ok(self.matrix[self.idx(lambda)?][self.idx(mu)?])
    }

    pub fn chi(&self, lambda: &Partition, mu: &Partition) -> Result<Rational> {
        Ok(int(self.chi_int(lambda, mu)?))
    }

    /// `dim λ = χ^λ_{(1^d)}`.
    pub fn dim(&self, lambda: &Partition) -> Result<i64> {
        let last = self.partitions.len() - 1;
        Ok(self.matrix[self.idx(lambda)?][last])
    }
}

/// Murnaghan–Nakayama recursion: removes border strips of the largest remaining
/// part of `mu` from `lambda`, using the bead (beta-set) picture for signs.
fn mn_character(
    lambda: &Partition,
    mu: &[u32],
    memo: &mut HashMap<(Partition, Vec<u32>), i64>,
) -> i64 {
    if mu.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.clone(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = mu[0] as i64;
    let l = lambda.len() as i64;
    let beads: Vec<i64> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + l - 1 - i as i64)
        .collect();
    let mut total = 0i64;
    for (i, &b) in beads.iter().enumerate() {
        let target = b - r;
        if target < 0 || beads.contains(&target) {
            continue;
        }
        let between = beads.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beads.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = moved
            .iter()
            .enumerate()
            .map(|(j, &x)| (x - (l - 1 - j as i64)) as u32)
            .filter(|&p| p > 0)
            .collect();
        let smaller = Partition::new(parts).expect("bead moves give partitions");
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_character(&smaller, &mu[1..], memo);
    }
    memo.insert(key, total);
    total
}

fn cache() -> &'static Mutex<HashMap<u32, Arc<CharacterTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CharacterTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The (cached) character table of `S_d`.
pub fn table(d: u32) -> Result<Arc<CharacterTable>> {
    if let Some(t) = cache().lock().expect("table cache poisoned").get(&d) {
        return Ok(t.clone());
    }
    let t = Arc::new(CharacterTable::build(d)?);
    cache()
        .lock()
        .expect("table cache poisoned")
        .entry(d)
        .or_insert(t.clone());
    Ok(t)
}

/// Whether a table for degree `d` is currently held in memory.
pub fn is_cached(d: u32) -> bool {
    cache()
        .lock()
        .expect("table cache poisoned")
        .contains_key(&d)
}

/// Places an externally loaded table in the cache.
pub fn install_table(t: CharacterTable) {
    cache()
        .lock()
        .expect("table cache poisoned")
        .insert(t.degree, Arc::new(t));
}

pub fn clear_tables() {
    cache().lock().expect("table cache poisoned").clear();
}

fn check_sizes(a: &Partition, b: &Partition) -> Result<()> {
    if a.size() != b.size() {
        return Err(Error::DegreeMismatch {
            left: a.size() as usize,
            right: b.size() as usize,
        });
    }
    Ok(())
}

/// `χ^λ_μ`.
pub fn chi(lambda: &Partition, mu: &Partition) -> Result<Rational> {
    check_sizes(lambda, mu)?;
    table(lambda.size())?.chi(lambda, mu)
}

/// `dim λ = |λ|! / ∏ hooks`.
pub fn dim_hook(lambda: &Partition) -> BigInt {
    factorial(lambda.size() as u64) / lambda.hook_product()
}

/// Central character `f_η(λ) = (d!/z(η)) χ^λ_η / dim λ`.
pub fn f_eta(eta: &Partition, lambda: &Partition) -> Result<Rational> {
    check_sizes(eta, lambda)?;
    let d = lambda.size();
    let t = table(d)?;
    central_character(&t, eta, lambda)
}

pub(crate) fn central_character(
    t: &CharacterTable,
    eta: &Partition,
    lambda: &Partition,
) -> Result<Rational> {
    let d = t.degree() as u64;
    let chi = t.chi(lambda, eta)?;
    let dim = t.dim(lambda)?;
    Ok(Rational::new(factorial(d), eta.z()) * chi / int(dim))
}

/// `f_2(λ) = Σ_i [(λ_i − i + ½)² − (−i + ½)²]/2`, the eigenvalue of the cut-and-join operator.
pub fn f2_shifted_int(lambda: &Partition) -> i64 {
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let p = p as i64;
            let i = i as i64 + 1;
            p * (p - 1) / 2 - (i - 1) * p
        })
        .sum()
}

pub fn f2_shifted(lambda: &Partition) -> Rational {
    int(f2_shifted_int(lambda))
}

/// `dim λ` as a rational (convenience for Burnside sums).
pub fn dim_rational(lambda: &Partition) -> Rational {
    Rational::from_integer(dim_hook(lambda))
}
