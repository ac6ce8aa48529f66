//! Exact Hurwitz numbers, symmetric-group characters, infinite-wedge
//! correlators, completed cycles and stationary Gromov–Witten invariants of
//! target curves.
//!
//! Everything is computed in exact rational arithmetic. The modules build on
//! each other in order: [`qseries`] (rationals and truncated series),
//! [`partitions`], [`characters`], [`fock`] (the infinite wedge), [`hurwitz`],
//! [`gwh`] (completed cycles, I-functions, ELSV) and [`cli`].

pub mod characters;
pub mod cli;
pub mod error;
pub mod fock;
pub mod gwh;
pub mod hurwitz;
pub mod partitions;
pub mod qseries;

pub use error::{Error, Result};
pub use partitions::{ClassSum, Partition};
pub use qseries::{MultiSeries, Rational};
