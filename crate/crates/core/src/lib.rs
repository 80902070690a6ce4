//! Numerical laboratory for weighted composition operators on the Hardy
//! space of the unit disc.
//!
//! The crate models Hardy-space functions by truncated Taylor series
//! ([`series`]), composition symbols by linear fractional maps ([`lft`]),
//! and the operators themselves by their matrices in the monomial basis
//! ([`operators`]). On top of that, [`theory`] constructs the transpose-
//! symmetric operator families, their commutants, eigenvectors, and the
//! residual checks that turn the underlying operator identities into
//! testable numbers.
//!
//! The core is `no_std` (with `alloc`); IO, the command line, and report
//! formats live in the companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod grid;
pub mod lft;
pub mod operators;
pub mod series;
pub mod theory;

pub use error::{Error, Result};
pub use num_complex::Complex64;
