//! Exact-arithmetic toolkit for higher-order superintegrable quantum systems.
//!
//! The crate builds rationally extended oscillator potentials and Painlevé-IV
//! exotic potentials, verifies ladder/operator-algebra identities symbolically
//! over big rationals, enumerates algebraic spectra from deformed-oscillator
//! structure functions, and cross-checks everything against an independent
//! finite-difference eigensolver.
//!
//! Modules:
//! - [`exactmath`] — polynomials, rational functions, Gaussian-weighted
//!   functions, Wronskians.
//! - [`diffop`] — symbolic 1D differential operators, commutators, Darboux
//!   chains, polynomial-Heisenberg-algebra checks.
//! - [`potentials`] — the potential families themselves plus Painlevé and
//!   determining-equation residual evaluators.
//! - [`spectral`] — numerical oracle (tridiagonal Sturm-bisection eigensolver,
//!   norms, ladder-generated states).
//! - [`repalg`] — cubic-algebra Casimir coefficients, unirrep enumeration,
//!   degeneracy combinatorics, multiplet tables, report comparison.
//!
//! The crate is `no_std` (alloc required); enable the `std` feature for
//! `std::error::Error` on [`Error`].

#![no_std]

extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod diffop;
mod error;
pub mod exactmath;
pub mod potentials;
pub mod repalg;
pub mod spectral;

pub use error::{Error, Result};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar used throughout.
pub type Rat = BigRational;

/// Shorthand for an integer rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for the rational n/d.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}
