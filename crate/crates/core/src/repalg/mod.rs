//! Representation-theoretic spectrum machinery.
//!
//! The route from operator algebra to spectrum goes through three independent
//! countings that this module makes comparable:
//!
//! - [`algebraic_spectrum`] — finite-dimensional modules of the cubic algebra,
//!   read off deformed-oscillator structure functions ([`unirreps`]);
//! - [`ladder_spectrum`] — states generated by the third-order ladder pair
//!   acting on its zero modes;
//! - [`degeneracy_bruteforce`] / [`degeneracy_formula`] — direct enumeration
//!   of the separable 2D levels, with the multiplet decomposition of
//!   [`multiplet_table`] on top.
//!
//! [`compare_reports`] aligns any two of the resulting [`SpectrumReport`]s and
//! exposes exactly where the countings disagree.

mod cubic;
mod degeneracy;
mod report;
mod unirreps;

pub use cubic::{casimir_coefficients, CasimirCoefficients, CubicAlgebra};
pub use degeneracy::{degeneracy_bruteforce, degeneracy_formula, multiplet_table, q_ko, Multiplet};
pub use report::{
    algebraic_spectrum, compare_reports, ladder_spectrum, DiffReport, Provenance, RowDelta,
    SpectrumReport, SpectrumRow, UnirrepAssignment,
};
pub use unirreps::{
    enumerate_unirreps, Positivity, StatedRange, StructureFunctionFamily, UnirrepRow,
};
