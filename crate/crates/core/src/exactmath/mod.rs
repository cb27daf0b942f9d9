//! Exact symbolic layer: rational-coefficient polynomials, rational
//! functions, and Gaussian-weighted rational functions with their Wronskian
//! calculus. Everything here is arbitrary precision; no floats enter until
//! a caller asks for an `eval_f64`.

mod poly;
mod ratfn;
mod weighted;

pub use poly::{hermite, pseudo_hermite, Polynomial};
pub use ratfn::{rational_sqrt, RationalFunction};
pub use weighted::{log_laplacian_correction, wronskian, WeightedFunction};
