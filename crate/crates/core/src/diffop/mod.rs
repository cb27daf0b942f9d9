//! Symbolic 1D differential operators and everything built from them:
//! Leibniz composition, commutators, formal adjoints, Darboux–Crum chains,
//! ladder pairs, and the polynomial-Heisenberg-algebra verification. The
//! complex layer (momentum-convention Z_l coefficients, pair classification)
//! sits on top of the real one.

mod chain;
mod complexop;
mod operator;

pub use chain::{ladder_from_chains, verify_pha, DarbouxChain, LadderPair, PhaReport};
pub use complexop::{
    classify_pair, momentum_polynomial, schrodinger_commutator_coefficients, CWeighted,
    ComplexOperator, Grat, PairKind, PairType,
};
pub use operator::{binomial, DifferentialOperator};
