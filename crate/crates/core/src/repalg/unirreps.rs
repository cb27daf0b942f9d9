//! Deformed-oscillator structure functions and unirrep enumeration.

use alloc::vec;
use alloc::vec::Vec;

use crate::exactmath::Polynomial;
use crate::{int, Rat};

/// One family of structure functions
///
/// ```text
/// Φ(x) = 4ħ⁴ω² · x · (p+1−x) · q(x),    E(p) = ħω(p + e₀),
/// ```
///
/// where x = 0, …, p labels the boxes of a (p+1)-dimensional module and q is
/// a p-independent quadratic. The boundary factors x and (p+1−x) implement
/// the lowest- and highest-weight conditions; admissibility of an interior
/// box demands Φ(x) > 0.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureFunctionFamily {
    hbar: Rat,
    omega: Rat,
    quad: Polynomial,
    intercept: Rat,
    stated: StatedRange,
}

/// The p values a family contributes to the algebraic spectrum count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StatedRange {
    All,
    UpTo(u32),
}

impl StatedRange {
    pub fn contains(&self, p: u32) -> bool {
        match self {
            StatedRange::All => true,
            StatedRange::UpTo(max) => p <= *max,
        }
    }
}

/// Interior-positivity policy for [`enumerate_unirreps`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Positivity {
    /// Admissible iff Φ(x) > 0 for every interior box x = 1, …, p.
    Strict,
    /// Admissible iff p lies in the family's stated range, positivity
    /// violations notwithstanding; use to reproduce the doublet counting.
    ReportOnly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct UnirrepRow {
    pub p: u32,
    pub energy: Rat,
    pub dimension: u32,
    pub admissible: bool,
}

impl StructureFunctionFamily {
    fn family(
        hbar: Rat,
        omega: Rat,
        quad: Polynomial,
        intercept: Rat,
        stated: StatedRange,
    ) -> Self {
        StructureFunctionFamily {
            hbar,
            omega,
            quad,
            intercept,
            stated,
        }
    }

    /// q(x) = (x+3)(x+2), E = ħω(p + 8/3): the infinite tower, one module of
    /// every dimension.
    pub fn infinite_tower(hbar: Rat, omega: Rat) -> Self {
        let quad = Polynomial::from_roots(&[int(-3), int(-2)]);
        StructureFunctionFamily::family(hbar, omega, quad, crate::rat(8, 3), StatedRange::All)
    }

    /// q(x) = (x−3)(x−1), E = ħω(p − 1/3): only p = 0 survives, since the
    /// root at x = 1 kills every interior box test from p = 1 on.
    pub fn singlet(hbar: Rat, omega: Rat) -> Self {
        let quad = Polynomial::from_roots(&[int(3), int(1)]);
        StructureFunctionFamily::family(hbar, omega, quad, crate::rat(-1, 3), StatedRange::UpTo(0))
    }

    /// q(x) = (x+1)(x−2), E = ħω(p + 2/3): counted through p = 1 even though
    /// Φ(1; p=1) < 0 — strict positivity and the stated range disagree here,
    /// and [`Positivity`] picks which one wins.
    pub fn doublet(hbar: Rat, omega: Rat) -> Self {
        let quad = Polynomial::from_roots(&[int(-1), int(2)]);
        StructureFunctionFamily::family(hbar, omega, quad, crate::rat(2, 3), StatedRange::UpTo(1))
    }

    /// 4ħ⁴ω².
    fn prefactor(&self) -> Rat {
        let h2 = &self.hbar * &self.hbar;
        &(&(&h2 * &h2) * &(&self.omega * &self.omega)) * &int(4)
    }

    pub fn hbar_omega(&self) -> Rat {
        &self.hbar * &self.omega
    }

    pub fn energy(&self, p: u32) -> Rat {
        &self.hbar_omega() * &(&int(p as i64) + &self.intercept)
    }

    pub fn dimension(&self, p: u32) -> u32 {
        p + 1
    }

    pub fn stated_range(&self) -> StatedRange {
        self.stated
    }

    /// Φ as a polynomial in the box label x, for fixed p.
    pub fn phi_at(&self, p: u32) -> Polynomial {
        let boundary = Polynomial::new(vec![int(p as i64 + 1), int(-1)]);
        (&(&Polynomial::x() * &boundary) * &self.quad).scale(&self.prefactor())
    }

    pub fn phi_value(&self, p: u32, x: &Rat) -> Rat {
        self.phi_at(p).eval(x)
    }

    /// Φ(t(p); p) as a polynomial in p, for a box label given as a polynomial
    /// t in p. The p-dependence enters only through the factor (p+1) − t.
    pub fn phi_along(&self, t: &Polynomial) -> Polynomial {
        let p_plus_one = Polynomial::new(vec![int(1), int(1)]);
        let boundary = &p_plus_one - t;
        (&(t * &boundary) * &self.quad.compose(t)).scale(&self.prefactor())
    }

    /// Lowest- and highest-weight conditions Φ(0; p) = 0 and Φ(p+1; p) = 0,
    /// checked as polynomial identities in p rather than sampled.
    pub fn boundary_identities_hold(&self) -> bool {
        let p_plus_one = Polynomial::new(vec![int(1), int(1)]);
        self.phi_along(&Polynomial::zero()).is_zero() && self.phi_along(&p_plus_one).is_zero()
    }
}

/// Enumerate the modules of one family up to `p_max`, flagging each p as
/// admissible per the chosen positivity policy. Boundary zeros hold for all
/// rows by the polynomial identities of
/// [`StructureFunctionFamily::boundary_identities_hold`].
pub fn enumerate_unirreps(
    fam: &StructureFunctionFamily,
    p_max: u32,
    positivity: Positivity,
) -> Vec<UnirrepRow> {
    debug_assert!(fam.boundary_identities_hold());
    let zero = int(0);
    (0..=p_max)
        .map(|p| {
            let admissible = match positivity {
                Positivity::Strict => (1..=p).all(|x| fam.phi_value(p, &int(x as i64)) > zero),
                Positivity::ReportOnly => fam.stated_range().contains(p),
            };
            UnirrepRow {
                p,
                energy: fam.energy(p),
                dimension: fam.dimension(p),
                admissible,
            }
        })
        .collect()
}
