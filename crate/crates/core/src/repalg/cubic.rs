//! The cubic polynomial algebra and its Casimir invariant.

use alloc::vec::Vec;

use crate::exactmath::Polynomial;
use crate::{int, rat, Rat};

/// Structure constants of the cubic algebra
///
/// ```text
/// [A,B] = C
/// [A,C] = α A² + β {A,B} + γ A + δ B + ε
/// [B,C] = μ A³ + ν A² − β B² − α {A,B} + ξ A − γ B + ζ
/// ```
///
/// The B², {A,B} and B coefficients of the second bracket are not free: the
/// Jacobi identity ties them to the first, which is why they do not appear as
/// fields. Every constant is a polynomial in one formal central symbol, so
/// Hamiltonian-dependent structure constants stay exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicAlgebra {
    pub alpha: Polynomial,
    pub beta: Polynomial,
    pub gamma: Polynomial,
    pub delta: Polynomial,
    pub epsilon: Polynomial,
    pub mu: Polynomial,
    pub nu: Polynomial,
    pub xi: Polynomial,
    pub zeta: Polynomial,
}

/// Right-hand side of a bracket relation on the ordered monomials
/// A³, A², A, B², {A,B}, B. Constant terms commute with everything the
/// Jacobi reduction touches and are omitted.
struct Rhs {
    a3: Polynomial,
    a2: Polynomial,
    a1: Polynomial,
    b2: Polynomial,
    ab: Polynomial,
    b1: Polynomial,
}

/// [A, r] on the basis ({C,B}, {A,C}, C). Powers of A drop out, and
/// [A,B²] = {C,B}, [A,{A,B}] = {A,C}, [A,B] = C.
fn commute_a(r: &Rhs) -> [Polynomial; 3] {
    [r.b2.clone(), r.ab.clone(), r.b1.clone()]
}

/// [B, r] on the same basis: [B,{A,B}] = −{C,B}, [B,A²] = −{A,C},
/// [B,A] = −C, and B-monomials drop out. An A³ term would leave the basis,
/// so the caller must not pass one.
fn commute_b(r: &Rhs) -> [Polynomial; 3] {
    debug_assert!(r.a3.is_zero());
    [-&r.ab, -&r.a2, -&r.a1]
}

impl CubicAlgebra {
    /// Constants in the order α, β, γ, δ, ε, μ, ν, ξ, ζ.
    pub fn new(c: [Polynomial; 9]) -> Self {
        let [alpha, beta, gamma, delta, epsilon, mu, nu, xi, zeta] = c;
        CubicAlgebra {
            alpha,
            beta,
            gamma,
            delta,
            epsilon,
            mu,
            nu,
            xi,
            zeta,
        }
    }

    pub fn from_rationals(c: [Rat; 9]) -> Self {
        let p: Vec<Polynomial> = c.into_iter().map(Polynomial::constant).collect();
        CubicAlgebra::new(p.try_into().expect("nine constants"))
    }

    fn ac_rhs(&self) -> Rhs {
        Rhs {
            a3: Polynomial::zero(),
            a2: self.alpha.clone(),
            a1: self.gamma.clone(),
            b2: Polynomial::zero(),
            ab: self.beta.clone(),
            b1: self.delta.clone(),
        }
    }

    fn bc_rhs(&self) -> Rhs {
        Rhs {
            a3: self.mu.clone(),
            a2: self.nu.clone(),
            a1: self.xi.clone(),
            b2: -&self.beta,
            ab: -&self.alpha,
            b1: -&self.gamma,
        }
    }

    /// Components of [A,[B,C]] + [B,[C,A]] + [C,[A,B]] on the basis
    /// ({C,B}, {A,C}, C). The last summand is [C,C] = 0, so the identity
    /// reduces to commuting each generator through the opposite bracket;
    /// the tied coefficients make all three components vanish identically.
    pub fn jacobi_residual(&self) -> [Polynomial; 3] {
        let ag = commute_a(&self.bc_rhs());
        let bf = commute_b(&self.ac_rhs());
        [&ag[0] - &bf[0], &ag[1] - &bf[1], &ag[2] - &bf[2]]
    }
}

/// Exact coefficients of the Casimir invariant
///
/// ```text
/// K = C² − α{A²,B} − β{A,B²} + (αβ−γ){A,B} + (β²−δ)B² + (βγ−2ε)B
///     + (μ/2)A⁴ + (2/3)(ν+μβ)A³ + (−μβ²/6 + βν/3 + δμ/2 + α² + ξ)A²
///     + (−μβδ/6 + δν/3 + αγ + 2ζ)A
/// ```
///
/// on the monomials named by the fields, each a polynomial in the formal
/// central symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CasimirCoefficients {
    pub c_squared: Polynomial,
    pub anti_a2_b: Polynomial,
    pub anti_a_b2: Polynomial,
    pub anti_a_b: Polynomial,
    pub b_squared: Polynomial,
    pub b: Polynomial,
    pub a4: Polynomial,
    pub a3: Polynomial,
    pub a2: Polynomial,
    pub a: Polynomial,
}

pub fn casimir_coefficients(alg: &CubicAlgebra) -> CasimirCoefficients {
    let g = alg;
    let mut a2 = (&(&g.mu * &g.beta) * &g.beta).scale(&rat(-1, 6));
    a2 = &a2 + &(&g.beta * &g.nu).scale(&rat(1, 3));
    a2 = &a2 + &(&g.delta * &g.mu).scale(&rat(1, 2));
    a2 = &a2 + &(&g.alpha * &g.alpha);
    a2 = &a2 + &g.xi;
    let mut a1 = (&(&g.mu * &g.beta) * &g.delta).scale(&rat(-1, 6));
    a1 = &a1 + &(&g.delta * &g.nu).scale(&rat(1, 3));
    a1 = &a1 + &(&g.alpha * &g.gamma);
    a1 = &a1 + &g.zeta.scale(&int(2));
    CasimirCoefficients {
        c_squared: Polynomial::one(),
        anti_a2_b: -&g.alpha,
        anti_a_b2: -&g.beta,
        anti_a_b: &(&g.alpha * &g.beta) - &g.gamma,
        b_squared: &(&g.beta * &g.beta) - &g.delta,
        b: &(&g.beta * &g.gamma) - &g.epsilon.scale(&int(2)),
        a4: g.mu.scale(&rat(1, 2)),
        a3: (&g.nu + &(&g.mu * &g.beta)).scale(&rat(2, 3)),
        a2,
        a: a1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn generic_constants() -> [Rat; 9] {
        [
            int(2),
            int(3),
            int(5),
            int(7),
            int(11),
            int(13),
            int(17),
            int(19),
            int(23),
        ]
    }

    #[test]
    fn all_zero_constants_leave_only_c_squared() {
        let alg = CubicAlgebra::from_rationals([
            int(0),
            int(0),
            int(0),
            int(0),
            int(0),
            int(0),
            int(0),
            int(0),
            int(0),
        ]);
        let k = casimir_coefficients(&alg);
        assert_eq!(k.c_squared, Polynomial::one());
        for p in [
            &k.anti_a2_b,
            &k.anti_a_b2,
            &k.anti_a_b,
            &k.b_squared,
            &k.b,
            &k.a4,
            &k.a3,
            &k.a2,
            &k.a,
        ] {
            assert!(p.is_zero());
        }
    }

    #[test]
    fn vanishing_beta_and_delta() {
        let mut c = generic_constants();
        c[1] = int(0);
        c[3] = int(0);
        let k = casimir_coefficients(&CubicAlgebra::from_rationals(c));
        assert!(k.b_squared.is_zero());
        assert_eq!(k.anti_a_b, Polynomial::constant(int(-5)));
    }

    #[test]
    fn quartic_term_is_half_mu() {
        let mut c = generic_constants();
        c[1] = int(0);
        c[5] = int(6);
        let k = casimir_coefficients(&CubicAlgebra::from_rationals(c));
        assert_eq!(k.a4, Polynomial::constant(int(3)));
    }

    #[test]
    fn jacobi_residual_vanishes() {
        for alg in [
            CubicAlgebra::from_rationals(generic_constants()),
            // Hamiltonian-dependent constants: γ = h², ζ = 3h.
            CubicAlgebra::new([
                Polynomial::constant(rat(1, 2)),
                Polynomial::x(),
                Polynomial::monomial(int(1), 2),
                Polynomial::constant(int(-4)),
                Polynomial::zero(),
                Polynomial::constant(int(9)),
                Polynomial::x(),
                Polynomial::one(),
                Polynomial::monomial(int(3), 1),
            ]),
        ] {
            for component in alg.jacobi_residual() {
                assert!(component.is_zero());
            }
        }
    }

    #[test]
    fn degree_in_each_constant() {
        // Replace one constant at a time by the formal symbol: K must stay
        // quadratic in α and β and linear in the remaining seven.
        for slot in 0..9 {
            let base = generic_constants();
            let fields: Vec<Polynomial> = base
                .into_iter()
                .enumerate()
                .map(|(i, c)| {
                    if i == slot {
                        Polynomial::x()
                    } else {
                        Polynomial::constant(c)
                    }
                })
                .collect();
            let k = casimir_coefficients(&CubicAlgebra::new(
                fields.try_into().expect("nine constants"),
            ));
            let deg = [
                k.c_squared,
                k.anti_a2_b,
                k.anti_a_b2,
                k.anti_a_b,
                k.b_squared,
                k.b,
                k.a4,
                k.a3,
                k.a2,
                k.a,
            ]
            .iter()
            .filter_map(|p| p.degree())
            .max()
            .unwrap();
            let expected = if slot <= 1 { 2 } else { 1 };
            assert_eq!(deg, expected, "slot {slot}");
        }
    }

    #[test]
    fn linearity_in_the_linear_constants() {
        // K(2c) − K(c) = K(c) − K(0) coefficient-by-coefficient for each of
        // γ, δ, ε, μ, ν, ξ, ζ with the others held fixed.
        let flatten = |alg: &CubicAlgebra| -> Vec<Polynomial> {
            let k = casimir_coefficients(alg);
            vec![
                k.c_squared,
                k.anti_a2_b,
                k.anti_a_b2,
                k.anti_a_b,
                k.b_squared,
                k.b,
                k.a4,
                k.a3,
                k.a2,
                k.a,
            ]
        };
        for slot in 2..9 {
            let mut at = |v: i64| {
                let mut c = generic_constants();
                c[slot] = int(v);
                flatten(&CubicAlgebra::from_rationals(c))
            };
            let (k0, k1, k2) = (at(0), at(4), at(8));
            for i in 0..k0.len() {
                assert_eq!(&k2[i] - &k1[i], &k1[i] - &k0[i], "slot {slot}");
            }
        }
    }
}
