//! Exact residuals of the six Painlevé equations for rational candidate
//! solutions: a zero result is an identity, not a numerical coincidence.

use alloc::format;

use crate::exactmath::RationalFunction;
use crate::{int, rat, Error, Rat, Result};

fn c(r: Rat) -> RationalFunction {
    RationalFunction::constant(r)
}

/// f″ minus the right side of Painlevé equation `which` ∈ 1..=6.
///
/// Parameter arity: P1 none; P2 (α); P3 (α, β, γ, δ); P4 (α, β);
/// P5 (a, b, c, d); P6 (γ₁, γ₂, γ₃, γ₄). Equations that divide by f (or by
/// f − 1, f − z) reject candidates making those denominators vanish
/// identically.
pub fn painleve_residual(
    which: u8,
    f: &RationalFunction,
    params: &[Rat],
) -> Result<RationalFunction> {
    let arity = match which {
        1 => 0,
        2 => 1,
        4 => 2,
        3 | 5 | 6 => 4,
        _ => {
            return Err(Error::InvalidSpec(format!(
                "no Painlevé equation numbered {which}"
            )))
        }
    };
    if params.len() != arity {
        return Err(Error::InvalidSpec(format!(
            "P{which} takes {arity} parameters, got {}",
            params.len()
        )));
    }
    let fp = f.derivative();
    let fpp = fp.derivative();
    let z = RationalFunction::x();
    let one = RationalFunction::one();
    let f2 = f * f;
    let f3 = &f2 * f;

    let rhs = match which {
        1 => &(&c(int(6)) * &f2) + &z,
        2 => {
            let alpha = &params[0];
            &(&(&c(int(2)) * &f3) + &(&z * f)) + &c(alpha.clone())
        }
        3 => {
            if f.is_zero() {
                return Err(Error::DivisionByZeroSolution("P3 divides by f"));
            }
            let (alpha, beta, gamma, delta) = (&params[0], &params[1], &params[2], &params[3]);
            let t1 = &(&fp * &fp) / f;
            let t2 = &fp / &z;
            let t3 = &(&(&c(alpha.clone()) * &f2) + &c(beta.clone())) / &z;
            let t4 = &c(gamma.clone()) * &f3;
            let t5 = &c(delta.clone()) / f;
            &(&(&t1 - &t2) + &(&t3 + &t4)) + &t5
        }
        4 => {
            if f.is_zero() {
                return Err(Error::DivisionByZeroSolution("P4 divides by f"));
            }
            let (alpha, beta) = (&params[0], &params[1]);
            let t1 = &(&fp * &fp) / &(&c(int(2)) * f);
            let t2 = &c(rat(3, 2)) * &f3;
            let t3 = &(&c(int(4)) * &z) * &f2;
            let t4 = &(&c(int(2)) * &(&(&z * &z) - &c(alpha.clone()))) * f;
            let t5 = &c(beta.clone()) / f;
            &(&(&t1 + &t2) + &(&t3 + &t4)) + &t5
        }
        5 => {
            if f.is_zero() || (f - &one).is_zero() {
                return Err(Error::DivisionByZeroSolution("P5 divides by f and f − 1"));
            }
            let (a, b, cc, d) = (&params[0], &params[1], &params[2], &params[3]);
            let fm1 = f - &one;
            let t1 = &(&(&one / &(&c(int(2)) * f)) + &(&one / &fm1)) * &(&fp * &fp);
            let t2 = &fp / &z;
            let t3 =
                &(&(&fm1 * &fm1) / &(&z * &z)) * &(&(&(&c(a.clone()) * &f2) + &c(b.clone())) / f);
            let t4 = &(&c(cc.clone()) * f) / &z;
            let t5 = &(&(&c(d.clone()) * f) * &(f + &one)) / &fm1;
            &(&(&t1 - &t2) + &(&t3 + &t4)) + &t5
        }
        6 => {
            let fm1 = f - &one;
            let fmz = f - &z;
            if f.is_zero() || fm1.is_zero() || fmz.is_zero() {
                return Err(Error::DivisionByZeroSolution(
                    "P6 divides by f, f − 1 and f − z",
                ));
            }
            let (g1, g2, g3, g4) = (&params[0], &params[1], &params[2], &params[3]);
            let zm1 = &z - &one;
            let t1 = &(&c(rat(1, 2)) * &(&(&(&one / f) + &(&one / &fm1)) + &(&one / &fmz)))
                * &(&fp * &fp);
            let t2 = &(&(&(&one / &z) + &(&one / &zm1)) + &(&one / &fmz)) * &fp;
            let front = &(&(f * &fm1) * &fmz) / &(&(&z * &z) * &(&zm1 * &zm1));
            let inner = &(&(&c(g1.clone()) + &(&(&c(g2.clone()) * &z) / &f2))
                + &(&(&c(g3.clone()) * &zm1) / &(&fm1 * &fm1)))
                + &(&(&(&c(g4.clone()) * &z) * &zm1) / &(&fmz * &fmz));
            &(&t1 - &t2) + &(&front * &inner)
        }
        _ => unreachable!(),
    };
    Ok(&fpp - &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Polynomial;
    use alloc::vec;

    fn ones4() -> [Rat; 4] {
        [int(1), int(1), int(1), int(1)]
    }

    fn p4_instance() -> RationalFunction {
        let num = Polynomial::new(vec![int(0), int(-12), int(0), int(16), int(0), int(16)]);
        let den = Polynomial::new(vec![int(3), int(0), int(6), int(0), int(4), int(0), int(8)]);
        RationalFunction::new(num, den)
    }

    #[test]
    fn p4_rational_solution_is_exact() {
        let r = painleve_residual(4, &p4_instance(), &[int(5), int(-8)]).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn p4_wrong_parameters_leave_residual() {
        let r = painleve_residual(4, &p4_instance(), &[int(5), int(-7)]).unwrap();
        assert!(!r.is_zero());
    }

    #[test]
    fn p1_zero_candidate() {
        let r = painleve_residual(1, &RationalFunction::zero(), &[]).unwrap();
        let minus_z = -&RationalFunction::x();
        assert_eq!(r, minus_z);
    }

    #[test]
    fn p2_zero_solves_alpha_zero() {
        let r = painleve_residual(2, &RationalFunction::zero(), &[int(0)]).unwrap();
        assert!(r.is_zero());
        let r1 = painleve_residual(2, &RationalFunction::zero(), &[int(1)]).unwrap();
        assert_eq!(r1.as_constant(), Some(int(-1)));
    }

    #[test]
    fn p2_seed_solution() {
        // f = −1/z solves P2 with α = 1... check: f″ = −2/z³,
        // 2f³ + zf + 1 = −2/z³ − 1 + 1 = −2/z³.
        let f = &RationalFunction::constant(int(-1)) / &RationalFunction::x();
        let r = painleve_residual(2, &f, &[int(1)]).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn p3_guards_zero_candidate() {
        assert_eq!(
            painleve_residual(3, &RationalFunction::zero(), &ones4()).unwrap_err(),
            Error::DivisionByZeroSolution("P3 divides by f"),
        );
    }

    #[test]
    fn p3_constant_solution() {
        // f ≡ k solves P3 when β = −αk² and δ = −γk⁴ (here k = 2).
        let f = c(int(2));
        let r = painleve_residual(3, &f, &[int(1), int(-4), int(1), int(-16)]).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn p5_constant_solution() {
        // f ≡ −1 with b = −a, c = 0 and any d.
        let f = RationalFunction::constant(int(-1));
        let r = painleve_residual(5, &f, &[int(3), int(-3), int(0), int(7)]).unwrap();
        assert!(r.is_zero());
        assert!(matches!(
            painleve_residual(5, &RationalFunction::one(), &ones4()),
            Err(Error::DivisionByZeroSolution(_))
        ));
    }

    #[test]
    fn p6_constant_solution() {
        // f ≡ 2 with γ₄ = 0, γ₃ = γ₁(κ−1)², γ₂ = −γ₁κ²: 1 − z + (z − 1) = 0.
        let f = RationalFunction::constant(int(2));
        let r = painleve_residual(6, &f, &[int(1), int(-4), int(1), int(0)]).unwrap();
        assert!(r.is_zero());
        assert!(matches!(
            painleve_residual(6, &RationalFunction::x(), &ones4()),
            Err(Error::DivisionByZeroSolution(_))
        ));
    }

    #[test]
    fn arity_checked() {
        assert!(matches!(
            painleve_residual(4, &p4_instance(), &[int(5)]),
            Err(Error::InvalidSpec(_))
        ));
        assert!(matches!(
            painleve_residual(7, &p4_instance(), &[]),
            Err(Error::InvalidSpec(_))
        ));
    }
}
