//! Rational functions p/q in lowest terms with monic denominator.

use alloc::string::ToString;
use alloc::vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::poly::Polynomial;
use crate::{Error, Rat, Result};

/// Ratio of two polynomials, kept reduced (gcd divided out) with a monic
/// denominator so that equality is structural.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut rf = RationalFunction { num, den };
        rf.reduce();
        rf
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_polynomial(Polynomial::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_polynomial(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_polynomial(Polynomial::one())
    }

    pub fn x() -> Self {
        Self::from_polynomial(Polynomial::x())
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Polynomial::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree().unwrap_or(0) > 0 {
            self.num = self.num.exact_div(&g).expect("gcd divides numerator");
            self.den = self.den.exact_div(&g).expect("gcd divides denominator");
        }
        let lead = self.den.leading().unwrap().clone();
        if !lead.is_one() {
            let inv = Rat::one() / lead;
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Some(p) when the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        (self.den.degree() == Some(0)).then_some(&self.num)
    }

    /// Some(c) when the function is a constant.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.num.is_zero() {
            return Some(Rat::zero());
        }
        (self.num.degree() == Some(0) && self.den.degree() == Some(0)).then(|| self.num.coeff(0))
    }

    /// Split into polynomial part + strictly proper remainder part.
    pub fn polynomial_split(&self) -> (Polynomial, RationalFunction) {
        let (q, r) = self.num.divmod(&self.den);
        (
            q,
            RationalFunction {
                num: r,
                den: self.den.clone(),
            },
        )
    }

    pub fn derivative(&self) -> RationalFunction {
        // (n/d)' = (n'd − n d')/d²
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RationalFunction::new(n, &self.den * &self.den)
    }

    /// Exact evaluation; errors at a pole.
    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::PoleAt(x.to_string()));
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }

    /// c·f for a rational scalar c.
    pub fn scale_by(&self, c: &Rat) -> RationalFunction {
        if c.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// True when the denominator never vanishes on the real line.
    pub fn is_nonsingular_on_line(&self) -> bool {
        self.den.count_real_roots(None, None) == 0
    }

    /// True when the denominator never vanishes on the open half line
    /// (0, ∞); a pole at the origin itself is permitted.
    pub fn is_nonsingular_on_half_line(&self) -> bool {
        self.den.count_real_roots(Some(&Rat::zero()), None) == 0
    }

    /// f(λ·x).
    pub fn compose_scale(&self, lambda: &Rat) -> RationalFunction {
        RationalFunction::new(
            self.num.compose_scale(lambda),
            self.den.compose_scale(lambda),
        )
    }

    /// f(−x).
    pub fn compose_neg(&self) -> RationalFunction {
        RationalFunction::new(self.num.compose_neg(), self.den.compose_neg())
    }

    /// Is f an even function of x?
    pub fn is_even(&self) -> bool {
        self.compose_neg() == *self
    }

    /// Is f an odd function of x?
    pub fn is_odd(&self) -> bool {
        self.compose_neg() == -self
    }

    /// Given f(z), produce f(√c · x) for c a rational whose square root is
    /// applied through the substitution z² ↦ c·x². Works directly when √c is
    /// rational; otherwise requires an even function (after multiplying odd
    /// num/den pairs by z, which leaves the function unchanged).
    pub fn substitute_scaled_variable(&self, c: &Rat) -> Result<RationalFunction> {
        if let Some(s) = rational_sqrt(c) {
            return Ok(self.compose_scale(&s));
        }
        // try to rewrite as a function of z²
        let (num, den) = if self.num.is_zero() {
            return Ok(RationalFunction::zero());
        } else if is_even_poly(&self.num) && is_even_poly(&self.den) {
            (self.num.clone(), self.den.clone())
        } else if is_odd_poly(&self.num) && is_odd_poly(&self.den) {
            let x = Polynomial::x();
            (&self.num * &x, &self.den * &x)
        } else {
            return Err(Error::IrrationalRescale);
        };
        Ok(RationalFunction::new(
            even_poly_substitute(&num, c),
            even_poly_substitute(&den, c),
        ))
    }
}

/// √c when c is a perfect square of a rational, else None.
pub fn rational_sqrt(c: &Rat) -> Option<Rat> {
    if c.is_negative() {
        return None;
    }
    if c.is_zero() {
        return Some(Rat::zero());
    }
    let sn = c.numer().sqrt();
    let sd = c.denom().sqrt();
    (&sn * &sn == *c.numer() && &sd * &sd == *c.denom()).then(|| Rat::new(sn, sd))
}

fn is_even_poly(p: &Polynomial) -> bool {
    p.coeffs()
        .iter()
        .enumerate()
        .all(|(i, c)| i % 2 == 0 || c.is_zero())
}

fn is_odd_poly(p: &Polynomial) -> bool {
    p.coeffs()
        .iter()
        .enumerate()
        .all(|(i, c)| i % 2 == 1 || c.is_zero())
}

/// For even p(z), return p with z² replaced by c·x² (degree preserved).
fn even_poly_substitute(p: &Polynomial, c: &Rat) -> Polynomial {
    let mut coeffs = vec![Rat::zero(); p.coeffs().len()];
    let mut pow = Rat::one();
    for (i, slot) in coeffs.iter_mut().enumerate() {
        if i % 2 == 0 {
            *slot = p.coeff(i) * &pow;
            pow = &pow * c;
        }
    }
    Polynomial::new(coeffs)
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
