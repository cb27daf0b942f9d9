//! Functions of the form b(x)·e^{w·x²/2} with b rational and w an integer
//! weight, closed under the derivative and under products. Wronskians of
//! same-weight families and the log-Laplacian correction −2(ln W)'' live
//! here; both stay exact.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::poly::Polynomial;
use super::ratfn::RationalFunction;
use crate::{int, Error, Rat, Result};

/// b(x)·e^{w·x²/2}. The zero function is stored with weight 0 and compares
/// weight-agnostically.
#[derive(Clone)]
pub struct WeightedFunction {
    pub body: RationalFunction,
    pub weight: i64,
}

impl WeightedFunction {
    pub fn new(body: RationalFunction, weight: i64) -> Self {
        if body.is_zero() {
            return Self::zero();
        }
        WeightedFunction { body, weight }
    }

    pub fn zero() -> Self {
        WeightedFunction {
            body: RationalFunction::zero(),
            weight: 0,
        }
    }

    pub fn from_rational(body: RationalFunction) -> Self {
        Self::new(body, 0)
    }

    pub fn from_polynomial(p: Polynomial, weight: i64) -> Self {
        Self::new(RationalFunction::from_polynomial(p), weight)
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(RationalFunction::constant(c), 0)
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// (b e^{wx²/2})' = (b' + w·x·b) e^{wx²/2}.
    pub fn derivative(&self) -> WeightedFunction {
        let wx = RationalFunction::from_polynomial(Polynomial::monomial(int(self.weight), 1));
        WeightedFunction::new(&self.body.derivative() + &(&wx * &self.body), self.weight)
    }

    pub fn nth_derivative(&self, n: u32) -> WeightedFunction {
        let mut f = self.clone();
        for _ in 0..n {
            f = f.derivative();
        }
        f
    }

    pub fn scale(&self, c: &Rat) -> WeightedFunction {
        WeightedFunction::new(
            &self.body * &RationalFunction::constant(c.clone()),
            self.weight,
        )
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.body.eval_f64(x) * libm::exp(self.weight as f64 * x * x / 2.0)
    }

    fn check_same_weight(&self, other: &WeightedFunction) -> Result<i64> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Ok(0),
            (true, false) => Ok(other.weight),
            (false, true) => Ok(self.weight),
            (false, false) => {
                if self.weight == other.weight {
                    Ok(self.weight)
                } else {
                    Err(Error::MixedWeights(self.weight, other.weight))
                }
            }
        }
    }

    pub fn try_add(&self, other: &WeightedFunction) -> Result<WeightedFunction> {
        let w = self.check_same_weight(other)?;
        Ok(WeightedFunction::new(&self.body + &other.body, w))
    }

    pub fn try_sub(&self, other: &WeightedFunction) -> Result<WeightedFunction> {
        let w = self.check_same_weight(other)?;
        Ok(WeightedFunction::new(&self.body - &other.body, w))
    }
}

impl PartialEq for WeightedFunction {
    fn eq(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.weight == other.weight && self.body == other.body
    }
}

impl Eq for WeightedFunction {}

impl Add for &WeightedFunction {
    type Output = WeightedFunction;
    /// Panics on mixed weights; use `try_add` to recover the error.
    fn add(self, rhs: &WeightedFunction) -> WeightedFunction {
        self.try_add(rhs).expect("weight mismatch in addition")
    }
}

impl Sub for &WeightedFunction {
    type Output = WeightedFunction;
    fn sub(self, rhs: &WeightedFunction) -> WeightedFunction {
        self.try_sub(rhs).expect("weight mismatch in subtraction")
    }
}

impl Mul for &WeightedFunction {
    type Output = WeightedFunction;
    fn mul(self, rhs: &WeightedFunction) -> WeightedFunction {
        WeightedFunction::new(&self.body * &rhs.body, self.weight + rhs.weight)
    }
}

impl Neg for &WeightedFunction {
    type Output = WeightedFunction;
    fn neg(self) -> WeightedFunction {
        WeightedFunction::new(-&self.body, self.weight)
    }
}

impl fmt::Debug for WeightedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for WeightedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.weight {
            0 => write!(f, "{}", self.body),
            w => write!(f, "[{}] exp({w}x^2/2)", self.body),
        }
    }
}

/// Wronskian of same-weight functions f_i = b_i e^{sx²/2}. Factoring the
/// common exponential out of each row turns the rows into the shifted
/// derivatives (d/dx + s·x)^j b_i, so the determinant is rational and the
/// overall result carries weight k·s.
pub fn wronskian(fns: &[WeightedFunction]) -> Result<WeightedFunction> {
    let k = fns.len();
    if k == 0 {
        return Err(Error::EmptyWronskian);
    }
    let mut s = None;
    for f in fns {
        if f.is_zero() {
            return Ok(WeightedFunction::zero());
        }
        match s {
            None => s = Some(f.weight),
            Some(w) if w == f.weight => {}
            Some(w) => return Err(Error::MixedWeights(w, f.weight)),
        }
    }
    let s = s.unwrap();
    let sx = RationalFunction::from_polynomial(Polynomial::monomial(int(s), 1));

    // rows[j][i] = (d/dx + s·x)^j applied to b_i
    let mut rows: Vec<Vec<RationalFunction>> = Vec::with_capacity(k);
    rows.push(fns.iter().map(|f| f.body.clone()).collect());
    for j in 1..k {
        let prev = &rows[j - 1];
        let next = prev.iter().map(|b| &b.derivative() + &(&sx * b)).collect();
        rows.push(next);
    }
    let det = determinant(&rows);
    Ok(WeightedFunction::new(det, k as i64 * s))
}

/// Cofactor expansion along the first column.
fn determinant(m: &[Vec<RationalFunction>]) -> RationalFunction {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = RationalFunction::zero();
    for i in 0..n {
        if m[i][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<RationalFunction>> = m
            .iter()
            .enumerate()
            .filter(|(r, _)| *r != i)
            .map(|(_, row)| row[1..].to_vec())
            .collect();
        let term = &m[i][0] * &determinant(&minor);
        acc = if i % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// −2·(ln f)'' for f = b·e^{wx²/2}, split as (rational part, constant part):
/// the rational part is −2(ln b)'' and the constant is −2w.
pub fn log_laplacian_correction(f: &WeightedFunction) -> Result<(RationalFunction, Rat)> {
    if f.is_zero() {
        return Err(Error::ZeroBase);
    }
    let logderiv = &f.body.derivative() / &f.body;
    let rational = &logderiv.derivative() * &RationalFunction::constant(int(-2));
    Ok((rational, int(-2 * f.weight)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::poly::{hermite, pseudo_hermite};
    use crate::rat;

    fn poly(coeffs: &[i64]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn derivative_tracks_weight() {
        // d/dx e^{x²/2} = x·e^{x²/2}
        let f = WeightedFunction::from_polynomial(Polynomial::one(), 1);
        let d = f.derivative();
        assert_eq!(d.weight, 1);
        assert_eq!(d.body, RationalFunction::x());
    }

    #[test]
    fn mixed_weight_addition_fails() {
        let a = WeightedFunction::from_polynomial(Polynomial::one(), 1);
        let b = WeightedFunction::from_polynomial(Polynomial::one(), -1);
        assert!(a.try_add(&b).is_err());
        assert!(a.try_add(&WeightedFunction::zero()).is_ok());
    }

    #[test]
    fn product_adds_weights() {
        let a = WeightedFunction::from_polynomial(poly(&[0, 2]), 1);
        let b = WeightedFunction::from_polynomial(poly(&[3]), -1);
        let p = &a * &b;
        assert_eq!(p.weight, 0);
        assert_eq!(p.body, RationalFunction::from_polynomial(poly(&[0, 6])));
    }

    #[test]
    fn wronskian_of_pair_matches_direct_expansion() {
        // W(φ₂, φ₃) with φ_m = H̃_m e^{x²/2}: body is b₂b₃' − b₂'b₃ + shift
        let seeds = [
            WeightedFunction::from_polynomial(pseudo_hermite(2), 1),
            WeightedFunction::from_polynomial(pseudo_hermite(3), 1),
        ];
        let w = wronskian(&seeds).unwrap();
        assert_eq!(w.weight, 2);
        // = 8(4x⁴ + 3)
        assert_eq!(
            w.body,
            RationalFunction::from_polynomial(poly(&[24, 0, 0, 0, 32]))
        );
        // cross-check against φ₂·φ₃' − φ₂'·φ₃
        let direct = &(&seeds[0] * &seeds[1].derivative()) - &(&seeds[0].derivative() * &seeds[1]);
        assert_eq!(w, direct);
    }

    #[test]
    fn wronskian_negative_weight_pair() {
        // W(ψ₂, ψ₃) with ψ_n = H_n e^{−x²/2}: same polynomial 8(4x⁴+3),
        // total weight −2
        let seeds = [
            WeightedFunction::from_polynomial(hermite(2), -1),
            WeightedFunction::from_polynomial(hermite(3), -1),
        ];
        let w = wronskian(&seeds).unwrap();
        assert_eq!(w.weight, -2);
        assert_eq!(
            w.body,
            RationalFunction::from_polynomial(poly(&[24, 0, 0, 0, 32]))
        );
    }

    #[test]
    fn wronskian_of_single_function_is_itself() {
        let f = WeightedFunction::from_polynomial(pseudo_hermite(2), 1);
        assert_eq!(wronskian(core::slice::from_ref(&f)).unwrap(), f);
    }

    #[test]
    fn wronskian_of_empty_family_is_an_error() {
        assert_eq!(wronskian(&[]), Err(Error::EmptyWronskian));
    }

    #[test]
    fn wronskian_derivative_column_identity() {
        // W' of a 2-family equals the determinant with the last row
        // differentiated twice: W(f,g)' = f·g'' − f''·g
        let f = WeightedFunction::from_polynomial(pseudo_hermite(1), 1);
        let g = WeightedFunction::from_polynomial(pseudo_hermite(4), 1);
        let w = wronskian(&[f.clone(), g.clone()]).unwrap();
        let lhs = w.derivative();
        let rhs = &(&f * &g.nth_derivative(2)) - &(&f.nth_derivative(2) * &g);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn log_laplacian_of_wronskian_example() {
        // −2(ln W)'' for W = (4x²+2)e^{x²/2}: rational part 8(2x²−1)/(2x²+1)²,
        // constant −2
        let w = WeightedFunction::from_polynomial(poly(&[2, 0, 4]), 1);
        let (rational, constant) = log_laplacian_correction(&w).unwrap();
        let expect = RationalFunction::new(poly(&[-8, 0, 16]), poly(&[1, 0, 4, 0, 4]));
        assert_eq!(rational, expect);
        assert_eq!(constant, int(-2));
    }

    #[test]
    fn log_laplacian_of_pure_gaussian() {
        let g = WeightedFunction::from_polynomial(Polynomial::one(), -1);
        let (rational, constant) = log_laplacian_correction(&g).unwrap();
        assert!(rational.is_zero());
        assert_eq!(constant, int(2));
    }

    #[test]
    fn scale_comm_with_derivative() {
        let f = WeightedFunction::from_polynomial(poly(&[1, 2, 3]), -1);
        let c = rat(5, 7);
        assert_eq!(f.scale(&c).derivative(), f.derivative().scale(&c));
    }
}
