//! Complex extension of the operator layer. Phases like (−iħ)^j are exact
//! Gaussian rationals; complex operators are pairs of real ones. Only the
//! momentum-convention commutator coefficients Z_l and the Hamiltonian/
//! integral pair classification live up here — everything downstream of the
//! chain construction stays real.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::operator::{binomial, DifferentialOperator};
use crate::exactmath::WeightedFunction;
use crate::{int, Error, Rat, Result};

/// Gaussian rational a + b·i.
#[derive(Clone, PartialEq, Eq)]
pub struct Grat {
    pub re: Rat,
    pub im: Rat,
}

impl Grat {
    pub fn new(re: Rat, im: Rat) -> Self {
        Grat { re, im }
    }

    pub fn real(re: Rat) -> Self {
        Grat::new(re, Rat::zero())
    }

    pub fn i() -> Self {
        Grat::new(Rat::zero(), Rat::one())
    }

    pub fn zero() -> Self {
        Grat::real(Rat::zero())
    }

    pub fn one() -> Self {
        Grat::real(Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Grat::new(self.re.clone(), -self.im.clone())
    }

    /// (−i·ħ)^j.
    pub fn minus_i_hbar_pow(hbar: &Rat, j: u32) -> Self {
        let mag = hbar.pow(j as i32);
        match j % 4 {
            0 => Grat::real(mag),
            1 => Grat::new(Rat::zero(), -mag),
            2 => Grat::real(-mag),
            _ => Grat::new(Rat::zero(), mag),
        }
    }
}

impl Add for &Grat {
    type Output = Grat;
    fn add(self, rhs: &Grat) -> Grat {
        Grat::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &Grat {
    type Output = Grat;
    fn sub(self, rhs: &Grat) -> Grat {
        Grat::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &Grat {
    type Output = Grat;
    fn mul(self, rhs: &Grat) -> Grat {
        Grat::new(
            &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        )
    }
}

impl Neg for &Grat {
    type Output = Grat;
    fn neg(self) -> Grat {
        Grat::new(-self.re.clone(), -self.im.clone())
    }
}

impl fmt::Debug for Grat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

/// Complex-valued weighted function, stored as real and imaginary parts.
#[derive(Clone, PartialEq, Eq)]
pub struct CWeighted {
    pub re: WeightedFunction,
    pub im: WeightedFunction,
}

impl CWeighted {
    pub fn zero() -> Self {
        CWeighted {
            re: WeightedFunction::zero(),
            im: WeightedFunction::zero(),
        }
    }

    pub fn real(f: WeightedFunction) -> Self {
        CWeighted {
            re: f,
            im: WeightedFunction::zero(),
        }
    }

    /// g·f for a Gaussian-rational scalar g.
    pub fn scaled(f: &WeightedFunction, g: &Grat) -> Self {
        CWeighted {
            re: f.scale(&g.re),
            im: f.scale(&g.im),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(CWeighted {
            re: self.re.try_add(&other.re)?,
            im: self.im.try_add(&other.im)?,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        Ok(CWeighted {
            re: self.re.try_sub(&other.re)?,
            im: self.im.try_sub(&other.im)?,
        })
    }

    /// If self = g·other for a constant Gaussian rational g, return g.
    pub fn constant_ratio(&self, other: &Self) -> Option<Grat> {
        if other.is_zero() {
            return None;
        }
        // self/other = self·conj(other) / |other|²
        let den = (&other.re * &other.re)
            .try_add(&(&other.im * &other.im))
            .ok()?;
        let num_re = (&self.re * &other.re)
            .try_add(&(&self.im * &other.im))
            .ok()?;
        let num_im = (&self.im * &other.re)
            .try_sub(&(&self.re * &other.im))
            .ok()?;
        let part = |num: &WeightedFunction| -> Option<Rat> {
            if num.is_zero() {
                return Some(Rat::zero());
            }
            if num.weight != den.weight {
                return None;
            }
            (&num.body / &den.body).as_constant()
        };
        Some(Grat::new(part(&num_re)?, part(&num_im)?))
    }
}

impl fmt::Debug for CWeighted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else {
            write!(f, "({}) + i({})", self.re, self.im)
        }
    }
}

/// Operator with complex coefficients: R + i·S for real operators R, S
/// sharing one hbar convention.
#[derive(Clone, PartialEq, Eq)]
pub struct ComplexOperator {
    pub re: DifferentialOperator,
    pub im: DifferentialOperator,
}

impl ComplexOperator {
    pub fn new(re: DifferentialOperator, im: DifferentialOperator) -> Result<Self> {
        if re.hbar() != im.hbar() {
            return Err(Error::MismatchedHbar);
        }
        Ok(ComplexOperator { re, im })
    }

    pub fn from_real(re: DifferentialOperator) -> Self {
        let im = DifferentialOperator::zero(re.hbar().clone());
        ComplexOperator { re, im }
    }

    pub fn zero(hbar: Rat) -> Self {
        Self::from_real(DifferentialOperator::zero(hbar))
    }

    pub fn hbar(&self) -> &Rat {
        self.re.hbar()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn order(&self) -> Option<u32> {
        match (self.re.order(), self.im.order()) {
            (None, o) | (o, None) => o,
            (Some(a), Some(b)) => Some(a.max(b)),
        }
    }

    pub fn term(&self, l: u32) -> CWeighted {
        CWeighted {
            re: self.re.term(l),
            im: self.im.term(l),
        }
    }

    pub fn set_term(&mut self, l: u32, f: CWeighted) {
        self.re.set_term(l, f.re);
        self.im.set_term(l, f.im);
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        let re = self
            .re
            .compose(&other.re)?
            .try_sub(&self.im.compose(&other.im)?)?;
        let im = self
            .re
            .compose(&other.im)?
            .try_add(&self.im.compose(&other.re)?)?;
        Ok(ComplexOperator { re, im })
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        let ab = self.compose(other)?;
        let ba = other.compose(self)?;
        ab.try_sub(&ba)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(ComplexOperator {
            re: self.re.try_add(&other.re)?,
            im: self.im.try_add(&other.im)?,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        Ok(ComplexOperator {
            re: self.re.try_sub(&other.re)?,
            im: self.im.try_sub(&other.im)?,
        })
    }

    /// g·A for a Gaussian-rational scalar.
    pub fn scale(&self, g: &Grat) -> Self {
        let re = self
            .re
            .scale(&g.re)
            .try_sub(&self.im.scale(&g.im))
            .expect("same hbar");
        let im = self
            .re
            .scale(&g.im)
            .try_add(&self.im.scale(&g.re))
            .expect("same hbar");
        ComplexOperator { re, im }
    }
}

impl fmt::Debug for ComplexOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{:?}", self.re)
        } else {
            write!(f, "({:?}) + i({:?})", self.re, self.im)
        }
    }
}

/// K = Σ_j f_j(x)·p^j with p = −iħ·D, as a complex operator.
pub fn momentum_polynomial(f: &[WeightedFunction], hbar: &Rat) -> ComplexOperator {
    let mut k = ComplexOperator::zero(hbar.clone());
    for (j, fj) in f.iter().enumerate() {
        let phase = Grat::minus_i_hbar_pow(hbar, j as u32);
        let term = CWeighted::scaled(fj, &phase);
        k.set_term(j as u32, term);
    }
    k
}

/// Closed-form coefficients Z₀..Z_{M+1} of [H, K] = Σ_l Z_l·D^l for
/// H = −(ħ²/2)D² + V and K = Σ_{j≤M} f_j·p^j:
///
///   Z_{M+1} = (−iħ)^{M+2}·f_M′
///   Z_l     = −(ħ²/2)(−iħ)^{l−1}(2f_{l−1}′ − iħ·f_l″)
///             − Σ_{j=l+1}^{M} (−iħ)^j·C(j,l)·f_j·V^{(j−l)}     (1 ≤ l ≤ M)
///   Z₀      = −(ħ²/2)·f₀″ − Σ_{j=1}^{M} (−iħ)^j·f_j·V^{(j)}
pub fn schrodinger_commutator_coefficients(
    v: &WeightedFunction,
    f: &[WeightedFunction],
    hbar: &Rat,
) -> Result<Vec<CWeighted>> {
    if f.is_empty() || f.iter().all(|fj| fj.is_zero()) {
        // identically zero K commutes with everything
        return Ok(alloc::vec![CWeighted::zero(); f.len() + 1]);
    }
    let m = f.len() - 1;
    if f[m].is_zero() {
        return Err(Error::LowerOrderThanDeclared);
    }
    let half_h2 = -(hbar * hbar) / int(2);
    let mih = |j: u32| Grat::minus_i_hbar_pow(hbar, j);

    // v_derivs[d] = V^{(d)}
    let mut v_derivs = Vec::with_capacity(m + 1);
    v_derivs.push(v.clone());
    for _ in 0..m {
        let next = v_derivs.last().unwrap().derivative();
        v_derivs.push(next);
    }

    let mut z = Vec::with_capacity(m + 2);

    // Z₀
    let mut z0 = CWeighted::real(f[0].nth_derivative(2).scale(&half_h2));
    for j in 1..=m {
        let phase = mih(j as u32);
        let prod = &f[j] * &v_derivs[j];
        z0 = z0.try_sub(&CWeighted::scaled(&prod, &phase))?;
    }
    z.push(z0);

    // Z_l, 1 ≤ l ≤ M
    for l in 1..=m {
        let lead_phase = mih(l as u32 - 1);
        // 2f_{l−1}′ − iħ·f_l″  (second piece only when l ≤ M)
        let a = f[l - 1].derivative().scale(&int(2));
        let b = f[l].nth_derivative(2);
        let inner = CWeighted::scaled(&a, &Grat::one()).try_add(&CWeighted::scaled(
            &b,
            &Grat::new(Rat::zero(), -hbar.clone()),
        ))?;
        let mut zl = CWeighted {
            re: inner.re.scale(&half_h2),
            im: inner.im.scale(&half_h2),
        };
        let zl_phase = |w: CWeighted, g: &Grat| CWeighted {
            re: w
                .re
                .scale(&g.re)
                .try_sub(&w.im.scale(&g.im))
                .expect("same weight"),
            im: w
                .re
                .scale(&g.im)
                .try_add(&w.im.scale(&g.re))
                .expect("same weight"),
        };
        zl = zl_phase(zl, &lead_phase);
        for j in (l + 1)..=m {
            let phase = mih(j as u32);
            let prod = (&f[j] * &v_derivs[j - l]).scale(&binomial(j as u32, l as u32));
            zl = zl.try_sub(&CWeighted::scaled(&prod, &phase))?;
        }
        z.push(zl);
    }

    // Z_{M+1}
    let zm1 = CWeighted::scaled(&f[m].derivative(), &mih(m as u32 + 2));
    z.push(zm1);

    Ok(z)
}

/// Classification of the pair (H, K) by the shape of C = [H, K].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PairKind {
    Abelian,
    Heisenberg,
    Conformal,
    Ladder,
    None,
}

/// Result of `classify_pair`: the algebra type and, when the type carries
/// one, the structure constant α₁.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairType {
    pub kind: PairKind,
    pub alpha1: Option<Grat>,
}

/// Decide, in order, whether C = [H,K] is 0 (Abelian), α₁·1 (Heisenberg),
/// α₁·H (Conformal), or −α₁·K (Ladder). H must be real Schrödinger form
/// c·D² + V with constant c < 0 and no first-order term.
pub fn classify_pair(h: &ComplexOperator, k: &ComplexOperator) -> Result<PairType> {
    if !h.im.is_zero() {
        return Err(Error::NotSchrodingerForm);
    }
    let kin = h.re.term(2);
    let ok_kinetic = kin.weight == 0 && kin.body.as_constant().is_some_and(|c| c < Rat::zero());
    if !ok_kinetic || !h.re.term(1).is_zero() || h.re.order() != Some(2) {
        return Err(Error::NotSchrodingerForm);
    }

    let c = h.commutator(k)?;
    if c.is_zero() {
        return Ok(PairType {
            kind: PairKind::Abelian,
            alpha1: None,
        });
    }

    // Heisenberg: C = α₁·1
    if c.order() == Some(0) {
        let t = c.term(0);
        let alpha = constant_of(&t);
        if let Some(a) = alpha {
            return Ok(PairType {
                kind: PairKind::Heisenberg,
                alpha1: Some(a),
            });
        }
    }

    // Conformal: C = α₁·H
    if let Some(a) = proportionality(&c, &ComplexOperator::from_real(h.re.clone())) {
        return Ok(PairType {
            kind: PairKind::Conformal,
            alpha1: Some(a),
        });
    }

    // Ladder: C = −α₁·K
    if let Some(a) = proportionality(&c, k) {
        return Ok(PairType {
            kind: PairKind::Ladder,
            alpha1: Some(-&a),
        });
    }

    Ok(PairType {
        kind: PairKind::None,
        alpha1: None,
    })
}

fn constant_of(t: &CWeighted) -> Option<Grat> {
    let part = |f: &WeightedFunction| -> Option<Rat> {
        if f.is_zero() {
            return Some(Rat::zero());
        }
        if f.weight != 0 {
            return None;
        }
        f.body.as_constant()
    };
    let g = Grat::new(part(&t.re)?, part(&t.im)?);
    (!g.is_zero()).then_some(g)
}

/// If a = g·b for a single constant Gaussian rational g ≠ 0, return g.
fn proportionality(a: &ComplexOperator, b: &ComplexOperator) -> Option<Grat> {
    let (oa, ob) = (a.order()?, b.order()?);
    if oa != ob {
        return None;
    }
    let g = a.term(oa).constant_ratio(&b.term(ob))?;
    if g.is_zero() {
        return None;
    }
    let scaled = b.scale(&g);
    a.try_sub(&scaled).ok()?.is_zero().then_some(g)
}
