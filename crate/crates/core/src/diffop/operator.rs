//! Symbolic 1D differential operators Σ_l a_l(x)·D^l with Gaussian-weighted
//! rational coefficients, composed by the Leibniz rule.

use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::exactmath::{Polynomial, RationalFunction, WeightedFunction};
use crate::{int, Error, Rat, Result};

/// Binomial coefficient as an exact rational.
pub fn binomial(n: u32, k: u32) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let mut acc = Rat::one();
    for j in 0..k.min(n - k) {
        acc = acc * int((n - j) as i64) / int((j + 1) as i64);
    }
    acc
}

/// Σ_l a_l(x)·D^l. Zero coefficients are never stored; `hbar` is carried as
/// a convention tag and must agree between operands of any binary operation.
#[derive(Clone, PartialEq, Eq)]
pub struct DifferentialOperator {
    terms: BTreeMap<u32, WeightedFunction>,
    hbar: Rat,
}

impl DifferentialOperator {
    pub fn zero(hbar: Rat) -> Self {
        DifferentialOperator {
            terms: BTreeMap::new(),
            hbar,
        }
    }

    pub fn identity(hbar: Rat) -> Self {
        let mut op = Self::zero(hbar);
        op.set_term(0, WeightedFunction::constant(Rat::one()));
        op
    }

    /// D^order with unit coefficient.
    pub fn derivative_op(order: u32, hbar: Rat) -> Self {
        let mut op = Self::zero(hbar);
        op.set_term(order, WeightedFunction::constant(Rat::one()));
        op
    }

    /// Multiplication by f.
    pub fn multiplication(f: WeightedFunction, hbar: Rat) -> Self {
        let mut op = Self::zero(hbar);
        op.set_term(0, f);
        op
    }

    /// First-order factor D + w(x).
    pub fn first_order(w: RationalFunction, hbar: Rat) -> Self {
        let mut op = Self::zero(hbar);
        op.set_term(1, WeightedFunction::constant(Rat::one()));
        op.set_term(0, WeightedFunction::from_rational(w));
        op
    }

    /// H = −D² + V (full-line convention, E = 2ν + 1 for the oscillator).
    pub fn schrodinger_full(v: WeightedFunction, hbar: Rat) -> Self {
        let mut op = Self::zero(hbar);
        op.set_term(2, WeightedFunction::constant(-Rat::one()));
        op.set_term(0, v);
        op
    }

    /// H = −(ħ²/2)D² + V (momentum convention p = −iħ·D).
    pub fn schrodinger_half(v: WeightedFunction, hbar: Rat) -> Self {
        let c = -(&hbar * &hbar) / int(2);
        let mut op = Self::zero(hbar);
        op.set_term(2, WeightedFunction::constant(c));
        op.set_term(0, v);
        op
    }

    pub fn from_terms(terms: BTreeMap<u32, WeightedFunction>, hbar: Rat) -> Self {
        let mut op = Self::zero(hbar);
        for (l, f) in terms {
            op.set_term(l, f);
        }
        op
    }

    pub fn set_term(&mut self, l: u32, f: WeightedFunction) {
        if f.is_zero() {
            self.terms.remove(&l);
        } else {
            self.terms.insert(l, f);
        }
    }

    pub fn term(&self, l: u32) -> WeightedFunction {
        self.terms
            .get(&l)
            .cloned()
            .unwrap_or_else(WeightedFunction::zero)
    }

    pub fn terms(&self) -> &BTreeMap<u32, WeightedFunction> {
        &self.terms
    }

    pub fn hbar(&self) -> &Rat {
        &self.hbar
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest derivative order present; None for the zero operator.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    fn check_hbar(&self, other: &Self) -> Result<()> {
        if self.hbar == other.hbar {
            Ok(())
        } else {
            Err(Error::MismatchedHbar)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_hbar(other)?;
        let mut out = self.clone();
        for (l, f) in &other.terms {
            let sum = out.term(*l).try_add(f)?;
            out.set_term(*l, sum);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.hbar.clone());
        }
        DifferentialOperator {
            terms: self.terms.iter().map(|(l, f)| (*l, f.scale(c))).collect(),
            hbar: self.hbar.clone(),
        }
    }

    /// Operator product by the Leibniz rule:
    /// (a·D^m)(b·D^n) = Σ_j C(m,j)·a·b^{(j)}·D^{m+n−j}.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_hbar(other)?;
        let mut out = Self::zero(self.hbar.clone());
        for (&m, a) in &self.terms {
            for (&n, b) in &other.terms {
                let mut bj = b.clone();
                for j in 0..=m {
                    let coeff = binomial(m, j);
                    if !coeff.is_zero() {
                        let term = (a * &bj).scale(&coeff);
                        let l = m + n - j;
                        out.set_term(l, out.term(l).try_add(&term)?);
                    }
                    if j < m {
                        bj = bj.derivative();
                    }
                }
            }
        }
        Ok(out)
    }

    /// [A, B] = A∘B − B∘A.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        let ab = self.compose(other)?;
        let ba = other.compose(self)?;
        ab.try_sub(&ba)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg_ref())
    }

    fn neg_ref(&self) -> Self {
        DifferentialOperator {
            terms: self.terms.iter().map(|(l, f)| (*l, -f)).collect(),
            hbar: self.hbar.clone(),
        }
    }

    /// Formal adjoint: (f·D^l)† = (−1)^l·D^l∘f, for real coefficients.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero(self.hbar.clone());
        for (&l, f) in &self.terms {
            // (−1)^l Σ_j C(l,j) f^{(j)} D^{l−j}
            let mut fj = f.clone();
            for j in 0..=l {
                let mut c = binomial(l, j);
                if l % 2 == 1 {
                    c = -c;
                }
                let term = fj.scale(&c);
                let k = l - j;
                let sum = out.term(k).try_add(&term).expect("adjoint weights agree");
                out.set_term(k, sum);
                if j < l {
                    fj = fj.derivative();
                }
            }
        }
        out
    }

    /// A·f = Σ_l a_l·f^{(l)}.
    pub fn apply(&self, f: &WeightedFunction) -> Result<WeightedFunction> {
        let mut acc = WeightedFunction::zero();
        let mut fl = f.clone();
        let top = match self.order() {
            None => return Ok(acc),
            Some(t) => t,
        };
        for l in 0..=top {
            if let Some(a) = self.terms.get(&l) {
                acc = acc.try_add(&(a * &fl))?;
            }
            if l < top {
                fl = fl.derivative();
            }
        }
        Ok(acc)
    }

    /// A^n by repeated composition.
    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut acc = Self::identity(self.hbar.clone());
        for _ in 0..n {
            acc = acc.compose(self)?;
        }
        Ok(acc)
    }

    /// If A = Σ_j a_j·H^j for the given Schrödinger H = c₂D² + V, return the
    /// coefficients a_j (ascending). Reduction is by repeated elimination of
    /// the top derivative order; fails (None) when an odd order or a
    /// non-constant leading coefficient blocks the elimination.
    pub fn as_polynomial_in(&self, h: &Self) -> Option<Polynomial> {
        let c2 = h.term(2).body.as_constant().filter(|c| !c.is_zero())?;
        let mut rem = self.clone();
        let mut coeffs: BTreeMap<usize, Rat> = BTreeMap::new();
        loop {
            let ord = match rem.order() {
                None => break,
                Some(o) => o,
            };
            if ord % 2 != 0 {
                return None;
            }
            let j = (ord / 2) as usize;
            let top = rem.term(ord);
            if top.weight != 0 {
                return None;
            }
            let lead = top.body.as_constant()?;
            // H^j has leading coefficient c₂^j on D^{2j}
            let a = lead / c2.pow(j as i32);
            let hj = h.pow(j as u32).ok()?;
            rem = rem.try_sub(&hj.scale(&a)).ok()?;
            if rem.order() == Some(ord) {
                return None;
            }
            coeffs.insert(j, a);
        }
        let top = coeffs.keys().next_back().copied().unwrap_or(0);
        let mut v = alloc::vec![Rat::zero(); top + 1];
        for (j, a) in coeffs {
            v[j] = a;
        }
        Some(Polynomial::new(v))
    }
}

impl Add for &DifferentialOperator {
    type Output = DifferentialOperator;
    fn add(self, rhs: &DifferentialOperator) -> DifferentialOperator {
        self.try_add(rhs).expect("operator addition")
    }
}

impl Sub for &DifferentialOperator {
    type Output = DifferentialOperator;
    fn sub(self, rhs: &DifferentialOperator) -> DifferentialOperator {
        self.try_sub(rhs).expect("operator subtraction")
    }
}

impl Neg for &DifferentialOperator {
    type Output = DifferentialOperator;
    fn neg(self) -> DifferentialOperator {
        self.neg_ref()
    }
}

impl fmt::Debug for DifferentialOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (l, a) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match l {
                0 => write!(f, "({a})")?,
                1 => write!(f, "({a})·D")?,
                _ => write!(f, "({a})·D^{l}")?,
            }
        }
        Ok(())
    }
}
