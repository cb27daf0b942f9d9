//! Exact univariate polynomials over big rationals, plus the Hermite-type
//! generators and Sturm-sequence real-root counting.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{int, Rat};

/// Univariate polynomial with exact rational coefficients, ascending degree.
/// Trailing zeros are trimmed; the zero polynomial has an empty list.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<Rat>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        Polynomial::new(vec![Rat::zero(), Rat::one()])
    }

    /// c·x^deg.
    pub fn monomial(c: Rat, deg: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        Polynomial::new(coeffs)
    }

    /// ∏ (x − r) over the given roots.
    pub fn from_roots(roots: &[Rat]) -> Self {
        let mut p = Polynomial::one();
        for r in roots {
            p = &p * &Polynomial::new(vec![-r.clone(), Rat::one()]);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * int(i as i64))
            .collect();
        Polynomial::new(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// p(λ·x).
    pub fn compose_scale(&self, lambda: &Rat) -> Polynomial {
        let mut pow = Rat::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let c = a * &pow;
                pow = &pow * lambda;
                c
            })
            .collect();
        Polynomial::new(coeffs)
    }

    /// p(−x).
    pub fn compose_neg(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| if i % 2 == 1 { -a } else { a.clone() })
            .collect();
        Polynomial::new(coeffs)
    }

    /// p(q(x)), by Horner over polynomial arithmetic.
    pub fn compose(&self, q: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Polynomial::constant(a.clone());
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: self = q·d + r with deg r < deg d. Panics on d = 0.
    pub fn divmod(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let dl = d.leading().unwrap();
        let mut rem = self.clone();
        let mut q = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let f = rem.leading().unwrap() / dl;
            let shift = rd - dd;
            q[shift] = f.clone();
            // rem -= f · x^shift · d
            let mut coeffs = rem.coeffs;
            for (i, c) in d.coeffs.iter().enumerate() {
                coeffs[i + shift] = &coeffs[i + shift] - &(c * &f);
            }
            rem = Polynomial::new(coeffs);
        }
        (Polynomial::new(q), rem)
    }

    /// Exact quotient; None if the division leaves a remainder.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        let (q, r) = self.divmod(d);
        r.is_zero().then_some(q)
    }

    /// Primitive gcd with positive leading coefficient, via the subresultant
    /// pseudo-remainder sequence over cleared-denominator integer polynomials.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() {
            return normalize_positive(other);
        }
        if other.is_zero() {
            return normalize_positive(self);
        }
        let a = to_int_primitive(self);
        let b = to_int_primitive(other);
        let g = int_subresultant_gcd(a, b);
        let coeffs = g.into_iter().map(Rat::from_integer).collect();
        normalize_positive(&Polynomial::new(coeffs))
    }

    /// self / gcd(self, self′): same distinct roots, all simple.
    pub fn square_free_part(&self) -> Polynomial {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides")
    }

    /// Number of distinct real roots in (lo, hi] via Sturm's theorem;
    /// `None` bounds mean ∓∞. The left endpoint is excluded, so a root at
    /// `lo` itself is not counted.
    pub fn count_real_roots(&self, lo: Option<&Rat>, hi: Option<&Rat>) -> usize {
        if self.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let p = self.square_free_part();
        let chain = sturm_chain(&p);
        let sv = |at: Bound| sign_variations(&chain, at);
        let v_lo = sv(match lo {
            Some(x) => Bound::At(x),
            None => Bound::NegInf,
        });
        let v_hi = sv(match hi {
            Some(x) => Bound::At(x),
            None => Bound::PosInf,
        });
        v_lo.saturating_sub(v_hi)
    }
}

fn normalize_positive(p: &Polynomial) -> Polynomial {
    match p.leading() {
        Some(l) if l.is_negative() => -p,
        _ => p.clone(),
    }
}

// ---- integer-polynomial layer for the subresultant PRS ----

/// Clear denominators and divide out the integer content; result is primitive.
fn to_int_primitive(p: &Polynomial) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let mut v: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if !content.is_zero() && !content.is_one() {
        for c in &mut v {
            *c = &*c / &content;
        }
    }
    v
}

fn int_degree(p: &[BigInt]) -> usize {
    p.len() - 1
}

fn int_trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Pseudo-remainder: lc(b)^(δ+1)·a mod b with δ = deg a − deg b. The full
/// power of lc(b) is applied even when intermediate degrees drop by more
/// than one; the subresultant divisions are exact only with that exact
/// power.
fn int_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = int_degree(b);
    let lb = b[db].clone();
    let mut deficit = (int_degree(a) - db + 1) as u32;
    let mut r: Vec<BigInt> = a.to_vec();
    while r.len() > db {
        let dr = int_degree(&r);
        let lead = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        deficit -= 1;
        for i in 0..=db {
            r[i + shift] = &r[i + shift] - &(&b[i] * &lead);
        }
        r = int_trim(r);
        if r.is_empty() {
            return r;
        }
    }
    if deficit > 0 {
        let f = lb.pow(deficit);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

fn int_primitive(mut p: Vec<BigInt>) -> Vec<BigInt> {
    let mut content = BigInt::zero();
    for c in &p {
        content = content.gcd(c);
    }
    if !content.is_zero() && !content.is_one() {
        for c in &mut p {
            *c = &*c / &content;
        }
    }
    p
}

fn int_subresultant_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    if int_degree(&a) < int_degree(&b) {
        core::mem::swap(&mut a, &mut b);
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = int_degree(&a) - int_degree(&b);
        let r = int_pseudo_rem(&a, &b);
        if r.is_empty() {
            return int_primitive(b);
        }
        if int_degree(&r) == 0 {
            return vec![BigInt::one()];
        }
        let divisor = &g * h.pow(delta as u32);
        a = b;
        b = r.into_iter().map(|c| c / &divisor).collect();
        g = a[int_degree(&a)].clone();
        // h = g^δ · h^(1−δ)
        h = if delta == 0 {
            h
        } else {
            let gp = g.pow(delta as u32);
            let hp = h.pow((delta - 1) as u32);
            gp / hp
        };
    }
}

// ---- Sturm sequences ----

enum Bound<'a> {
    NegInf,
    At(&'a Rat),
    PosInf,
}

fn sturm_chain(p: &Polynomial) -> Vec<Polynomial> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let (_, r) = chain[n - 2].divmod(&chain[n - 1]);
        chain.push(-&r);
    }
}

fn sign_at(p: &Polynomial, at: &Bound) -> i8 {
    match at {
        Bound::At(x) => {
            let v = p.eval(x);
            if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            }
        }
        Bound::PosInf => match p.leading() {
            None => 0,
            Some(l) => {
                if l.is_positive() {
                    1
                } else {
                    -1
                }
            }
        },
        Bound::NegInf => match p.leading() {
            None => 0,
            Some(l) => {
                let s = if l.is_positive() { 1 } else { -1 };
                if p.degree().unwrap() % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
        },
    }
}

fn sign_variations(chain: &[Polynomial], at: Bound) -> usize {
    let mut vars = 0;
    let mut last = 0i8;
    for p in chain {
        let s = sign_at(p, &at);
        if s != 0 {
            if last != 0 && s != last {
                vars += 1;
            }
            last = s;
        }
    }
    vars
}

// ---- Hermite-type generators ----

/// Physicists' Hermite polynomial H_n: H_{n+1} = 2x·H_n − 2n·H_{n−1}.
pub fn hermite(n: u32) -> Polynomial {
    let two_x = Polynomial::monomial(int(2), 1);
    let mut prev = Polynomial::one();
    if n == 0 {
        return prev;
    }
    let mut cur = two_x.clone();
    for k in 1..n {
        let next = &(&two_x * &cur) - &prev.scale(&int(2 * k as i64));
        prev = cur;
        cur = next;
    }
    cur
}

/// Pseudo-Hermite 𝓗_m = (−i)^m·H_m(ix); over the rationals this is the
/// recurrence 𝓗_{m+1} = 2x·𝓗_m + 2m·𝓗_{m−1}, so all coefficients stay
/// positive.
pub fn pseudo_hermite(m: u32) -> Polynomial {
    let two_x = Polynomial::monomial(int(2), 1);
    let mut prev = Polynomial::one();
    if m == 0 {
        return prev;
    }
    let mut cur = two_x.clone();
    for k in 1..m {
        let next = &(&two_x * &cur) + &prev.scale(&int(2 * k as i64));
        prev = cur;
        cur = next;
    }
    cur
}

// ---- operator impls (by reference, exact) ----

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::new(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = format_coeff(c, first);
            first = false;
            match i {
                0 => write!(f, "{cs}")?,
                1 => write!(f, "{}x", term_prefix(&cs))?,
                _ => write!(f, "{}x^{i}", term_prefix(&cs))?,
            }
        }
        Ok(())
    }
}

fn format_coeff(c: &Rat, first: bool) -> String {
    use alloc::format;
    if first {
        format!("{c}")
    } else if c.is_negative() {
        format!(" - {}", -c)
    } else {
        format!(" + {c}")
    }
}

fn term_prefix(cs: &str) -> String {
    use alloc::format;
    // drop a bare "1" factor in front of x
    match cs.trim_end() {
        "1" => String::new(),
        s if s.ends_with(" 1") => format!("{} ", &s[..s.len() - 1].trim_end()),
        _ => String::from(cs),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn hermite_low_orders() {
        assert_eq!(hermite(0), Polynomial::one());
        assert_eq!(hermite(1), Polynomial::monomial(int(2), 1));
        assert_eq!(hermite(2), Polynomial::new(vec![int(-2), int(0), int(4)]));
        assert_eq!(
            hermite(3),
            Polynomial::new(vec![int(0), int(-12), int(0), int(8)])
        );
    }

    #[test]
    fn compose_matches_pointwise_evaluation() {
        // p(x) = x² − 3x + 1 composed with q(x) = 2x + 5.
        let p = Polynomial::new(vec![int(1), int(-3), int(1)]);
        let q = Polynomial::new(vec![int(5), int(2)]);
        let c = p.compose(&q);
        for t in -4..=4 {
            assert_eq!(c.eval(&int(t)), p.eval(&q.eval(&int(t))));
        }
        assert_eq!(Polynomial::zero().compose(&q), Polynomial::zero());
        assert_eq!(p.compose(&Polynomial::zero()), Polynomial::constant(int(1)));
    }

    #[test]
    fn hermite_leading_coefficient_is_2_pow_n() {
        for n in 0..10u32 {
            let h = hermite(n);
            assert_eq!(h.degree(), Some(n as usize));
            assert_eq!(h.leading().unwrap(), &int(2).pow(n as i32));
        }
    }

    #[test]
    fn pseudo_hermite_low_orders() {
        assert_eq!(pseudo_hermite(0), Polynomial::one());
        assert_eq!(pseudo_hermite(1), Polynomial::monomial(int(2), 1));
        assert_eq!(
            pseudo_hermite(2),
            Polynomial::new(vec![int(2), int(0), int(4)])
        );
    }

    #[test]
    fn pseudo_hermite_coefficients_nonnegative() {
        for m in 0..=12u32 {
            for c in pseudo_hermite(m).coeffs() {
                assert!(!c.is_negative(), "H_{m} has a negative coefficient");
            }
        }
    }

    #[test]
    fn pseudo_hermite_real_roots() {
        // even m: no real zeros; odd m: only the simple zero at the origin
        for m in 0..=12u32 {
            let p = pseudo_hermite(m);
            let total = p.count_real_roots(None, None);
            let positive = p.count_real_roots(Some(&Rat::zero()), None);
            if m % 2 == 0 {
                assert_eq!(total, 0, "pseudo_hermite({m})");
            } else {
                assert_eq!(total, 1, "pseudo_hermite({m})");
                assert_eq!(positive, 0, "pseudo_hermite({m})");
                assert!(p.eval(&Rat::zero()).is_zero());
            }
        }
    }

    #[test]
    fn divmod_roundtrip() {
        let a = Polynomial::new(vec![int(3), int(-2), int(0), int(5), int(1)]);
        let d = Polynomial::new(vec![int(1), int(2), int(1)]);
        let (q, r) = a.divmod(&d);
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.degree() < d.degree());
    }

    #[test]
    fn gcd_common_factor() {
        let g = Polynomial::new(vec![int(1), int(0), int(2)]); // 2x²+1
        let a = &g * &Polynomial::new(vec![int(-1), int(1)]);
        let b = &g * &Polynomial::new(vec![int(3), int(0), int(0), int(7)]);
        let got = a.gcd(&b);
        // primitive, positive leading: exactly 2x²+1
        assert_eq!(got, g);
    }

    #[test]
    fn gcd_coprime() {
        let a = Polynomial::new(vec![int(1), int(1)]);
        let b = Polynomial::new(vec![int(2), int(0), int(1)]);
        assert_eq!(a.gcd(&b).degree(), Some(0));
    }

    #[test]
    fn sturm_counts_roots_of_cubic() {
        // x(x−1)(x+2): roots −2, 0, 1
        let p = Polynomial::from_roots(&[int(0), int(1), int(-2)]);
        assert_eq!(p.count_real_roots(None, None), 3);
        assert_eq!(p.count_real_roots(Some(&rat(1, 2)), None), 1);
        assert_eq!(p.count_real_roots(None, Some(&rat(-5, 2))), 0);
    }

    #[test]
    fn sturm_handles_repeated_roots() {
        let p = Polynomial::from_roots(&[int(1), int(1), int(3)]);
        assert_eq!(p.count_real_roots(None, None), 2);
    }

    #[test]
    fn eval_is_multiplicative() {
        let p = Polynomial::new(vec![rat(1, 2), int(3)]);
        let q = Polynomial::new(vec![int(-1), int(0), rat(7, 3)]);
        let x = rat(5, 4);
        assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
    }

    #[test]
    fn compose_scale_evaluates_correctly() {
        let p = Polynomial::new(vec![int(1), int(-2), int(3)]);
        let lam = rat(3, 2);
        let x = rat(7, 5);
        assert_eq!(p.compose_scale(&lam).eval(&x), p.eval(&(lam * x)));
    }
}
