//! Finite-difference oracle: bound-state spectra, square-integrability and
//! ladder-generated state sequences, independent of the exact machinery it
//! cross-checks.

use alloc::vec::Vec;
use num_traits::ToPrimitive;

use crate::diffop::DifferentialOperator;
use crate::exactmath::WeightedFunction;
use crate::potentials::{Convention, Domain, Potential1D};
use crate::{Error, Result};

/// Symmetric Dirichlet grid on [−L, L] (or [ε, L] for half-line problems).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridConfig {
    pub half_width: f64,
    pub points: usize,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            half_width: 12.0,
            points: 4001,
        }
    }
}

impl GridConfig {
    fn validate(&self) -> Result<()> {
        if self.points < 3 || self.points % 2 == 0 {
            return Err(Error::BadGrid(alloc::format!(
                "points must be odd and at least 3, got {}",
                self.points
            )));
        }
        if !(self.half_width > 0.0) {
            return Err(Error::BadGrid(alloc::format!(
                "half width must be positive, got {}",
                self.half_width
            )));
        }
        Ok(())
    }
}

/// Lowest eigenvalues with per-level Richardson error estimates.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericSpectrum {
    pub eigenvalues: Vec<f64>,
    pub estimated_error: Vec<f64>,
    pub convention: Convention,
}

const HALF_LINE_CUTOFF: f64 = 1e-4;
const ERROR_FLOOR: f64 = 1e-9;

fn kinetic_factor(convention: &Convention) -> f64 {
    match convention {
        Convention::FullD2 => 1.0,
        Convention::HalfP2 { hbar, .. } => {
            let h = hbar.to_f64().unwrap_or(f64::NAN);
            0.5 * h * h
        }
    }
}

fn sample_interior(f: &dyn Fn(f64) -> f64, x0: f64, x1: f64, n: usize) -> Result<(Vec<f64>, f64)> {
    let h = (x1 - x0) / (n - 1) as f64;
    let mut vs = Vec::with_capacity(n - 2);
    for i in 1..n - 1 {
        let x = x0 + h * i as f64;
        let v = f(x);
        if !v.is_finite() {
            return Err(Error::SingularPotentialAt(x));
        }
        vs.push(v);
    }
    Ok((vs, h))
}

/// Number of eigenvalues of the tridiagonal matrix below `lambda`, by the
/// sign count of the LDLᵀ pivots (Sturm sequence).
fn count_below(diag: &[f64], off2: f64, lambda: f64) -> usize {
    let mut count = 0;
    let mut d = 1.0f64;
    for (i, &a) in diag.iter().enumerate() {
        d = if i == 0 {
            a - lambda
        } else {
            a - lambda - off2 / d
        };
        if d == 0.0 {
            d = -1e-300;
        }
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

fn kth_eigenvalue(diag: &[f64], off2: f64, k: usize, mut lo: f64, mut hi: f64) -> f64 {
    for _ in 0..120 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if count_below(diag, off2, mid) > k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

fn solve_lowest(vs: &[f64], h: f64, kin: f64, count: usize) -> Vec<f64> {
    let c = kin / (h * h);
    let off2 = c * c;
    let diag: Vec<f64> = vs.iter().map(|v| 2.0 * c + v).collect();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &d in &diag {
        if d < lo {
            lo = d;
        }
        if d > hi {
            hi = d;
        }
    }
    lo -= 2.0 * c;
    hi += 2.0 * c;
    (0..count)
        .map(|k| kth_eigenvalue(&diag, off2, k, lo, hi))
        .collect()
}

/// Triple-grid solve (n, 2n−1, 4n−3) with Richardson extrapolation; returns
/// the finer extrapolant and |difference of the two extrapolants| as the
/// error estimate.
fn refined_solve(
    f: &dyn Fn(f64) -> f64,
    x0: f64,
    x1: f64,
    n: usize,
    kin: f64,
    count: usize,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let solve = |points: usize| -> Result<Vec<f64>> {
        let (vs, h) = sample_interior(f, x0, x1, points)?;
        Ok(solve_lowest(&vs, h, kin, count))
    };
    let e1 = solve(n)?;
    let e2 = solve(2 * n - 1)?;
    let e4 = solve(4 * n - 3)?;
    let mut values = Vec::with_capacity(count);
    let mut errors = Vec::with_capacity(count);
    for k in 0..count {
        let r12 = (4.0 * e2[k] - e1[k]) / 3.0;
        let r24 = (4.0 * e4[k] - e2[k]) / 3.0;
        values.push(r24);
        let est = libm::fabs(r24 - r12);
        errors.push(if est < ERROR_FLOOR { ERROR_FLOOR } else { est });
    }
    Ok((values, errors))
}

/// Lowest `count` eigenvalues of −D² + V (FullD2) or −(ħ²/2)D² + V (HalfP2)
/// on a Dirichlet grid. Half-line potentials are solved on [ε, L] and again
/// at ε/2; the cutoff sensitivity joins the error estimate.
pub fn eigenvalues(v: &Potential1D, cfg: &GridConfig, count: usize) -> Result<NumericSpectrum> {
    let f = |x: f64| v.eval_f64(x);
    eigenvalues_of(&f, v.convention.clone(), v.domain, cfg, count)
}

/// Callable-potential variant of [`eigenvalues`].
pub fn eigenvalues_of(
    f: &dyn Fn(f64) -> f64,
    convention: Convention,
    domain: Domain,
    cfg: &GridConfig,
    count: usize,
) -> Result<NumericSpectrum> {
    cfg.validate()?;
    if count == 0 {
        return Err(Error::BadGrid("count must be at least 1".into()));
    }
    if count + 2 > cfg.points {
        return Err(Error::BadGrid("count exceeds grid resolution".into()));
    }
    let kin = kinetic_factor(&convention);
    let l = cfg.half_width;
    let (eigenvalues, estimated_error) = match domain {
        Domain::FullLine => refined_solve(f, -l, l, cfg.points, kin, count)?,
        Domain::HalfLine => {
            // The Dirichlet-wall error is linear in the cutoff, so extrapolate
            // over ε, ε/2, ε/4 exactly as the grid refinement does over h.
            let eps = HALF_LINE_CUTOFF;
            let (a, _) = refined_solve(f, eps, l, cfg.points, kin, count)?;
            let (b, _) = refined_solve(f, eps / 2.0, l, cfg.points, kin, count)?;
            let (c, mut errs) = refined_solve(f, eps / 4.0, l, cfg.points, kin, count)?;
            let mut vals = Vec::with_capacity(count);
            for k in 0..count {
                let e1 = 2.0 * b[k] - a[k];
                let e2 = 2.0 * c[k] - b[k];
                vals.push(e2);
                let cutoff = libm::fabs(e2 - e1);
                if cutoff > errs[k] {
                    errs[k] = cutoff;
                }
            }
            (vals, errs)
        }
    };
    Ok(NumericSpectrum {
        eigenvalues,
        estimated_error,
        convention,
    })
}

/// Trapezoid-rule ∫|f|² together with the tail share beyond |x| > L/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormReport {
    pub total: f64,
    pub tail: f64,
    pub normalizable: bool,
}

pub fn norm_squared_of(f: &dyn Fn(f64) -> f64, cfg: &GridConfig) -> Result<NormReport> {
    cfg.validate()?;
    let n = cfg.points;
    let l = cfg.half_width;
    let h = 2.0 * l / (n - 1) as f64;
    let mut total = 0.0;
    let mut tail = 0.0;
    for i in 0..n {
        let x = -l + h * i as f64;
        let y = f(x);
        let w = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
        let contrib = w * h * y * y;
        total += contrib;
        if libm::fabs(x) > 0.5 * l {
            tail += contrib;
        }
    }
    let normalizable = total.is_finite() && total > 0.0 && tail < 1e-8 * total;
    Ok(NormReport {
        total,
        tail,
        normalizable,
    })
}

pub fn norm_squared(f: &WeightedFunction, cfg: &GridConfig) -> Result<NormReport> {
    norm_squared_of(&|x| f.eval_f64(x), cfg)
}

/// States (c†)^i ψ₀ for i = 0..n−1, kept exact, with their numerically
/// normalized Gram matrix. A state that collapses to zero is reported in
/// `annihilated_at` and truncates the sequence.
#[derive(Debug, Clone)]
pub struct LadderStates {
    pub states: Vec<WeightedFunction>,
    pub gram: Vec<Vec<f64>>,
    pub annihilated_at: Option<usize>,
}

pub fn ladder_states(
    c_dag: &DifferentialOperator,
    psi0: &WeightedFunction,
    n: usize,
    cfg: &GridConfig,
) -> Result<LadderStates> {
    cfg.validate()?;
    let mut states = Vec::with_capacity(n);
    let mut annihilated_at = None;
    let mut current = psi0.clone();
    for i in 0..n {
        if current.is_zero() {
            annihilated_at = Some(i);
            break;
        }
        states.push(current.clone());
        if i + 1 < n {
            current = c_dag.apply(&current)?;
        }
    }
    let m = states.len();
    let mut overlaps = alloc::vec![alloc::vec![0.0f64; m]; m];
    let grid = cfg.points;
    let l = cfg.half_width;
    let h = 2.0 * l / (grid - 1) as f64;
    let samples: Vec<Vec<f64>> = states
        .iter()
        .map(|s| (0..grid).map(|i| s.eval_f64(-l + h * i as f64)).collect())
        .collect();
    for i in 0..m {
        for j in i..m {
            let mut acc = 0.0;
            for g in 0..grid {
                let w = if g == 0 || g == grid - 1 { 0.5 } else { 1.0 };
                acc += w * h * samples[i][g] * samples[j][g];
            }
            overlaps[i][j] = acc;
            overlaps[j][i] = acc;
        }
    }
    let norms: Vec<f64> = (0..m).map(|i| libm::sqrt(overlaps[i][i])).collect();
    let gram = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| overlaps[i][j] / (norms[i] * norms[j]))
                .collect()
        })
        .collect();
    Ok(LadderStates {
        states,
        gram,
        annihilated_at,
    })
}

/// ⟨ψ, Hψ⟩ / ⟨ψ, ψ⟩ with Hψ computed exactly and the integrals by trapezoid.
pub fn rayleigh_quotient(
    h: &DifferentialOperator,
    psi: &WeightedFunction,
    cfg: &GridConfig,
) -> Result<f64> {
    cfg.validate()?;
    let hpsi = h.apply(psi)?;
    let n = cfg.points;
    let l = cfg.half_width;
    let step = 2.0 * l / (n - 1) as f64;
    let mut num = 0.0;
    let mut den = 0.0;
    for i in 0..n {
        let x = -l + step * i as f64;
        let w = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
        let p = psi.eval_f64(x);
        num += w * step * p * hpsi.eval_f64(x);
        den += w * step * p * p;
    }
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffop::DarbouxChain;
    use crate::exactmath::{Polynomial, RationalFunction};
    use crate::int;
    use crate::potentials::{extend_oscillator, q18_potential, ExtensionSpec, Q18Params, VdCase};
    use alloc::vec;

    fn cfg() -> GridConfig {
        GridConfig::default()
    }

    fn assert_close(got: &[f64], expected: &[f64], tol: f64) {
        assert_eq!(got.len(), expected.len());
        for (g, e) in got.iter().zip(expected) {
            assert!((g - e).abs() < tol, "got {g}, expected {e}");
        }
    }

    #[test]
    fn oscillator_levels() {
        let v = extend_oscillator(&ExtensionSpec::empty()).unwrap();
        let s = eigenvalues(&v, &cfg(), 4).unwrap();
        assert_close(&s.eigenvalues, &[1.0, 3.0, 5.0, 7.0], 1e-6);
        for (val, err) in s.eigenvalues.iter().zip(&s.estimated_error) {
            assert!(*err < 1e-5);
            let exact = val.round();
            assert!((val - exact).abs() <= *err, "error bound too tight: {val}");
        }
    }

    #[test]
    fn extension_levels_include_the_deep_state() {
        let spec = ExtensionSpec::new(vec![2]).unwrap();
        let v = extend_oscillator(&spec).unwrap();
        let s = eigenvalues(&v, &cfg(), 5).unwrap();
        assert_close(&s.eigenvalues, &[-5.0, 1.0, 3.0, 5.0, 7.0], 1e-6);
        for pair in s.eigenvalues.windows(2) {
            assert!(pair[1] - pair[0] > 1e-6);
        }
    }

    fn q18_params() -> Q18Params {
        let num = Polynomial::new(vec![int(0), int(-12), int(0), int(16), int(0), int(16)]);
        let den = Polynomial::new(vec![int(3), int(0), int(6), int(0), int(4), int(0), int(8)]);
        Q18Params {
            hbar: int(1),
            omega: int(1),
            alpha: int(5),
            beta: int(-8),
            epsilon: int(1),
            p4_solution: RationalFunction::new(num, den),
            offset: None,
        }
    }

    #[test]
    fn dressed_x_part_levels() {
        let (x_part, _) = q18_potential(&q18_params()).unwrap();
        let s = eigenvalues(&x_part, &cfg(), 4).unwrap();
        let third = 1.0 / 6.0;
        assert_close(
            &s.eigenvalues,
            &[-5.0 * third, 13.0 * third, 19.0 * third, 25.0 * third],
            1e-6,
        );
    }

    #[test]
    fn half_line_oscillator_keeps_odd_levels() {
        let v = crate::potentials::vd_potential(&VdCase::D2 {
            alpha1: int(2),
            hbar: int(1),
            beta: int(0),
        })
        .unwrap();
        let s = eigenvalues(&v, &cfg(), 3).unwrap();
        assert_close(&s.eigenvalues, &[1.5, 3.5, 5.5], 1e-5);
    }

    #[test]
    fn singular_sample_point_is_reported() {
        let f = |x: f64| {
            if (x - 0.25).abs() < 0.02 {
                f64::INFINITY
            } else {
                x * x
            }
        };
        match eigenvalues_of(&f, Convention::FullD2, Domain::FullLine, &cfg(), 2) {
            Err(Error::SingularPotentialAt(x)) => assert!((x - 0.25).abs() < 0.02),
            other => panic!("expected a singularity report, got {other:?}"),
        }
    }

    #[test]
    fn grid_validation() {
        let bad = GridConfig {
            half_width: 12.0,
            points: 4000,
        };
        let v = extend_oscillator(&ExtensionSpec::empty()).unwrap();
        assert!(matches!(eigenvalues(&v, &bad, 2), Err(Error::BadGrid(_))));
    }

    fn zero_modes() -> (WeightedFunction, WeightedFunction) {
        // ψ₀ = x(3 + 2x²)/(1 + 2x²)·e^{−x²/2}, χ = e^{−x²/2}/(1 + 2x²)
        let psi0 = WeightedFunction::new(
            RationalFunction::new(
                Polynomial::new(vec![int(0), int(3), int(0), int(2)]),
                Polynomial::new(vec![int(1), int(0), int(2)]),
            ),
            -1,
        );
        let chi = WeightedFunction::new(
            RationalFunction::new(
                Polynomial::one(),
                Polynomial::new(vec![int(1), int(0), int(2)]),
            ),
            -1,
        );
        (psi0, chi)
    }

    #[test]
    fn zero_modes_are_normalizable() {
        let (psi0, chi) = zero_modes();
        assert!(norm_squared(&psi0, &cfg()).unwrap().normalizable);
        assert!(norm_squared(&chi, &cfg()).unwrap().normalizable);
        let growing = WeightedFunction::from_polynomial(Polynomial::one(), 1);
        assert!(!norm_squared(&growing, &cfg()).unwrap().normalizable);
    }

    #[test]
    fn oscillator_ladder_is_orthonormal() {
        // a† = (D + x)† = −D + x in FullD2 units.
        let a_dag = DifferentialOperator::first_order(RationalFunction::x(), int(1)).adjoint();
        let ground = WeightedFunction::from_polynomial(Polynomial::one(), -1);
        let out = ladder_states(&a_dag, &ground, 3, &cfg()).unwrap();
        assert_eq!(out.states.len(), 3);
        assert!(out.annihilated_at.is_none());
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((out.gram[i][j] - expected).abs() < 1e-8);
            }
        }
    }

    fn natural_ladder() -> (DifferentialOperator, DifferentialOperator) {
        let spec = ExtensionSpec::new(vec![2]).unwrap();
        let chain = DarbouxChain::from_seeds(&spec.adding_seeds()).unwrap();
        let lower = DifferentialOperator::first_order(RationalFunction::x(), int(1));
        let a = chain.dress(&lower).unwrap();
        let a_dag = a.adjoint();
        (a, a_dag)
    }

    #[test]
    fn third_order_ladder_annihilates_all_three_zero_modes() {
        let (a, a_dag) = natural_ladder();
        let (psi0, chi) = zero_modes();
        assert!(a.apply(&psi0).unwrap().is_zero());
        assert!(a.apply(&chi).unwrap().is_zero());
        assert!(a_dag.apply(&chi).unwrap().is_zero());
    }

    #[test]
    fn dressed_ladder_states_match_the_dressed_spectrum() {
        let (_, a_dag) = natural_ladder();
        let (psi0, _) = zero_modes();
        let out = ladder_states(&a_dag, &psi0, 3, &cfg()).unwrap();
        assert_eq!(out.states.len(), 3);
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert!(out.gram[i][j].abs() < 1e-8);
                }
            }
        }
        let (x_part, _) = q18_potential(&q18_params()).unwrap();
        let h = x_part.hamiltonian();
        let expected = [13.0 / 6.0, 19.0 / 6.0, 25.0 / 6.0];
        let numeric = eigenvalues(&x_part, &cfg(), 4).unwrap();
        for (i, state) in out.states.iter().enumerate() {
            let e = rayleigh_quotient(&h, state, &cfg()).unwrap();
            assert!((e - expected[i]).abs() < 1e-6);
            // Rayleigh quotient sits on the matching numerical eigenvalue.
            assert!((e - numeric.eigenvalues[i + 1]).abs() < 1e-6);
        }
    }

    #[test]
    fn annihilation_is_reported_not_thrown() {
        let a = DifferentialOperator::first_order(RationalFunction::x(), int(1));
        let ground = WeightedFunction::from_polynomial(Polynomial::one(), -1);
        let out = ladder_states(&a, &ground, 3, &cfg()).unwrap();
        assert_eq!(out.states.len(), 1);
        assert_eq!(out.annihilated_at, Some(1));
    }

    #[test]
    fn rayleigh_quotient_of_oscillator_ground_state() {
        let v = extend_oscillator(&ExtensionSpec::empty()).unwrap();
        let h = v.hamiltonian();
        let ground = WeightedFunction::from_polynomial(Polynomial::one(), -1);
        let e = rayleigh_quotient(&h, &ground, &cfg()).unwrap();
        assert!((e - 1.0).abs() < 1e-9);
    }
}
