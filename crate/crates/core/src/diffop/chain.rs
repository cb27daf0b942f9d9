//! Darboux–Crum chains of first-order intertwiners built from seed
//! functions, and the ladder operators they generate. Conventions are the
//! full-line ones: base Hamiltonian H = −D² + x², oscillator energies
//! E = 2ν + 1, ladder spacing 2m_k + 2.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::{One, ToPrimitive, Zero};

use super::operator::DifferentialOperator;
use crate::exactmath::{
    log_laplacian_correction, wronskian, Polynomial, RationalFunction, WeightedFunction,
};
use crate::{int, Error, Rat, Result};

/// Chain of first-order factors A^{(i)} = D + W^{(i)} with
/// W^{(i)} = −(d/dx) ln φ^{(i)}, φ^{(i)} = W(φ₁..φ_i)/W(φ₁..φ_{i−1}).
#[derive(Clone, Debug)]
pub struct DarbouxChain {
    seeds: Vec<WeightedFunction>,
    superpotentials: Vec<RationalFunction>,
    /// φ^{(i)} as weighted functions (body may be a proper ratio).
    stages: Vec<WeightedFunction>,
    /// Wronskian of the full seed set.
    total_wronskian: Option<WeightedFunction>,
}

impl DarbouxChain {
    /// The empty chain: no factors, composed operator = identity.
    pub fn trivial() -> Self {
        DarbouxChain {
            seeds: Vec::new(),
            superpotentials: Vec::new(),
            stages: Vec::new(),
            total_wronskian: None,
        }
    }

    pub fn from_seeds(seeds: &[WeightedFunction]) -> Result<Self> {
        if seeds.is_empty() {
            return Err(Error::EmptyWronskian);
        }
        let mut superpotentials = Vec::with_capacity(seeds.len());
        let mut stages = Vec::with_capacity(seeds.len());
        let mut prev: Option<WeightedFunction> = None;
        for i in 1..=seeds.len() {
            let wi = wronskian(&seeds[..i])?;
            if wi.is_zero() {
                return Err(Error::DegenerateSeedSet(i));
            }
            let stage = match &prev {
                None => wi.clone(),
                Some(p) => WeightedFunction::new(&wi.body / &p.body, wi.weight - p.weight),
            };
            // W^{(i)} = −(ln stage)′ = −b′/b − w·x
            let b = &stage.body;
            let logderiv = &b.derivative() / b;
            let wx = RationalFunction::from_polynomial(Polynomial::monomial(int(stage.weight), 1));
            superpotentials.push(&(-&logderiv) - &wx);
            stages.push(stage);
            prev = Some(wi);
        }
        Ok(DarbouxChain {
            seeds: seeds.to_vec(),
            superpotentials,
            stages,
            total_wronskian: prev,
        })
    }

    pub fn len(&self) -> usize {
        self.superpotentials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.superpotentials.is_empty()
    }

    pub fn seeds(&self) -> &[WeightedFunction] {
        &self.seeds
    }

    pub fn superpotentials(&self) -> &[RationalFunction] {
        &self.superpotentials
    }

    /// φ^{(i)}, 1-based index.
    pub fn stage(&self, i: usize) -> &WeightedFunction {
        &self.stages[i - 1]
    }

    /// A^{(i)} = D + W^{(i)}, 1-based index.
    pub fn factor(&self, i: usize) -> DifferentialOperator {
        DifferentialOperator::first_order(self.superpotentials[i - 1].clone(), Rat::one())
    }

    /// 𝒜 = A^{(n)}···A^{(1)}; identity for the trivial chain.
    pub fn composed(&self) -> DifferentialOperator {
        let mut acc = DifferentialOperator::identity(Rat::one());
        for i in 1..=self.len() {
            acc = self.factor(i).compose(&acc).expect("uniform hbar");
        }
        acc
    }

    /// 𝒜† = A^{(1)}†···A^{(n)}†.
    pub fn composed_adjoint(&self) -> DifferentialOperator {
        self.composed().adjoint()
    }

    /// Total correction −2(ln W(φ₁..φ_n))″ to the base potential, split as
    /// (rational part, constant part). The trivial chain contributes (0, 0).
    pub fn potential_shift(&self) -> (RationalFunction, Rat) {
        match &self.total_wronskian {
            None => (RationalFunction::zero(), Rat::zero()),
            Some(w) => log_laplacian_correction(w).expect("nonzero Wronskian"),
        }
    }

    /// Per-stage corrections −2(ln φ^{(i)})″; their sum telescopes to
    /// `potential_shift`.
    pub fn stage_corrections(&self) -> Vec<(RationalFunction, Rat)> {
        self.stages
            .iter()
            .map(|s| log_laplacian_correction(s).expect("nonzero stage"))
            .collect()
    }

    /// 𝒜 ∘ op ∘ 𝒜†.
    pub fn dress(&self, op: &DifferentialOperator) -> Result<DifferentialOperator> {
        self.composed()
            .compose(op)?
            .compose(&self.composed_adjoint())
    }
}

/// Ladder pair for a rational extension, built from a state-adding chain 𝒜
/// and a state-deleting chain 𝒜̄ that reach the same partner potential up to
/// the constant 2m_k + 2:
///   c = 𝒜̄ ∘ 𝒜†,   c† = 𝒜 ∘ 𝒜̄†,   order m_k + 1.
#[derive(Clone, Debug)]
pub struct LadderPair {
    pub c: DifferentialOperator,
    pub c_dag: DifferentialOperator,
    pub mk: u32,
}

pub fn ladder_from_chains(adding: &DarbouxChain, deleting: &DarbouxChain) -> Result<LadderPair> {
    let (add_rat, add_const) = adding.potential_shift();
    let (del_rat, del_const) = deleting.potential_shift();
    if add_rat != del_rat {
        return Err(Error::ChainsNotEquivalent(
            "rational parts of the partner potentials differ".to_string(),
        ));
    }
    let delta = &del_const - &add_const;
    // delta = 2m_k + 2 for integer m_k ≥ 0
    let two = int(2);
    let mk_rat = (&delta - &two) / &two;
    if !mk_rat.is_integer() || mk_rat < Rat::zero() {
        return Err(Error::ChainsNotEquivalent(format!(
            "constant offset {delta} is not of the form 2m+2"
        )));
    }
    let mk = mk_rat
        .to_integer()
        .to_u32()
        .ok_or_else(|| Error::ChainsNotEquivalent("ladder index out of range".to_string()))?;
    let c = deleting.composed().compose(&adding.composed_adjoint())?;
    let c_dag = adding.composed().compose(&deleting.composed_adjoint())?;
    Ok(LadderPair { c, c_dag, mk })
}

/// Outcome of the polynomial-Heisenberg-algebra check.
#[derive(Clone, Debug, PartialEq)]
pub struct PhaReport {
    /// [H, c†] = (2m_k+2)·c†.
    pub raising_ok: bool,
    /// [H, c] = −(2m_k+2)·c.
    pub lowering_ok: bool,
    /// [c, c†] reduced as a polynomial in H, when the reduction succeeds.
    pub closure: Option<Polynomial>,
    /// The commutation spacing 2m_k + 2.
    pub spacing: Rat,
}

impl PhaReport {
    pub fn closure_ok(&self) -> bool {
        self.closure.is_some()
    }

    pub fn all_ok(&self) -> bool {
        self.raising_ok && self.lowering_ok && self.closure.is_some()
    }
}

/// Check the three defining relations of an m_k-th order polynomial
/// Heisenberg algebra for the given Hamiltonian and ladder pair. Failures
/// are reported, not raised.
pub fn verify_pha(
    h: &DifferentialOperator,
    c: &DifferentialOperator,
    c_dag: &DifferentialOperator,
    mk: u32,
) -> Result<PhaReport> {
    let spacing = int(2 * mk as i64 + 2);
    let raise = h.commutator(c_dag)?;
    let lower = h.commutator(c)?;
    let raising_ok = raise == c_dag.scale(&spacing);
    let lowering_ok = lower == c.scale(&(-&spacing));
    let closure = c.commutator(c_dag)?.as_polynomial_in(h);
    Ok(PhaReport {
        raising_ok,
        lowering_ok,
        closure,
        spacing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{hermite, pseudo_hermite};

    fn phi(m: u32) -> WeightedFunction {
        WeightedFunction::from_polynomial(pseudo_hermite(m), 1)
    }

    fn psi(n: u32) -> WeightedFunction {
        WeightedFunction::from_polynomial(hermite(n), -1)
    }

    fn oscillator_h() -> DifferentialOperator {
        let v = WeightedFunction::from_polynomial(Polynomial::monomial(int(1), 2), 0);
        DifferentialOperator::schrodinger_full(v, Rat::one())
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(
            Polynomial::new(num.iter().map(|&c| int(c)).collect()),
            Polynomial::new(den.iter().map(|&c| int(c)).collect()),
        )
    }

    #[test]
    fn single_seed_ground_state_superpotential() {
        // seeds [ψ₀]: W^{(1)} = −(ln e^{−x²/2})′ = x
        let chain = DarbouxChain::from_seeds(&[psi(0)]).unwrap();
        assert_eq!(chain.superpotentials()[0], RationalFunction::x());
    }

    #[test]
    fn single_seed_phi2_superpotential() {
        // seeds [φ₂]: W^{(1)} = −x − 8x/(4x²+2)
        let chain = DarbouxChain::from_seeds(&[phi(2)]).unwrap();
        let expect = &(-&RationalFunction::x()) - &rf(&[0, 8], &[2, 0, 4]);
        assert_eq!(chain.superpotentials()[0], expect);
    }

    #[test]
    fn two_seed_chain_stage_ratio() {
        // φ^{(2)} = W(φ₂,φ₃)/φ₂
        let chain = DarbouxChain::from_seeds(&[phi(2), phi(3)]).unwrap();
        assert_eq!(chain.len(), 2);
        let w23 = wronskian(&[phi(2), phi(3)]).unwrap();
        let expect = WeightedFunction::new(&w23.body / &phi(2).body, 1);
        assert_eq!(chain.stage(2), &expect);
        assert_eq!(chain.composed().order(), Some(2));
    }

    #[test]
    fn degenerate_seeds_are_rejected() {
        let err = DarbouxChain::from_seeds(&[phi(2), phi(2)]);
        assert_eq!(err.unwrap_err(), Error::DegenerateSeedSet(2));
    }

    #[test]
    fn stage_corrections_telescope() {
        let chain = DarbouxChain::from_seeds(&[phi(2), phi(3)]).unwrap();
        let (total_rat, total_const) = chain.potential_shift();
        let mut acc_rat = RationalFunction::zero();
        let mut acc_const = Rat::zero();
        for (r, c) in chain.stage_corrections() {
            acc_rat = &acc_rat + &r;
            acc_const = acc_const + c;
        }
        assert_eq!(acc_rat, total_rat);
        assert_eq!(acc_const, total_const);
    }

    #[test]
    fn intertwining_relation_per_stage() {
        // A^{(i)}·H^{(i)} = H^{(i+1)}·A^{(i)} with H^{(i+1)} = H^{(i)} + Δ_i
        let chain = DarbouxChain::from_seeds(&[phi(2), phi(3)]).unwrap();
        let mut h = oscillator_h();
        for i in 1..=chain.len() {
            let a = chain.factor(i);
            let (dr, dc) = log_laplacian_correction(chain.stage(i)).unwrap();
            let mut h_next = h.clone();
            let bump = WeightedFunction::from_rational(&dr + &RationalFunction::constant(dc));
            h_next.set_term(0, h_next.term(0).try_add(&bump).unwrap());
            let lhs = a.compose(&h).unwrap();
            let rhs = h_next.compose(&a).unwrap();
            assert_eq!(lhs, rhs, "stage {i}");
            h = h_next;
        }
    }

    #[test]
    fn seeds_are_formal_zero_modes_of_the_chain() {
        // 𝒜 annihilates every seed
        let seeds = [phi(2), phi(3)];
        let chain = DarbouxChain::from_seeds(&seeds).unwrap();
        let a = chain.composed();
        for s in &seeds {
            assert!(a.apply(s).unwrap().is_zero());
        }
    }

    #[test]
    fn trivial_chain_is_identity() {
        let chain = DarbouxChain::trivial();
        assert!(chain.is_empty());
        assert_eq!(chain.composed(), DifferentialOperator::identity(Rat::one()));
        let (r, c) = chain.potential_shift();
        assert!(r.is_zero());
        assert!(c.is_zero());
    }

    #[test]
    fn from_seeds_rejects_empty() {
        assert_eq!(
            DarbouxChain::from_seeds(&[]).unwrap_err(),
            Error::EmptyWronskian
        );
    }

    #[test]
    fn oscillator_ladder_from_trivial_chains() {
        // adding = trivial, deleting = [ψ₀] → c = D + x, m_k = 0
        let adding = DarbouxChain::trivial();
        let deleting = DarbouxChain::from_seeds(&[psi(0)]).unwrap();
        let ladder = ladder_from_chains(&adding, &deleting).unwrap();
        assert_eq!(ladder.mk, 0);
        assert_eq!(
            ladder.c,
            DifferentialOperator::first_order(RationalFunction::x(), Rat::one())
        );
        let report = verify_pha(&oscillator_h(), &ladder.c, &ladder.c_dag, 0).unwrap();
        assert!(report.all_ok());
        // [c, c†] = 2 for the oscillator in these units
        assert_eq!(report.closure.unwrap(), Polynomial::constant(int(2)));
    }

    #[test]
    fn one_step_extension_ladder_m2() {
        // adding [φ₂] vs deleting [ψ₁, ψ₂]: same rational part, offset 6
        let adding = DarbouxChain::from_seeds(&[phi(2)]).unwrap();
        let deleting = DarbouxChain::from_seeds(&[psi(1), psi(2)]).unwrap();
        let ladder = ladder_from_chains(&adding, &deleting).unwrap();
        assert_eq!(ladder.mk, 2);
        assert_eq!(ladder.c.order(), Some(3));
        assert_eq!(ladder.c_dag.order(), Some(3));
        assert_eq!(ladder.c_dag, ladder.c.adjoint());
    }

    #[test]
    fn mismatched_chains_are_rejected() {
        let adding = DarbouxChain::from_seeds(&[phi(2)]).unwrap();
        let deleting = DarbouxChain::from_seeds(&[psi(0)]).unwrap();
        assert!(matches!(
            ladder_from_chains(&adding, &deleting),
            Err(Error::ChainsNotEquivalent(_))
        ));
    }

    #[test]
    fn perturbed_ladder_fails_raising_check() {
        let adding = DarbouxChain::trivial();
        let deleting = DarbouxChain::from_seeds(&[psi(0)]).unwrap();
        let ladder = ladder_from_chains(&adding, &deleting).unwrap();
        let mut bad = ladder.c_dag.clone();
        bad.set_term(
            0,
            bad.term(0)
                .try_add(&WeightedFunction::from_rational(RationalFunction::x()))
                .unwrap(),
        );
        let report = verify_pha(&oscillator_h(), &ladder.c, &bad, 0).unwrap();
        assert!(!report.raising_ok);
    }

    #[test]
    fn dress_oscillator_lowering_through_chain() {
        // a = 𝒜 (D+x) 𝒜† has order 3 for the m=2 extension
        let chain = DarbouxChain::from_seeds(&[phi(2)]).unwrap();
        let a_osc = DifferentialOperator::first_order(RationalFunction::x(), Rat::one());
        let dressed = chain.dress(&a_osc).unwrap();
        assert_eq!(dressed.order(), Some(3));
    }
}
