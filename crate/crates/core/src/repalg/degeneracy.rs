//! Ladder structure polynomial and 2D degeneracy combinatorics.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::report::{Provenance, SpectrumReport, SpectrumRow};
use crate::exactmath::Polynomial;
use crate::potentials::{Convention, ExtensionSpec};
use crate::{int, rat, Error, Rat, Result};

fn require_regular(spec: &ExtensionSpec, what: &str) -> Result<()> {
    if !spec.is_regular() {
        return Err(Error::SingularExtension(format!(
            "{what} needs a regular index set, got {:?}",
            spec.ms()
        )));
    }
    Ok(())
}

/// Structure polynomial of the (m_k+1)th-order ladder pair,
///
/// ```text
/// Q(H) = ∏_{i=1..k} (H + 2m_i + 1) · ∏_{j=1..m_k, j∉{m_k−m_i}} (H − 2j − 1),
/// ```
///
/// a degree-(m_k+1) polynomial in a formal symbol H whose zeros are the
/// bottoms of the ladder sequences of the extended Hamiltonian. The empty
/// index set degenerates to the constant 1.
pub fn q_ko(spec: &ExtensionSpec) -> Result<Polynomial> {
    require_regular(spec, "q_ko")?;
    let ms = spec.ms();
    let Some(&mk) = ms.last() else {
        return Ok(Polynomial::one());
    };
    let mut roots: Vec<Rat> = ms.iter().map(|&m| int(-(2 * m as i64 + 1))).collect();
    let excluded: Vec<u32> = ms[..ms.len() - 1].iter().map(|&m| mk - m).collect();
    for j in 1..=mk {
        if !excluded.contains(&j) {
            roots.push(int(2 * j as i64 + 1));
        }
    }
    Ok(Polynomial::from_roots(&roots))
}

/// Enumerate the separable levels E = 2N, N = ν_x + ν_y + 1 with
/// ν_x ∈ {−m_i−1} ∪ {0, 1, …} and ν_y ∈ {0, 1, …}, binned by N over
/// `lo..=hi`. Energies are in the convention with levels 2ν + 1 on each
/// axis.
pub fn degeneracy_bruteforce(spec: &ExtensionSpec, lo: i64, hi: i64) -> Result<SpectrumReport> {
    require_regular(spec, "degeneracy_bruteforce")?;
    if lo > hi {
        return Err(Error::InvalidSpec(String::from("empty level range")));
    }
    let mut nu_xs: Vec<i64> = spec.ms().iter().map(|&m| -(m as i64) - 1).collect();
    nu_xs.extend(0..hi.max(0));
    let mut bins: BTreeMap<i64, u64> = BTreeMap::new();
    for &nu_x in &nu_xs {
        let mut nu_y = 0i64;
        loop {
            let n = nu_x + nu_y + 1;
            if n > hi {
                break;
            }
            if n >= lo {
                *bins.entry(n).or_insert(0) += 1;
            }
            nu_y += 1;
        }
    }
    let rows = bins
        .into_iter()
        .map(|(n, d)| SpectrumRow {
            index: n,
            energy: int(2 * n),
            degeneracy: d,
            provenance: Provenance::Combinatorial,
        })
        .collect();
    SpectrumReport::new(Convention::FullD2, rows)
}

/// Closed form for the same counting: k−j+1 on the band −m_j ≤ N ≤ −m_{j−1}−1
/// (j = 2..k), k on −m_1 ≤ N ≤ 0, and N+k from N = 1 up. Below −m_k there are
/// no states.
pub fn degeneracy_formula(spec: &ExtensionSpec, n: i64) -> Result<u64> {
    require_regular(spec, "degeneracy_formula")?;
    let ms = spec.ms();
    let k = ms.len();
    let floor = ms.last().map_or(1, |&mk| -(mk as i64));
    if n < floor {
        return Err(Error::BelowGroundLevel(n));
    }
    if n >= 1 {
        return Ok((n + k as i64) as u64);
    }
    if n >= -(ms[0] as i64) {
        return Ok(k as u64);
    }
    // n sits in the band of the smallest j with −m_j ≤ n
    let j = (2..=k)
        .find(|&j| n >= -(ms[j - 1] as i64))
        .expect("bands tile down to -m_k");
    Ok((k - j + 1) as u64)
}

/// One stack of equal-s modules at the level N = λ(m₁+1) + μ.
#[derive(Debug, Clone, PartialEq)]
pub struct Multiplet {
    pub lambda: i64,
    pub mu: i64,
    /// Integer or half-integer label; the stack holds 2s+1 states per copy.
    pub s: Rat,
    pub multiplicity: u64,
}

impl Multiplet {
    pub fn level(&self, m1: u32) -> i64 {
        self.lambda * (m1 as i64 + 1) + self.mu
    }

    /// multiplicity · (2s + 1).
    pub fn degeneracy_contribution(&self) -> u64 {
        let per = &(&int(2) * &self.s) + &int(1);
        debug_assert!(per.is_integer());
        self.multiplicity * u64::try_from(per.to_integer()).expect("2s+1 is a positive integer")
    }
}

fn multiplets_at(lambda: i64, mu: i64, m1: u32) -> Vec<(Rat, u64)> {
    let half = |n: i64| rat(n, 2);
    if lambda == -1 {
        alloc::vec![(int(0), 1)]
    } else if lambda == 0 && mu == 0 {
        alloc::vec![(int(0), 1)]
    } else if lambda == 0 {
        alloc::vec![(half(1), 1), (int(0), (mu - 1) as u64)]
    } else if mu == 0 {
        alloc::vec![(half(lambda), 1), (half(lambda - 1), m1 as u64)]
    } else {
        alloc::vec![
            (half(lambda + 1), 1),
            (half(lambda), (mu - 1) as u64),
            (half(lambda - 1), (m1 as i64 - mu + 1) as u64),
        ]
    }
}

/// Multiplet decomposition of each level of the one-step (k = 1) system with
/// index m₁, for N over `lo..=hi`. Levels are encoded as N = λ(m₁+1) + μ with
/// 0 ≤ μ ≤ m₁; the decomposition per (λ, μ) is
///
/// ```text
/// λ = −1           → s = 0
/// λ = 0,  μ = 0    → s = 0
/// λ = 0,  μ ≥ 1    → s = 1/2, and 0 ×(μ−1)
/// λ ≥ 1,  μ = 0    → s = λ/2, and (λ−1)/2 ×m₁
/// λ ≥ 1,  μ ≥ 1    → s = (λ+1)/2, λ/2 ×(μ−1), (λ−1)/2 ×(m₁−μ+1)
/// ```
///
/// with Σ multiplicity·(2s+1) equal to the level degeneracy. Copies with
/// multiplicity zero are dropped.
pub fn multiplet_table(m1: u32, lo: i64, hi: i64) -> Result<Vec<Multiplet>> {
    if m1 == 0 {
        return Err(Error::InvalidSpec(String::from("m1 must be positive")));
    }
    if lo < -(m1 as i64) {
        return Err(Error::BelowGroundLevel(lo));
    }
    if lo > hi {
        return Err(Error::InvalidSpec(String::from("empty level range")));
    }
    let width = m1 as i64 + 1;
    let mut out = Vec::new();
    for n in lo..=hi {
        let lambda = n.div_euclid(width);
        let mu = n.rem_euclid(width);
        for (s, multiplicity) in multiplets_at(lambda, mu, m1) {
            if multiplicity > 0 {
                out.push(Multiplet {
                    lambda,
                    mu,
                    s,
                    multiplicity,
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn spec(ms: &[u32]) -> ExtensionSpec {
        ExtensionSpec::new(ms.to_vec()).unwrap()
    }

    #[test]
    fn structure_polynomial_one_step() {
        assert_eq!(
            q_ko(&spec(&[2])).unwrap(),
            Polynomial::from_roots(&[int(-5), int(3), int(5)])
        );
    }

    #[test]
    fn structure_polynomial_two_step_skips_the_difference() {
        assert_eq!(
            q_ko(&spec(&[2, 3])).unwrap(),
            Polynomial::from_roots(&[int(-5), int(-7), int(5), int(7)])
        );
    }

    #[test]
    fn structure_polynomial_trivial_and_degree() {
        assert_eq!(q_ko(&ExtensionSpec::empty()).unwrap(), Polynomial::one());
        for ms in [vec![2u32], vec![2, 3], vec![4], vec![2, 5]] {
            let s = spec(&ms);
            assert_eq!(
                q_ko(&s).unwrap().degree(),
                Some(*ms.last().unwrap() as usize + 1)
            );
        }
        assert!(q_ko(&spec(&[3])).is_err());
    }

    #[test]
    fn bruteforce_one_step_display() {
        let rep = degeneracy_bruteforce(&spec(&[2]), -2, 6).unwrap();
        let expected = [1u64, 1, 1, 2, 3, 4, 5, 6, 7];
        for (n, want) in (-2i64..=6).zip(expected) {
            assert_eq!(rep.degeneracy_at(n), Some(want), "N = {n}");
        }
        assert_eq!(rep.rows[0].energy, int(-4));
        assert!(rep.degeneracy_at(-3).is_none());
    }

    #[test]
    fn formula_matches_bruteforce() {
        for ms in [vec![2u32], vec![2, 3], vec![4], vec![2, 3, 6]] {
            let s = spec(&ms);
            let floor = -(*ms.last().unwrap() as i64);
            let rep = degeneracy_bruteforce(&s, floor, 12).unwrap();
            for n in floor..=12 {
                assert_eq!(
                    degeneracy_formula(&s, n).unwrap(),
                    rep.degeneracy_at(n).unwrap_or(0),
                    "spec {ms:?}, N = {n}"
                );
            }
        }
    }

    #[test]
    fn formula_spot_values() {
        assert_eq!(degeneracy_formula(&spec(&[2]), 3).unwrap(), 4);
        assert_eq!(degeneracy_formula(&spec(&[2, 3]), -3).unwrap(), 1);
        assert_eq!(degeneracy_formula(&spec(&[2]), -1).unwrap(), 1);
        assert!(matches!(
            degeneracy_formula(&spec(&[2]), -3),
            Err(Error::BelowGroundLevel(-3))
        ));
        // plain oscillator: no level below N = 1
        assert_eq!(degeneracy_formula(&ExtensionSpec::empty(), 4).unwrap(), 4);
        assert!(degeneracy_formula(&ExtensionSpec::empty(), 0).is_err());
    }

    #[test]
    fn multiplet_spot_rows() {
        let rows = multiplet_table(2, 3, 3).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!((rows[0].lambda, rows[0].mu), (1, 0));
        assert_eq!((rows[0].s.clone(), rows[0].multiplicity), (rat(1, 2), 1));
        assert_eq!((rows[1].s.clone(), rows[1].multiplicity), (int(0), 2));
        assert_eq!(
            rows.iter()
                .map(|r| r.degeneracy_contribution())
                .sum::<u64>(),
            4
        );

        let ground = multiplet_table(2, 0, 0).unwrap();
        assert_eq!(ground.len(), 1);
        assert_eq!((ground[0].s.clone(), ground[0].multiplicity), (int(0), 1));

        // N = 1 keeps only the half-integer copy; the 0^{μ−1} stack is empty
        let first = multiplet_table(2, 1, 1).unwrap();
        assert_eq!(first.len(), 1);
        assert_eq!((first[0].s.clone(), first[0].multiplicity), (rat(1, 2), 1));
        assert_eq!(first[0].degeneracy_contribution(), 2);
    }

    #[test]
    fn multiplet_sums_reproduce_the_degeneracies() {
        for m1 in [2u32, 4] {
            let s = spec(&[m1]);
            for n in -(m1 as i64)..=20 {
                let total: u64 = multiplet_table(m1, n, n)
                    .unwrap()
                    .iter()
                    .map(|r| r.degeneracy_contribution())
                    .sum();
                assert_eq!(
                    total,
                    degeneracy_formula(&s, n).unwrap(),
                    "m1 = {m1}, N = {n}"
                );
            }
        }
    }

    #[test]
    fn multiplet_table_guards() {
        assert!(matches!(
            multiplet_table(2, -3, 5),
            Err(Error::BelowGroundLevel(-3))
        ));
        assert!(multiplet_table(0, 0, 5).is_err());
        assert!(multiplet_table(2, 5, 0).is_err());
    }

    #[test]
    fn levels_round_trip_through_the_encoding() {
        for n in -2i64..=20 {
            for row in multiplet_table(2, n, n).unwrap() {
                assert_eq!(row.level(2), n);
            }
        }
    }
}
