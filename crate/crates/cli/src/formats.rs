//! Artifact shapes shared by the subcommands. Exact numbers travel as
//! strings ("13/6", "-2"), polynomials as ascending coefficient lists, and
//! every writer is deterministic: no timestamps, no map iteration order,
//! CSV with '.' decimals.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use superint_core::diffop::{Grat, PairKind, PairType, PhaReport};
use superint_core::exactmath::{Polynomial, RationalFunction};
use superint_core::potentials::{Convention, Domain, Potential1D};
use superint_core::repalg::{DiffReport, Multiplet, Provenance, SpectrumReport, UnirrepRow};
use superint_core::spectral::NumericSpectrum;
use superint_core::Rat;

pub fn rat_to_string(r: &Rat) -> String {
    r.to_string()
}

pub fn rat_from_string(s: &str) -> Result<Rat, String> {
    Rat::from_str(s.trim()).map_err(|_| format!("not an exact rational: {s:?}"))
}

fn poly_to_strings(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(Rat::to_string).collect()
}

fn poly_from_strings(v: &[String]) -> Result<Polynomial, String> {
    let coeffs = v
        .iter()
        .map(|s| rat_from_string(s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Polynomial::new(coeffs))
}

/// num/den hold ascending coefficients, so [−8, 0, 16] is 16z² − 8.
#[derive(Serialize, Deserialize)]
pub struct RationalDto {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl RationalDto {
    pub fn from_fn(f: &RationalFunction) -> Self {
        RationalDto {
            num: poly_to_strings(f.numerator()),
            den: poly_to_strings(f.denominator()),
        }
    }

    pub fn into_fn(&self) -> Result<RationalFunction, String> {
        let den = poly_from_strings(&self.den)?;
        if den.is_zero() {
            return Err(String::from("denominator is identically zero"));
        }
        Ok(RationalFunction::new(poly_from_strings(&self.num)?, den))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "scheme", rename_all = "snake_case")]
pub enum ConventionDto {
    /// H = −d²/dx² + V
    FullD2,
    /// H = −(ħ²/2) d²/dx² + V
    HalfP2 { hbar: String, omega: String },
}

impl ConventionDto {
    pub fn from_convention(c: &Convention) -> Self {
        match c {
            Convention::FullD2 => ConventionDto::FullD2,
            Convention::HalfP2 { hbar, omega } => ConventionDto::HalfP2 {
                hbar: rat_to_string(hbar),
                omega: rat_to_string(omega),
            },
        }
    }

    pub fn into_convention(&self) -> Result<Convention, String> {
        Ok(match self {
            ConventionDto::FullD2 => Convention::FullD2,
            ConventionDto::HalfP2 { hbar, omega } => Convention::HalfP2 {
                hbar: rat_from_string(hbar)?,
                omega: rat_from_string(omega)?,
            },
        })
    }
}

#[derive(Serialize, Deserialize, Clone, Copy)]
#[serde(rename_all = "snake_case")]
pub enum DomainDto {
    FullLine,
    HalfLine,
}

/// V(x) = quadratic·x² + rational(x) + constant.
#[derive(Serialize, Deserialize)]
pub struct PotentialDto {
    pub quadratic: String,
    pub rational: RationalDto,
    pub constant: String,
    pub convention: ConventionDto,
    pub domain: DomainDto,
}

impl PotentialDto {
    pub fn from_potential(v: &Potential1D) -> Self {
        PotentialDto {
            quadratic: rat_to_string(&v.quadratic),
            rational: RationalDto::from_fn(&v.rational_part),
            constant: rat_to_string(&v.constant),
            convention: ConventionDto::from_convention(&v.convention),
            domain: match v.domain {
                Domain::FullLine => DomainDto::FullLine,
                Domain::HalfLine => DomainDto::HalfLine,
            },
        }
    }

    pub fn into_potential(&self) -> Result<Potential1D, String> {
        Ok(Potential1D {
            quadratic: rat_from_string(&self.quadratic)?,
            rational_part: self.rational.into_fn()?,
            constant: rat_from_string(&self.constant)?,
            convention: self.convention.into_convention()?,
            domain: match self.domain {
                DomainDto::FullLine => Domain::FullLine,
                DomainDto::HalfLine => Domain::HalfLine,
            },
        })
    }
}

#[derive(Serialize)]
pub struct Q18Dto {
    pub x_part: PotentialDto,
    pub y_part: PotentialDto,
}

#[derive(Serialize)]
pub struct EquivalenceDto {
    pub ms: Vec<u32>,
    /// The exact constant deleting − adding, expected 2m_k + 2.
    pub shift: String,
    pub expected: String,
    pub verified: bool,
}

#[derive(Serialize)]
pub struct SpectrumDto {
    pub eigenvalues: Vec<f64>,
    pub estimated_error: Vec<f64>,
    pub convention: ConventionDto,
}

impl SpectrumDto {
    pub fn from_spectrum(s: &NumericSpectrum) -> Self {
        SpectrumDto {
            eigenvalues: s.eigenvalues.clone(),
            estimated_error: s.estimated_error.clone(),
            convention: ConventionDto::from_convention(&s.convention),
        }
    }
}

pub fn spectrum_csv(s: &NumericSpectrum) -> String {
    let mut out = String::from("level,energy,estimated_error\n");
    for (i, (e, err)) in s.eigenvalues.iter().zip(&s.estimated_error).enumerate() {
        let _ = writeln!(out, "{i},{e},{err}");
    }
    out
}

pub fn provenance_name(p: Provenance) -> &'static str {
    match p {
        Provenance::Algebraic => "algebraic",
        Provenance::Ladder => "ladder",
        Provenance::Combinatorial => "combinatorial",
        Provenance::Numerical => "numerical",
    }
}

#[derive(Serialize)]
pub struct ReportRowDto {
    pub index: i64,
    pub energy: String,
    pub degeneracy: u64,
    pub provenance: &'static str,
}

#[derive(Serialize)]
pub struct ReportDto {
    pub convention: ConventionDto,
    pub rows: Vec<ReportRowDto>,
}

impl ReportDto {
    pub fn from_report(r: &SpectrumReport) -> Self {
        ReportDto {
            convention: ConventionDto::from_convention(&r.convention),
            rows: r
                .rows
                .iter()
                .map(|row| ReportRowDto {
                    index: row.index,
                    energy: rat_to_string(&row.energy),
                    degeneracy: row.degeneracy,
                    provenance: provenance_name(row.provenance),
                })
                .collect(),
        }
    }
}

pub fn report_csv(r: &SpectrumReport) -> String {
    let mut out = String::from("N,energy,degeneracy,provenance\n");
    for row in &r.rows {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            row.index,
            row.energy,
            row.degeneracy,
            provenance_name(row.provenance)
        );
    }
    out
}

#[derive(Serialize)]
pub struct DiffRowDto {
    pub index: i64,
    pub energy_delta: String,
    pub degeneracy_delta: i64,
}

#[derive(Serialize)]
pub struct DiffDto {
    pub rows: Vec<DiffRowDto>,
    pub left_only: Vec<i64>,
    pub right_only: Vec<i64>,
    pub identical: bool,
}

impl DiffDto {
    pub fn from_diff(d: &DiffReport) -> Self {
        DiffDto {
            rows: d
                .rows
                .iter()
                .map(|r| DiffRowDto {
                    index: r.index,
                    energy_delta: rat_to_string(&r.energy_delta),
                    degeneracy_delta: r.degeneracy_delta,
                })
                .collect(),
            left_only: d.left_only.clone(),
            right_only: d.right_only.clone(),
            identical: d.is_empty(),
        }
    }
}

pub fn diff_csv(d: &DiffReport) -> String {
    let mut out = String::from("N,energy_delta,degeneracy_delta\n");
    for r in &d.rows {
        let _ = writeln!(out, "{},{},{}", r.index, r.energy_delta, r.degeneracy_delta);
    }
    out
}

#[derive(Serialize)]
pub struct UnirrepRowDto {
    pub p: u32,
    pub energy: String,
    pub dimension: u32,
    pub admissible: bool,
}

pub fn unirreps_json(rows: &[UnirrepRow]) -> Vec<UnirrepRowDto> {
    rows.iter()
        .map(|r| UnirrepRowDto {
            p: r.p,
            energy: rat_to_string(&r.energy),
            dimension: r.dimension,
            admissible: r.admissible,
        })
        .collect()
}

pub fn unirreps_csv(rows: &[UnirrepRow]) -> String {
    let mut out = String::from("p,energy,dimension,admissible\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{},{}", r.p, r.energy, r.dimension, r.admissible);
    }
    out
}

#[derive(Serialize)]
pub struct MultipletDto {
    pub level: i64,
    pub lambda: i64,
    pub mu: i64,
    pub s: String,
    pub multiplicity: u64,
    /// multiplicity · (2s + 1)
    pub states: u64,
}

pub fn multiplets_json(m1: u32, rows: &[Multiplet]) -> Vec<MultipletDto> {
    rows.iter()
        .map(|m| MultipletDto {
            level: m.level(m1),
            lambda: m.lambda,
            mu: m.mu,
            s: rat_to_string(&m.s),
            multiplicity: m.multiplicity,
            states: m.degeneracy_contribution(),
        })
        .collect()
}

pub fn multiplets_csv(m1: u32, rows: &[Multiplet]) -> String {
    let mut out = String::from("N,lambda,mu,s,multiplicity,states\n");
    for m in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            m.level(m1),
            m.lambda,
            m.mu,
            m.s,
            m.multiplicity,
            m.degeneracy_contribution()
        );
    }
    out
}

#[derive(Serialize)]
pub struct PhaDto {
    pub ms: Vec<u32>,
    pub mk: u32,
    pub spacing: String,
    pub raising_ok: bool,
    pub lowering_ok: bool,
    /// [c, c†] as ascending coefficients of a polynomial in H, when it
    /// reduces to one.
    pub closure: Option<Vec<String>>,
    pub all_ok: bool,
}

impl PhaDto {
    pub fn from_report(ms: Vec<u32>, r: &PhaReport, mk: u32) -> Self {
        PhaDto {
            ms,
            mk,
            spacing: rat_to_string(&r.spacing),
            raising_ok: r.raising_ok,
            lowering_ok: r.lowering_ok,
            closure: r.closure.as_ref().map(poly_to_strings),
            all_ok: r.all_ok(),
        }
    }
}

#[derive(Serialize)]
pub struct GratDto {
    pub re: String,
    pub im: String,
}

impl GratDto {
    pub fn from_grat(g: &Grat) -> Self {
        GratDto {
            re: rat_to_string(&g.re),
            im: rat_to_string(&g.im),
        }
    }
}

#[derive(Serialize)]
pub struct ClassifyDto {
    pub kind: &'static str,
    pub alpha1: Option<GratDto>,
}

impl ClassifyDto {
    pub fn from_pair_type(t: &PairType) -> Self {
        ClassifyDto {
            kind: match t.kind {
                PairKind::Abelian => "abelian",
                PairKind::Heisenberg => "heisenberg",
                PairKind::Conformal => "conformal",
                PairKind::Ladder => "ladder",
                PairKind::None => "none",
            },
            alpha1: t.alpha1.as_ref().map(GratDto::from_grat),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    out.push('\n');
    out
}
