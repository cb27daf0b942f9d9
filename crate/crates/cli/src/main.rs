//! Command-line surface over the construction/verification library:
//! exact potentials and ladder checks in, JSON/CSV artifacts out.
//!
//! Exit codes: 0 success, 1 usage or input error (one-line diagnostic on
//! stderr), 2 verification failure (machine-readable report on stdout or
//! in --out, one-line summary on stderr).

mod expr;
mod formats;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use superint_core::diffop::{
    classify_pair, ladder_from_chains, momentum_polynomial, verify_pha, ComplexOperator,
    DarbouxChain, DifferentialOperator,
};
use superint_core::exactmath::WeightedFunction;
use superint_core::potentials::{
    deleting_equivalent, extend_oscillator, painleve_residual, q18_potential, Convention,
    ExtensionSpec, Potential1D, Q18Params,
};
use superint_core::repalg::{
    algebraic_spectrum, compare_reports, degeneracy_bruteforce, degeneracy_formula,
    enumerate_unirreps, ladder_spectrum, multiplet_table, Positivity, Provenance, SpectrumReport,
    SpectrumRow, StructureFunctionFamily, UnirrepAssignment,
};
use superint_core::spectral::{eigenvalues, GridConfig};
use superint_core::{int, Rat};

use formats::{
    diff_csv, multiplets_csv, multiplets_json, rat_from_string, rat_to_string, report_csv,
    spectrum_csv, to_json, unirreps_csv, unirreps_json, ClassifyDto, DiffDto, EquivalenceDto,
    PhaDto, PotentialDto, Q18Dto, ReportDto, SpectrumDto,
};

#[derive(Parser)]
#[command(
    name = "superint",
    about = "Exact constructions and checks for rationally extended oscillators",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Tower,
    Singlet,
    Doublet,
}

#[derive(Clone, Copy, ValueEnum)]
enum PositivityArg {
    /// Admit p only when the structure function is positive at 1..p.
    Strict,
    /// Reproduce the stated ranges even where positivity fails.
    Stated,
}

#[derive(Clone, Copy, ValueEnum)]
enum DegeneracySource {
    Bruteforce,
    Formula,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportKind {
    /// Algebraic counting: degeneracies 1, 1, 1, then N−2.
    Deg1,
    /// Ladder counting: degeneracies 1, 1, 1, then N−1.
    Deg2,
}

#[derive(Args)]
struct MsArg {
    /// Seed indices m1<m2<…, comma separated (e.g. 2 or 2,3).
    #[arg(long, value_delimiter = ',', required = true)]
    ms: Vec<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Build the k-step rational extension of the oscillator as an exact
    /// potential artifact.
    Extend {
        #[command(flatten)]
        ms: MsArg,
        /// Write the JSON artifact here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also sample V(x) to a plot-ready CSV.
        #[arg(long)]
        plot: Option<PathBuf>,
        #[arg(long, default_value_t = -6.0, allow_negative_numbers = true)]
        xmin: f64,
        #[arg(long, default_value_t = 6.0, allow_negative_numbers = true)]
        xmax: f64,
        #[arg(long, default_value_t = 241)]
        samples: usize,
    },
    /// Check that the state-deleting construction differs from the
    /// state-adding one by exactly the constant 2m_k + 2.
    Equivalence {
        #[command(flatten)]
        ms: MsArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve a potential artifact numerically for its lowest eigenvalues.
    Spectrum {
        /// JSON potential artifact (as written by `extend` or `q18 --x-out`).
        #[arg(long)]
        potential: PathBuf,
        #[arg(long, default_value_t = 5)]
        count: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate deformed-oscillator modules of one structure-function
    /// family up to p_max.
    Unirreps {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 8)]
        pmax: u32,
        #[arg(long, value_enum, default_value_t = PositivityArg::Strict)]
        positivity: PositivityArg,
        #[arg(long, default_value = "1")]
        hbar: String,
        #[arg(long, default_value = "1")]
        omega: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate level degeneracies of a two-dimensional extension by state
    /// counting or by the closed-form expression.
    Degeneracy {
        #[command(flatten)]
        ms: MsArg,
        /// Lowest level N (defaults to the ground level −m_k).
        #[arg(long, allow_negative_numbers = true)]
        lo: Option<i64>,
        #[arg(long, default_value_t = 12, allow_negative_numbers = true)]
        hi: i64,
        #[arg(long, value_enum, default_value_t = DegeneracySource::Bruteforce)]
        source: DegeneracySource,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the (λ, μ, s) multiplet stacks level by level.
    Multiplets {
        #[arg(long)]
        m1: u32,
        /// Lowest level (defaults to −m1).
        #[arg(long, allow_negative_numbers = true)]
        lo: Option<i64>,
        #[arg(long, default_value_t = 12, allow_negative_numbers = true)]
        hi: i64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Substitute an exact rational function into a Painlevé equation and
    /// report the residual.
    PainleveCheck {
        /// Equation number: 1, 2, 3, 4, 5 or 6.
        #[arg(long)]
        eq: u8,
        #[arg(long, allow_negative_numbers = true)]
        alpha: Option<String>,
        #[arg(long, allow_negative_numbers = true)]
        beta: Option<String>,
        #[arg(long, allow_negative_numbers = true)]
        gamma: Option<String>,
        #[arg(long, allow_negative_numbers = true)]
        delta: Option<String>,
        /// Candidate solution in z (integers, z, + - * / ^, parentheses).
        #[arg(long, allow_hyphen_values = true)]
        rational: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify the polynomial Heisenberg algebra closed by the chain-built
    /// ladder pair of an extension.
    PhaCheck {
        #[command(flatten)]
        ms: MsArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify the commutator algebra of H = −(ħ²/2)D² + V with a
    /// momentum polynomial K = Σ f_j p^j.
    Classify {
        /// Potential V(x) as an exact expression in z.
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        /// Coefficient f_j(z) of p^j, ascending; repeat once per order.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "df")]
        f: Vec<String>,
        /// Coefficient c_j(z) of D^j instead (K = Σ c_j·D^j, all real);
        /// repeat once per order.
        #[arg(long, allow_hyphen_values = true)]
        df: Vec<String>,
        #[arg(long, default_value = "1")]
        hbar: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the Painlevé-IV dressed pair (x-part, y-part) from a rational
    /// solution.
    Q18 {
        #[arg(long, default_value = "1")]
        hbar: String,
        #[arg(long, default_value = "1")]
        omega: String,
        #[arg(long, default_value = "5", allow_negative_numbers = true)]
        alpha: String,
        #[arg(long, default_value = "-8", allow_negative_numbers = true)]
        beta: String,
        /// Sign ε = ±1 in the dressing.
        #[arg(long, default_value = "1", allow_negative_numbers = true)]
        epsilon: String,
        /// Rational Painlevé-IV solution f(z).
        #[arg(
            long,
            default_value = "4z(2z^2-1)(2z^2+3)/((2z^2+1)(4z^4+3))",
            allow_hyphen_values = true
        )]
        rational: String,
        /// Additive constant of the x-part (defaults to 2ħω/3).
        #[arg(long, allow_negative_numbers = true)]
        offset: Option<String>,
        /// Write the combined {x_part, y_part} artifact here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the x-part alone, consumable by `spectrum`.
        #[arg(long)]
        x_out: Option<PathBuf>,
        /// Also write the y-part alone, consumable by `spectrum`.
        #[arg(long)]
        y_out: Option<PathBuf>,
    },
    /// Diff the two closed-form degeneracy ladders level by level.
    Compare {
        #[arg(long, value_enum)]
        left: ReportKind,
        #[arg(long, value_enum)]
        right: ReportKind,
        #[arg(long, default_value_t = 10)]
        nmax: u32,
        #[arg(long, default_value = "1")]
        hbar: String,
        #[arg(long, default_value = "1")]
        omega: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    /// Bad flags or malformed input — exit 1.
    Usage(String),
    /// The requested check ran and failed — exit 2.
    Verification(String),
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version print to stdout and exit 0; real errors go to
            // stderr with the usage exit code
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn parse_rat_flag(flag: &str, value: &str) -> Result<Rat, Failure> {
    rat_from_string(value).map_err(|e| usage(format!("{flag}: {e}")))
}

fn parse_expr_flag(
    flag: &str,
    value: &str,
) -> Result<superint_core::exactmath::RationalFunction, Failure> {
    expr::parse_rational(value).map_err(|e| usage(format!("{flag}: {e}")))
}

fn parse_spec(ms: &[u32]) -> Result<ExtensionSpec, Failure> {
    ExtensionSpec::new(ms.to_vec()).map_err(|e| usage(format!("--ms: {e}")))
}

fn grid_config() -> Result<GridConfig, Failure> {
    let mut cfg = GridConfig::default();
    if let Ok(s) = std::env::var("SUPERINT_GRID_POINTS") {
        cfg.points = s.trim().parse().map_err(|_| {
            usage(format!(
                "SUPERINT_GRID_POINTS must be an integer, got {s:?}"
            ))
        })?;
    }
    Ok(cfg)
}

fn core_err(context: &str, e: superint_core::Error) -> Failure {
    usage(format!("{context}: {e}"))
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Extend {
            ms,
            out,
            plot,
            xmin,
            xmax,
            samples,
        } => {
            let spec = parse_spec(&ms.ms)?;
            let v = extend_oscillator(&spec).map_err(|e| core_err("--ms", e))?;
            if let Some(path) = plot {
                emit(&Some(path), &sample_csv(&v, xmin, xmax, samples)?)?;
            }
            emit(&out, &to_json(&PotentialDto::from_potential(&v)))
        }

        Command::Equivalence { ms, out } => {
            let spec = parse_spec(&ms.ms)?;
            let adding = extend_oscillator(&spec).map_err(|e| core_err("--ms", e))?;
            let deleting = deleting_equivalent(&spec).map_err(|e| core_err("--ms", e))?;
            let diff = &deleting.as_rational_function() - &adding.as_rational_function();
            let expected = int(2 * i64::from(spec.m_max().unwrap_or(0)) + 2);
            let shift = diff.as_constant();
            let verified = shift.as_ref() == Some(&expected)
                && deleting.convention == adding.convention
                && deleting.quadratic == adding.quadratic;
            let dto = EquivalenceDto {
                ms: ms.ms.clone(),
                shift: shift.map_or_else(|| String::from("non-constant"), |c| rat_to_string(&c)),
                expected: rat_to_string(&expected),
                verified,
            };
            emit(&out, &to_json(&dto))?;
            if verified {
                Ok(())
            } else {
                Err(Failure::Verification(String::from(
                    "equivalence: deleting and adding constructions do not differ by 2m_k + 2",
                )))
            }
        }

        Command::Spectrum {
            potential,
            count,
            format,
            out,
        } => {
            let text = std::fs::read_to_string(&potential).map_err(|e| {
                usage(format!(
                    "--potential: cannot read {}: {e}",
                    potential.display()
                ))
            })?;
            let dto: PotentialDto = serde_json::from_str(&text).map_err(|e| {
                if text.contains("x_part") {
                    usage(format!(
                        "--potential: {} holds an {{x_part, y_part}} pair; extract one with `q18 --x-out`",
                        potential.display()
                    ))
                } else {
                    usage(format!("--potential: {e}"))
                }
            })?;
            let v = dto
                .into_potential()
                .map_err(|e| usage(format!("--potential: {e}")))?;
            let cfg = grid_config()?;
            let spectrum = eigenvalues(&v, &cfg, count).map_err(|e| core_err("--potential", e))?;
            let content = match format {
                Format::Json => to_json(&SpectrumDto::from_spectrum(&spectrum)),
                Format::Csv => spectrum_csv(&spectrum),
            };
            emit(&out, &content)
        }

        Command::Unirreps {
            family,
            pmax,
            positivity,
            hbar,
            omega,
            format,
            out,
        } => {
            let hbar = parse_rat_flag("--hbar", &hbar)?;
            let omega = parse_rat_flag("--omega", &omega)?;
            let fam = match family {
                Family::Tower => StructureFunctionFamily::infinite_tower(hbar, omega),
                Family::Singlet => StructureFunctionFamily::singlet(hbar, omega),
                Family::Doublet => StructureFunctionFamily::doublet(hbar, omega),
            };
            let policy = match positivity {
                PositivityArg::Strict => Positivity::Strict,
                PositivityArg::Stated => Positivity::ReportOnly,
            };
            let rows = enumerate_unirreps(&fam, pmax, policy);
            let content = match format {
                Format::Json => to_json(&unirreps_json(&rows)),
                Format::Csv => unirreps_csv(&rows),
            };
            emit(&out, &content)
        }

        Command::Degeneracy {
            ms,
            lo,
            hi,
            source,
            format,
            out,
        } => {
            let spec = parse_spec(&ms.ms)?;
            let floor = -i64::from(spec.m_max().unwrap_or(0));
            let lo = lo.unwrap_or(floor);
            let report = match source {
                DegeneracySource::Bruteforce => {
                    degeneracy_bruteforce(&spec, lo, hi).map_err(|e| core_err("--ms", e))?
                }
                DegeneracySource::Formula => {
                    formula_report(&spec, lo.max(floor), hi).map_err(|e| core_err("--ms", e))?
                }
            };
            let content = match format {
                Format::Json => to_json(&ReportDto::from_report(&report)),
                Format::Csv => report_csv(&report),
            };
            emit(&out, &content)
        }

        Command::Multiplets {
            m1,
            lo,
            hi,
            format,
            out,
        } => {
            let lo = lo.unwrap_or(-i64::from(m1));
            let rows = multiplet_table(m1, lo, hi).map_err(|e| core_err("--m1", e))?;
            let content = match format {
                Format::Json => to_json(&multiplets_json(m1, &rows)),
                Format::Csv => multiplets_csv(m1, &rows),
            };
            emit(&out, &content)
        }

        Command::PainleveCheck {
            eq,
            alpha,
            beta,
            gamma,
            delta,
            rational,
            out,
        } => {
            let f = parse_expr_flag("--rational", &rational)?;
            let params = painleve_params(eq, &alpha, &beta, &gamma, &delta)?;
            let residual =
                painleve_residual(eq, &f, &params).map_err(|e| core_err("--rational", e))?;
            if residual.is_zero() {
                emit(&out, "residual: 0 (exact)\n")
            } else {
                // the core pretty-printer spells the variable x; this flag's
                // grammar calls it z
                let shown = residual.to_string().replace('x', "z");
                emit(&out, &format!("residual: {shown} (nonzero)\n"))?;
                Err(Failure::Verification(format!(
                    "painleve-check: the candidate does not solve P{eq}"
                )))
            }
        }

        Command::PhaCheck { ms, out } => {
            let spec = parse_spec(&ms.ms)?;
            let adding =
                DarbouxChain::from_seeds(&spec.adding_seeds()).map_err(|e| core_err("--ms", e))?;
            let del_seeds = spec.deleting_seeds().map_err(|e| core_err("--ms", e))?;
            let deleting = DarbouxChain::from_seeds(&del_seeds).map_err(|e| core_err("--ms", e))?;
            let pair = ladder_from_chains(&adding, &deleting).map_err(|e| core_err("--ms", e))?;
            let h = extend_oscillator(&spec)
                .map_err(|e| core_err("--ms", e))?
                .hamiltonian();
            let report =
                verify_pha(&h, &pair.c, &pair.c_dag, pair.mk).map_err(|e| core_err("--ms", e))?;
            let all_ok = report.all_ok();
            emit(
                &out,
                &to_json(&PhaDto::from_report(ms.ms.clone(), &report, pair.mk)),
            )?;
            if all_ok {
                Ok(())
            } else {
                Err(Failure::Verification(String::from(
                    "pha-check: the ladder pair does not close a polynomial Heisenberg algebra",
                )))
            }
        }

        Command::Classify {
            v,
            f,
            df,
            hbar,
            out,
        } => {
            let hbar = parse_rat_flag("--hbar", &hbar)?;
            let v = parse_expr_flag("--v", &v)?;
            let h = ComplexOperator::from_real(DifferentialOperator::schrodinger_half(
                WeightedFunction::new(v, 0),
                hbar.clone(),
            ));
            let k = if !f.is_empty() {
                let fs = f
                    .iter()
                    .map(|s| Ok(WeightedFunction::new(parse_expr_flag("--f", s)?, 0)))
                    .collect::<Result<Vec<_>, Failure>>()?;
                momentum_polynomial(&fs, &hbar)
            } else if !df.is_empty() {
                let mut terms = std::collections::BTreeMap::new();
                for (j, s) in df.iter().enumerate() {
                    terms.insert(
                        j as u32,
                        WeightedFunction::new(parse_expr_flag("--df", s)?, 0),
                    );
                }
                ComplexOperator::from_real(DifferentialOperator::from_terms(terms, hbar))
            } else {
                return Err(usage(
                    "classify needs K: --f (momentum coefficients) or --df (derivative coefficients)",
                ));
            };
            let pair_type = classify_pair(&h, &k).map_err(|e| core_err("--v", e))?;
            emit(&out, &to_json(&ClassifyDto::from_pair_type(&pair_type)))
        }

        Command::Q18 {
            hbar,
            omega,
            alpha,
            beta,
            epsilon,
            rational,
            offset,
            out,
            x_out,
            y_out,
        } => {
            let params = Q18Params {
                hbar: parse_rat_flag("--hbar", &hbar)?,
                omega: parse_rat_flag("--omega", &omega)?,
                alpha: parse_rat_flag("--alpha", &alpha)?,
                beta: parse_rat_flag("--beta", &beta)?,
                epsilon: parse_rat_flag("--epsilon", &epsilon)?,
                p4_solution: parse_expr_flag("--rational", &rational)?,
                offset: match offset {
                    Some(s) => Some(parse_rat_flag("--offset", &s)?),
                    None => None,
                },
            };
            let (x_part, y_part) = match q18_potential(&params) {
                Ok(pair) => pair,
                Err(e @ superint_core::Error::NotAP4Solution { .. }) => {
                    emit(
                        &out,
                        &format!("{{\"verified\": false, \"error\": \"{e}\"}}\n"),
                    )?;
                    return Err(Failure::Verification(format!("q18: {e}")));
                }
                Err(e) => return Err(core_err("q18", e)),
            };
            if let Some(path) = x_out {
                emit(
                    &Some(path),
                    &to_json(&PotentialDto::from_potential(&x_part)),
                )?;
            }
            if let Some(path) = y_out {
                emit(
                    &Some(path),
                    &to_json(&PotentialDto::from_potential(&y_part)),
                )?;
            }
            let dto = Q18Dto {
                x_part: PotentialDto::from_potential(&x_part),
                y_part: PotentialDto::from_potential(&y_part),
            };
            emit(&out, &to_json(&dto))
        }

        Command::Compare {
            left,
            right,
            nmax,
            hbar,
            omega,
            format,
            out,
        } => {
            let hbar = parse_rat_flag("--hbar", &hbar)?;
            let omega = parse_rat_flag("--omega", &omega)?;
            let build = |kind: ReportKind| -> Result<SpectrumReport, Failure> {
                match kind {
                    ReportKind::Deg1 => algebraic_spectrum(
                        &hbar,
                        &omega,
                        nmax,
                        UnirrepAssignment::DoubletSpansLevels,
                    )
                    .map_err(|e| core_err("--left/--right", e)),
                    ReportKind::Deg2 => ladder_spectrum(&hbar, &omega, 2, nmax)
                        .map_err(|e| core_err("--left/--right", e)),
                }
            };
            let diff = compare_reports(&build(left)?, &build(right)?)
                .map_err(|e| core_err("compare", e))?;
            let content = match format {
                Format::Json => to_json(&DiffDto::from_diff(&diff)),
                Format::Csv => diff_csv(&diff),
            };
            emit(&out, &content)
        }
    }
}

fn sample_csv(v: &Potential1D, xmin: f64, xmax: f64, samples: usize) -> Result<String, Failure> {
    if samples < 2 {
        return Err(usage(format!(
            "--samples must be at least 2, got {samples}"
        )));
    }
    if !(xmax > xmin) {
        return Err(usage(format!(
            "--xmin/--xmax: empty range [{xmin}, {xmax}]"
        )));
    }
    let mut out = String::from("x,V\n");
    let step = (xmax - xmin) / (samples - 1) as f64;
    for i in 0..samples {
        let x = xmin + step * i as f64;
        use std::fmt::Write as _;
        let _ = writeln!(out, "{x},{}", v.eval_f64(x));
    }
    Ok(out)
}

fn painleve_params(
    eq: u8,
    alpha: &Option<String>,
    beta: &Option<String>,
    gamma: &Option<String>,
    delta: &Option<String>,
) -> Result<Vec<Rat>, Failure> {
    let arity: usize = match eq {
        1 => 0,
        2 => 1,
        4 => 2,
        3 | 5 | 6 => 4,
        other => return Err(usage(format!("--eq: unknown Painlevé equation P{other}"))),
    };
    let slots = [
        ("--alpha", alpha),
        ("--beta", beta),
        ("--gamma", gamma),
        ("--delta", delta),
    ];
    for (name, value) in &slots[arity..] {
        if value.is_some() {
            return Err(usage(format!("{name} is not a parameter of P{eq}")));
        }
    }
    slots[..arity]
        .iter()
        .map(|(name, value)| match value {
            Some(s) => parse_rat_flag(name, s),
            None => Err(usage(format!("P{eq} requires {name}"))),
        })
        .collect()
}

/// Closed-form degeneracies packaged like the brute-force report so the two
/// sources are interchangeable downstream.
fn formula_report(spec: &ExtensionSpec, lo: i64, hi: i64) -> superint_core::Result<SpectrumReport> {
    let mut rows = Vec::new();
    for n in lo..=hi {
        rows.push(SpectrumRow {
            index: n,
            energy: int(2 * n),
            degeneracy: degeneracy_formula(spec, n)?,
            provenance: Provenance::Combinatorial,
        });
    }
    SpectrumReport::new(Convention::FullD2, rows)
}
