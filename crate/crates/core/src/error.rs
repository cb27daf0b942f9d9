use alloc::string::String;
use core::fmt;

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;

/// Errors surfaced by exact constructions and the numerical oracle.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Rational-function construction or division with a zero denominator.
    DivisionByZero,
    /// Exact evaluation at a pole of a rational function.
    PoleAt(String),
    /// Sum of weighted functions with different Gaussian weights.
    MixedWeights(i64, i64),
    /// `wronskian` called on an empty seed list.
    EmptyWronskian,
    /// Log-Laplacian of the zero function.
    ZeroBase,
    /// Operator algebra over mismatched hbar conventions.
    MismatchedHbar,
    /// `classify_pair` requires H = c·D² + V with constant c < 0.
    NotSchrodingerForm,
    /// Intermediate Wronskian vanished while building a Darboux chain.
    DegenerateSeedSet(usize),
    /// Spec fails the parity alternation rule, so the extension is singular.
    SingularExtension(String),
    /// State-deleting seed count m_k + 1 − k would not be positive.
    EmptyDeletingChain(String),
    /// The two chains do not end at equivalent partner potentials.
    ChainsNotEquivalent(String),
    /// Declared leading coefficient f_M is identically zero.
    LowerOrderThanDeclared,
    /// A Painlevé equation divides by an identically zero expression.
    DivisionByZeroSolution(&'static str),
    /// Supplied rational function fails the P4 residual for (alpha, beta).
    NotAP4Solution,
    /// x-rescaling √c·x is not representable over the rationals for this input.
    IrrationalRescale,
    /// Construction parameters violate a documented precondition.
    InvalidSpec(String),
    /// Potential evaluates to a non-finite value on the grid.
    SingularPotentialAt(f64),
    /// Grid configuration violated (points must be odd and ≥ 3).
    BadGrid(String),
    /// Degeneracy queried below the ground level −m_k.
    BelowGroundLevel(i64),
    /// Spectrum reports carry different energy conventions.
    ConventionMismatch,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero polynomial"),
            Error::PoleAt(x) => write!(f, "evaluation at pole x = {x}"),
            Error::MixedWeights(a, b) => {
                write!(f, "cannot add weighted functions with weights {a} and {b}")
            }
            Error::EmptyWronskian => write!(f, "empty Wronskian"),
            Error::ZeroBase => write!(f, "log-Laplacian of the zero function"),
            Error::MismatchedHbar => write!(f, "operators carry different hbar values"),
            Error::NotSchrodingerForm => {
                write!(f, "Hamiltonian is not of Schrödinger form c·D² + V, c < 0")
            }
            Error::DegenerateSeedSet(i) => {
                write!(
                    f,
                    "degenerate seed set: Wronskian of first {i} seeds vanishes"
                )
            }
            Error::SingularExtension(s) => write!(f, "singular extension: {s}"),
            Error::EmptyDeletingChain(s) => {
                write!(f, "state-deleting chain would be empty for spec {s}")
            }
            Error::ChainsNotEquivalent(s) => write!(f, "chains not equivalent: {s}"),
            Error::LowerOrderThanDeclared => write!(f, "K has lower order than declared"),
            Error::DivisionByZeroSolution(which) => {
                write!(f, "division by zero solution in {which}")
            }
            Error::NotAP4Solution => write!(f, "not a P4 solution for given (alpha, beta)"),
            Error::IrrationalRescale => {
                write!(
                    f,
                    "rescaled argument is irrational and the function is not even"
                )
            }
            Error::InvalidSpec(s) => write!(f, "invalid spec: {s}"),
            Error::SingularPotentialAt(x) => write!(f, "potential singular on grid at x = {x}"),
            Error::BadGrid(s) => write!(f, "bad grid: {s}"),
            Error::BelowGroundLevel(n) => write!(f, "level N = {n} is below ground level"),
            Error::ConventionMismatch => write!(f, "spectrum reports use different conventions"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
