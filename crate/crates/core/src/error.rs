use std::path::PathBuf;

use thiserror::Error;

/// Every fallible operation in this crate reports through this enum so the
/// CLI can map failures onto its exit-code contract (input error vs.
/// mathematical refusal vs. I/O).
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {left}x{left} vs {right}x{right}")]
    DimensionMismatch {
        op: &'static str,
        left: usize,
        right: usize,
    },

    #[error("matrix entries do not form a square: got {len} entries for dimension {n}")]
    NotSquare { n: usize, len: usize },

    #[error("matrix dimension {n} exceeds the supported cap of {cap}")]
    DimensionCap { n: usize, cap: usize },

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("cannot invert zero")]
    DivisionByZero,

    #[error("`{input}` is not a rational number (expected `p/q`, an integer, or a plain decimal)")]
    ParseRational { input: String },

    /// Free-form rejection of malformed input; the message is shown verbatim.
    #[error("{message}")]
    BadInput { message: String },

    #[error("{value} is not finite")]
    NonFinite { value: f64 },

    #[error("division by the zero polynomial")]
    ZeroPolynomialDivisor,

    #[error("zero polynomial: identically degenerate family")]
    ZeroPolynomial,

    #[error("polynomial is not monic in lambda")]
    NotMonic,

    #[error("{lambda} is not an eigenvalue (the shifted matrix is nonsingular)")]
    NotAnEigenvalue { lambda: String },

    #[error("{lambda} is not a simple eigenvalue (algebraic multiplicity {alg_mult})")]
    NonSimpleEigenvalue { lambda: String, alg_mult: usize },

    #[error("chain head is not an eigenvector for {lambda}")]
    InvalidChainHead { lambda: String },

    #[error(
        "root finder did not converge after {iterations} iterations \
         (worst residual {worst_residual:.3e})"
    )]
    RootFinderDiverged {
        iterations: usize,
        worst_residual: f64,
        residuals: Vec<f64>,
    },

    #[error("ill-posed Jordan structure: eigenvalues {a} and {b} are {gap:.3e} apart without exact identification")]
    IllPosedJordan { a: String, b: String, gap: f64 },

    #[error("degenerate family everywhere: the discriminant vanishes identically")]
    DegenerateFamily,

    #[error("the permutation list is not closed under composition")]
    NotAGroup,

    #[error("invalid permutation images {images:?}: not a bijection on 0..{n}")]
    NotAPermutation { images: Vec<usize>, n: usize },

    #[error("invalid sweep range: need finite beta_min < beta_max, got {lo}..{hi}")]
    InvalidSweepRange { lo: f64, hi: f64 },

    #[error("invalid step count {steps}: need 2..=1000000")]
    InvalidSteps { steps: usize },

    #[error("nothing to plot: no branches")]
    NoBranches,

    #[error("internal rank inconsistency: {detail}")]
    InternalRankInconsistency { detail: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Wraps an I/O failure with the path it happened on.
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
