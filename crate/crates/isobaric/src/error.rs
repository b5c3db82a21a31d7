//! Error type shared by the whole crate.
//!
//! Everything here is a *domain* error: the input was well formed but asked for
//! something the mathematics does not provide (a missing coefficient, a
//! non-invertible companion matrix, a sequence that is not integrally
//! representable, ...). Malformed command-line input is handled by the CLI
//! crate and never reaches these variants.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The weighted coefficient formula produced a non-integer. This cannot
    /// happen for integer weights and signals a bug in the caller.
    #[error("coefficient {numerator}/{length} for partition {alpha} is not an integer")]
    NonIntegralCoefficient {
        alpha: String,
        numerator: String,
        length: u64,
    },

    /// An explicit weight vector was asked for an entry past its end.
    #[error("weight vector has no entry at index {0}")]
    WeightIndexOutOfRange(usize),

    /// Strict evaluation hit a variable the core does not supply.
    #[error("core of degree {degree} does not supply t{index}")]
    MissingCoreCoefficient { index: usize, degree: usize },

    /// A truncated series core ran out of known coefficients.
    #[error("series core is only known through t{known}; t{index} is required")]
    SeriesTruncated { index: usize, known: usize },

    /// Rows above the identity block need t_k invertible.
    #[error("t{0} = 0: rows at negative indices need an invertible companion matrix")]
    NotInvertible(usize),

    /// Negative window rows are numeric-only; symbolic entries stop at the
    /// identity block.
    #[error("symbolic window rows below {0} are not defined")]
    SymbolicRowOutOfRange(i64),

    #[error("matrix entry ({row},{col}) breaks lower Hessenberg shape")]
    NotHessenberg { row: usize, col: usize },

    #[error("matrix dimension {n} exceeds the naive permanent limit of {limit}")]
    PermanentTooLarge { n: usize, limit: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("exact division failed during fraction-free elimination")]
    InexactDivision,

    #[error("matrix dimension must be at least 1")]
    EmptyMatrix,

    #[error("core must have degree at least {required}, got {got}")]
    CoreDegreeTooSmall { required: usize, got: usize },

    #[error("operation needs a finite core, got a truncated series core")]
    FiniteCoreRequired,

    #[error("sequence lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("sequence must start at index {expected}, starts at {got}")]
    StartIndexMismatch { expected: usize, got: usize },

    #[error("sequence has constant term {0}, which is not invertible")]
    NotConvInvertible(String),

    #[error("leading series coefficient {0} is not a unit")]
    SeriesLeadingNotUnit(String),

    /// F-fits normalize v0 = 1.
    #[error("values must start with 1, got {0}")]
    NotNormalized(String),

    #[error("t{index} = {value} is not an integer: not G-representable over the integers at this depth")]
    GFitNonIntegral { index: usize, value: String },

    #[error("core coefficient t{index} = {value} is not an integer")]
    NonIntegralCore { index: usize, value: String },

    #[error("need at least {required} values, got {got}")]
    InsufficientValues { required: usize, got: usize },

    #[error("arithmetic function is only tabulated through {n_max}; {n} was requested")]
    ArithIndexOutOfRange { n: u64, n_max: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("period search would visit more than {0} states")]
    PeriodSearchLimit(usize),

    #[error("unknown family \"{0}\"")]
    UnknownFamily(String),

    #[error("family \"{family}\" needs parameter --{param}")]
    MissingFamilyParam {
        family: &'static str,
        param: &'static str,
    },

    #[error("family \"{family}\" parameter {param} is out of range: {detail}")]
    FamilyParamOutOfRange {
        family: &'static str,
        param: &'static str,
        detail: String,
    },

    #[error("hook leg {leg} must lie in 0..={max}")]
    LegOutOfRange { leg: usize, max: usize },

    #[error("window bounds are reversed: lo {lo} > hi {hi}")]
    WindowBoundsReversed { lo: i64, hi: i64 },

    #[error("b-file line {line}: {detail}")]
    MalformedBFile { line: usize, detail: String },

    #[error("b-file starts at index {0}; fitting needs a run starting at 0 or 1")]
    UnsupportedOffset(i64),

    /// A cross-checked computation disagreed with its second route. Always a
    /// bug, never user error.
    #[error("internal cross-check failed: {0}")]
    Internal(String),
}
