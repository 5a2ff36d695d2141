use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes of the numerical pipeline.
///
/// Variants split into input validation failures and numerical breakdowns,
/// see [`Error::is_numerical`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("Schur parameter {index} has modulus {modulus} on or beyond the unit circle")]
    ParameterOnBoundary { index: usize, modulus: f64 },
    #[error("requested {requested} terms from a series of order {order}")]
    InsufficientOrder { requested: usize, order: usize },
    #[error("Carathéodory series must satisfy F(0) = 1, got {value}")]
    NormalizationError { value: String },
    #[error("polynomial degrees inconsistent: {0}")]
    DegreeMismatch(String),
    #[error("leading Toeplitz minor D_{index} vanishes (|D| = {modulus})")]
    SingularMinor { index: usize, modulus: f64 },
    #[error("division by a near-zero quantity at step {step}")]
    DivisionNearZero { step: usize },
    #[error("invalid Wall parameters at index {index}: {reason}")]
    InvalidWallParams { index: usize, reason: String },
    #[error("pole of the Cayley transform at input {0}")]
    PoleAtInput(String),
    #[error("continued fraction denominator vanishes at level {level}")]
    PoleEncountered { level: usize },
    #[error("section size {requested} exceeds available size {available}")]
    SectionTooLarge { requested: usize, available: usize },
    #[error("root finder did not converge within {iterations} iterations")]
    RootfinderDivergence { iterations: usize },
    #[error("root {index} has imaginary part {imag} exceeding the realness tolerance")]
    NonRealRoot { index: usize, imag: f64 },
    #[error("Pochhammer symbol (c)_k vanishes at k = {k}")]
    PochhammerPole { k: usize },
    #[error("normalization factor {index} is not positive")]
    NegativeUnderRoot { index: usize },
    #[error("quadrature did not converge under node doubling (change {change})")]
    QuadratureNotConverged { change: f64 },
    #[error("input on the real axis: {0}")]
    RealAxisInput(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ParameterOnBoundary { .. } => "parameter_on_boundary",
            Error::InsufficientOrder { .. } => "insufficient_order",
            Error::NormalizationError { .. } => "normalization_error",
            Error::DegreeMismatch(_) => "degree_mismatch",
            Error::SingularMinor { .. } => "singular_minor",
            Error::DivisionNearZero { .. } => "division_near_zero",
            Error::InvalidWallParams { .. } => "invalid_wall_params",
            Error::PoleAtInput(_) => "pole_at_input",
            Error::PoleEncountered { .. } => "pole_encountered",
            Error::SectionTooLarge { .. } => "section_too_large",
            Error::RootfinderDivergence { .. } => "rootfinder_divergence",
            Error::NonRealRoot { .. } => "non_real_root",
            Error::PochhammerPole { .. } => "pochhammer_pole",
            Error::NegativeUnderRoot { .. } => "negative_under_root",
            Error::QuadratureNotConverged { .. } => "quadrature_not_converged",
            Error::RealAxisInput(_) => "real_axis_input",
            Error::InvalidArgument(_) => "invalid_argument",
        }
    }

    /// True for breakdowns of a computation on valid input (poles, divergence),
    /// false for rejected input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::SingularMinor { .. }
                | Error::DivisionNearZero { .. }
                | Error::PoleEncountered { .. }
                | Error::RootfinderDivergence { .. }
                | Error::NonRealRoot { .. }
                | Error::QuadratureNotConverged { .. }
        )
    }
}
