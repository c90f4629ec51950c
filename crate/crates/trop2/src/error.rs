use thiserror::Error as ThisError;

/// Error type shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum Error {
    #[error("ambient dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("coordinate {0} is tropically zero but its exponent is negative")]
    NegativeExponentAtTropZero(usize),

    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("term {0} carries a zero coefficient")]
    ZeroCoefficient(String),

    #[error("evaluation at {sigma} is inadmissible: the coefficient sum at exponent {at} vanishes")]
    InadmissibleEvaluation { sigma: String, at: String },

    #[error("cannot evaluate {base}^{expo} inside the rationals")]
    NonEvaluableExponent { base: String, expo: String },

    #[error("polyhedron is empty")]
    EmptyPolyhedron,

    #[error("cell is not a member of the complex")]
    CellNotInComplex,

    #[error("coefficient of {0} depends on the second parameter")]
    CoefficientDependsOnU(String),

    #[error("direction is not generic for the given cell pair")]
    NonGenericDirection,

    #[error("generator {0} appears in no edge of the covector")]
    IsolatedGenerator(usize),

    #[error("plotting needs two variables, got {0}")]
    UnsupportedDimension(usize),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable identifier, used by the CLI error reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch(..) => "dimension_mismatch",
            Error::NegativeExponentAtTropZero(..) => "negative_exponent_at_trop_zero",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::ZeroCoefficient(..) => "zero_coefficient",
            Error::InadmissibleEvaluation { .. } => "inadmissible_evaluation",
            Error::NonEvaluableExponent { .. } => "non_evaluable_exponent",
            Error::EmptyPolyhedron => "empty_polyhedron",
            Error::CellNotInComplex => "cell_not_in_complex",
            Error::CoefficientDependsOnU(..) => "coefficient_depends_on_u",
            Error::NonGenericDirection => "non_generic_direction",
            Error::IsolatedGenerator(..) => "isolated_generator",
            Error::UnsupportedDimension(..) => "unsupported_dimension",
            Error::Invalid(..) => "invalid_input",
            Error::Parse(..) => "parse_error",
        }
    }

    /// True for errors that indicate malformed input rather than a failed
    /// computation.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::DimensionMismatch(..)
                | Error::ZeroCoefficient(..)
                | Error::UnsupportedDimension(..)
                | Error::Invalid(..)
                | Error::Parse(..)
        )
    }
}
