use thiserror::Error;

use crate::filtration::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: ambient {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("ambient dimension {0} exceeds the cap of {1} variables")]
    AmbientTooLarge(usize, usize),

    #[error("ideal is not primary to the maximal ideal; colength is infinite")]
    InfiniteColength,

    #[error("box volume {volume} exceeds the cap {cap}")]
    BoxCapExceeded { volume: u128, cap: u64 },

    #[error("the quotient by the unit ideal has no dimension")]
    UndefinedDimension,

    #[error("dimension must be >= 1 (module has dimension {0})")]
    DimensionZero(usize),

    #[error("base ideal is not primary to the maximal ideal")]
    NotPrimary,

    #[error("invalid filtration: {0}")]
    InvalidFiltration(Violation),

    #[error("parameter ideal is not contained in the first term; not a filtration over it")]
    NotParameterFiltration,

    #[error("parameter ideal must be a monomial complete intersection of pure powers")]
    NotCompleteIntersection,

    #[error("operation requires the module to be the full ring (empty annihilator)")]
    NotFreeModule,

    #[error("filtrations live on different modules")]
    ModuleMismatch,

    #[error("filtrations use different base ideals")]
    BaseIdealMismatch,

    #[error("Hilbert function did not stabilize up to horizon {0}")]
    NonStabilized(usize),

    #[error("Hilbert function degree does not match module dimension {0}")]
    DegreeMismatch(usize),

    #[error("multiplicity must be positive, got {0}")]
    InvalidMultiplicity(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Stable short identifier, used by golden fixtures.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::AmbientTooLarge(..) => "ambient_too_large",
            Error::InfiniteColength => "infinite_colength",
            Error::BoxCapExceeded { .. } => "box_cap_exceeded",
            Error::UndefinedDimension => "undefined_dimension",
            Error::DimensionZero(_) => "dimension_zero",
            Error::NotPrimary => "not_primary",
            Error::InvalidFiltration(_) => "invalid_filtration",
            Error::NotParameterFiltration => "not_parameter_filtration",
            Error::NotCompleteIntersection => "not_complete_intersection",
            Error::NotFreeModule => "not_free_module",
            Error::ModuleMismatch => "module_mismatch",
            Error::BaseIdealMismatch => "base_ideal_mismatch",
            Error::NonStabilized(_) => "non_stabilized",
            Error::DegreeMismatch(_) => "degree_mismatch",
            Error::InvalidMultiplicity(_) => "invalid_multiplicity",
            Error::OutOfRange(_) => "out_of_range",
            Error::Parse { .. } => "parse",
            Error::InvalidInput(_) => "invalid_input",
        }
    }
}
