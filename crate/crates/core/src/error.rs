use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors produced by basis construction and the cover computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty basis")]
    Empty,
    #[error("invalid integer {0:?}")]
    InvalidNumber(String),
    #[error("non-positive element {0}")]
    NonPositive(String),
    #[error("basis must start at 1, found {0}")]
    NotStartingAtOne(String),
    #[error("basis is not strictly increasing at position {position}")]
    NotIncreasing { position: usize },
    #[error("arithmetic overflow computing {what}")]
    Overflow { what: &'static str },
    #[error("table of {required} entries exceeds the limit of {limit}")]
    TableTooLarge { required: u128, limit: usize },
    #[error("stamp count must be at least 1")]
    ZeroStamps,
    #[error("{value} has no generation with at most {h} stamps")]
    NotRepresentable { value: String, h: u32 },
    #[error("search space of {count} candidates exceeds the ceiling of {ceiling}")]
    TooLarge { count: u128, ceiling: u128 },
    #[error("basis is not symmetric")]
    NotSymmetric,
    #[error("generation weight {weight} exceeds h0 = {h0}")]
    WeightExceedsH0 { weight: u32, h0: u32 },
    #[error("generation uses the top element")]
    UsesTopElement,
    #[error("generation value {value} is not below the top element {top}")]
    ValueNotBelowTop { value: String, top: String },
    #[error("generation has {got} coefficients, basis has {expected} elements")]
    CoefficientCount { got: usize, expected: usize },
    #[error("half basis needs at least {min} elements, got {got}")]
    HalfTooShort { min: usize, got: usize },
    #[error("bad family parameter: {0}")]
    BadParameter(String),
}

impl Error {
    /// True for the overflow-class errors (checked arithmetic or table size).
    pub fn is_overflow(&self) -> bool {
        matches!(self, Error::Overflow { .. } | Error::TableTooLarge { .. })
    }
}
