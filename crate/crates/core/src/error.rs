use thiserror::Error;

/// Errors raised by the counting engines, the bijection and the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("value {0} is already present in the tableau")]
    DuplicateValue(u32),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("shape {target:?} is not obtained from {source_shape:?} by removing one corner")]
    NotACorner {
        source_shape: Vec<usize>,
        target: Vec<usize>,
    },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("diagram has crossing number {crossing}, which is not below k = {k}")]
    CrossingTooLarge { crossing: usize, k: usize },

    #[error("walk leaves the open chamber after step {step}")]
    LeavesChamber { step: usize },

    #[error("walk does not start and end at the chamber base point")]
    NotClosed,

    #[error("point {0:?} is not strictly inside the chamber")]
    NotInterior(Vec<i64>),

    #[error("coefficient of x^{n} is not an integer after scaling by n!")]
    NonIntegral { n: usize },

    #[error("inclusion-exclusion produced a negative count: {0}")]
    NegativeCount(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("cannot parse {what}: offending token `{token}`")]
    Parse { what: &'static str, token: String },

    #[error("n = {n} exceeds the brute-force cap of {cap}")]
    OracleCap { n: usize, cap: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
