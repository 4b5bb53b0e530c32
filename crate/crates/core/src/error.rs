use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("the facet list is empty (void complex); pass allow_void to accept it")]
    VoidComplex,
    #[error("facet {0} is empty")]
    EmptyFacet(usize),
    #[error("vertex labels must be nonempty tokens without whitespace, got {0:?}")]
    BadLabel(String),
    #[error("operation requires a pure complex")]
    NotPure,
    #[error("{0} is not a face of the complex")]
    NotAFace(String),
    #[error("{0} is not a facet of the complex")]
    NotAFacet(String),
    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid JSON input: {0}")]
    Json(String),
    #[error("invalid rational {0:?}")]
    BadRational(String),
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("the prime {0} divides a denominator; supply an integer matrix for GF({0})")]
    PrimeDividesDenominator(u32),
    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    RaggedMatrix { row: usize, expected: usize, found: usize },
    #[error("dimension {index} is outside the range {min}..={max}")]
    DimensionOutOfRange { index: isize, min: isize, max: isize },
    #[error("index {index} is out of range for {len} items")]
    IndexOutOfRange { index: usize, len: usize },
    #[error(
        "exponential blowup: the regularity sweep visits 2^{vertices} vertex subsets, \
         above the cap 2^{cap}; raise the cap to proceed"
    )]
    HochsterCap { vertices: usize, cap: usize },
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error("operation needs at least {needed} vertices, the graph has {found}")]
    TooFewVertices { needed: usize, found: usize },
    #[error("self loop at vertex {0:?}")]
    SelfLoop(String),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("the arrangement is not height-unmixed")]
    NotUnmixed,
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("the lines {0} and {1} coincide")]
    IdenticalLines(usize, usize),
    #[error("no generic draw found after {attempts} attempts: {reason}")]
    RetryExhausted { attempts: u32, reason: String },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
