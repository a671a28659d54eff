//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building specs, evaluating the
/// closed forms, running the oracles, or validating concrete input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p = {0} is not prime")]
    NonPrimeP(i64),
    #[error("gcd violation: {0}")]
    GcdViolation(String),
    #[error("spec data is empty: need at least one denominator or numerator factor")]
    EmptyData,
    #[error("index {index} out of range for {what}")]
    IndexOutOfRange { what: &'static str, index: i64 },
    #[error("place {0} does not have degree one")]
    DegreeNotOne(usize),
    #[error("{what} must be positive, got {value}")]
    NonPositive { what: &'static str, value: i64 },
    #[error("duplicate place index {0}")]
    DuplicatePlace(usize),
    #[error("need at least two places, got {0}")]
    TooFewPlaces(usize),
    #[error("asked for {requested} places but only {available} are available")]
    TooManyPlaces { requested: usize, available: usize },
    #[error("tuple is not in the minimal generating set: {0}")]
    NotInGamma(String),
    #[error("empty input")]
    EmptyInput,
    #[error("tuple length {got} does not match place count {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("divisor support contains a place outside the ramified set: {0}")]
    UnsupportedPlace(String),
    #[error("Frobenius number is undefined for genus zero")]
    GenusZero,
    #[error("parameter limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("internal consistency failure: {0}")]
    Internal(String),

    // fieldcheck
    #[error("invalid finite field: {0}")]
    InvalidField(String),
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("operands belong to different finite fields")]
    FieldMismatch,
    #[error("irreducibility is undefined for constant polynomials")]
    ConstantPolynomial,
    #[error("the constant coefficient of the linearized polynomial is zero")]
    AlphaZero,
    #[error("validation failed: {}", failures.join("; "))]
    ValidationFailure { failures: Vec<String> },
    #[error("syntax error at line {line}, column {column}: {message}")]
    SyntaxError { line: usize, column: usize, message: String },
    #[error("schema error: field `{0}` is missing or malformed")]
    SchemaError(String),
}
