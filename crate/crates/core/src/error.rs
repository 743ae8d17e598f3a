use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    VarMismatch(usize, usize),
    #[error("coefficient field mismatch")]
    FieldMismatch,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("colon by the zero polynomial")]
    ColonByZero,
    #[error("monomial map images must all have the same degree")]
    UnequalImageDegrees,
    #[error("generators must be homogeneous")]
    Inhomogeneous,
    #[error("hilbert function is not an O-sequence (violated at degree {0})")]
    NotOSequence(usize),
    #[error("hilbert function value {got} at degree {degree} exceeds the ambient dimension {max}")]
    HilbertValueTooLarge { degree: usize, got: u64, max: u64 },
    #[error("operation word longer than the form sequence: {word} > {forms}")]
    WordTooLong { word: usize, forms: usize },
    #[error("word enumeration budget exceeded: r = {0} > 12")]
    WordBudget(usize),
    #[error("block sizes are not nondecreasing")]
    BlocksNotNondecreasing,
    #[error("structured form factor {factor}: expected {expected} coefficients, got {got}")]
    FactorSizeMismatch {
        factor: usize,
        expected: usize,
        got: usize,
    },
    #[error("structured form expansion left the monomial span of the presentation")]
    UnexpectedSupport,
    #[error("fiber cone requires an equigenerated monomial ideal")]
    NotEquigenerated,
    #[error("reduction criterion fails: dim = {dim} but the bound is {bound}")]
    CriterionViolated { dim: u64, bound: u64 },
    #[error("structured reduction variant requires a toric presentation")]
    MissingToric,
    #[error("variant requires characteristic 0 or a prime above {min}; field has characteristic {got}")]
    SmallCharacteristic { min: u64, got: u64 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
