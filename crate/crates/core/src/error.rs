use thiserror::Error;

/// Errors surfaced by every layer of the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime in [3, 2^31)")]
    NotOddPrime(u64),
    #[error("field mismatch: F_{0} vs F_{1}")]
    FieldMismatch(u64, u64),
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("gcd of zeros")]
    GcdOfZeros,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("no prime factors")]
    NoPrimeFactors,
    #[error("modulus not prime")]
    ModulusNotPrime,
    #[error("zero form")]
    ZeroForm,
    #[error("degenerate form: discriminant is zero")]
    DegenerateForm,
    #[error("singular transformation")]
    SingularMatrix,
    #[error("wrong determinant: b^2/4 - ac is {found}, expected {expected}")]
    WrongDeterminant { found: String, expected: String },
    #[error("discriminant mismatch: b^2/4 - ac is not alpha times a square constant")]
    DiscriminantMismatch,
    #[error("not positive w.r.t. alpha")]
    NotPositive,
    #[error("form not primitive")]
    NotPrimitive,
    #[error("reduce first")]
    NotReduced,
    #[error("not squarefree")]
    NotSquarefree,
    #[error("even degree")]
    EvenDegree,
    #[error("not monic")]
    NotMonic,
    #[error("degree of alpha must be at least {0}")]
    DegreeTooSmall(usize),
    #[error("not a cubic")]
    NotCubic,
    #[error("invalid ideal: ({u}; {v})")]
    InvalidIdeal { u: String, v: String },
    #[error("alpha mismatch")]
    AlphaMismatch,
    #[error("point not on curve")]
    NotOnCurve,
    #[error("degree bound {bound} is smaller than deg alpha = {deg}")]
    BoundTooSmall { bound: usize, deg: usize },
    #[error("syntax error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("genus consistency failure: {0}")]
    GenusInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
