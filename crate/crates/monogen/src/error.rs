use num_bigint::BigInt;
use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("zero polynomial has no well-defined {0}")]
    ZeroPolynomial(&'static str),

    #[error("polynomials are in different variables: `{0}` vs `{1}`")]
    VariableMismatch(String, String),

    #[error("degree {0} is too small for a discriminant (need degree >= 2)")]
    DegreeTooSmall(usize),

    #[error("polynomial is not symmetric in the requested variables: swapping `{0}` and `{1}` changes it")]
    NotSymmetric(String, String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("x^3 {0:+}*x^2 {1:+}*x {2:+} is reducible over the rationals (integer root {3})")]
    ReduciblePolynomial(BigInt, BigInt, BigInt, BigInt),

    #[error("cubic is not totally real: discriminant {0} <= 0")]
    NotTotallyReal(BigInt),

    #[error("d = {0} is not a positive square-free integer")]
    BadQuadraticD(BigInt),

    #[error("binary cubic form is degenerate: {0}")]
    DegenerateForm(String),

    #[error("cannot canonicalize the zero vector")]
    ZeroVector,

    #[error("{0}")]
    Unsupported(String),

    #[error("no candidates to test (empty parametric solution list)")]
    EmptyCandidates,

    #[error("certified solution file, line {line}: {msg}")]
    CertifiedParse { line: usize, msg: String },

    #[error("certified solution file: entry ({x}, {y}) claims value {claimed} but the form evaluates to {actual}")]
    CertifiedIntegrity {
        x: BigInt,
        y: BigInt,
        claimed: BigInt,
        actual: BigInt,
    },

    #[error("certified solution file is for a different form (checksum {found}, expected {expected})")]
    CertifiedFormMismatch { found: String, expected: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
