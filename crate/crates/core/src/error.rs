use thiserror::Error;

/// Errors raised by the algebra engine. Basis indices in Lie-algebra
/// variants are 1-based, matching how basis vectors are named in input files.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable '{name}' at position {pos} (expected '{expected}')")]
    UnknownVariable { name: char, pos: usize, expected: char },
    #[error("negative exponent at position {pos}")]
    NegativeExponent { pos: usize },
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("constant polynomial is not allowed here")]
    ConstantPolynomial,
    #[error("polynomial has zero constant term and therefore no period")]
    NoPeriod,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("polynomial must be squarefree")]
    NotSquarefree,
    #[error("modulus {0} is not irreducible of the requested degree")]
    NotIrreducible(String),
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("characteristic mismatch: {left} vs {right}")]
    CharacteristicMismatch { left: u64, right: u64 },
    #[error("elements belong to different field contexts")]
    FieldMismatch,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("antisymmetry violated at ({i},{j})")]
    Antisymmetry { i: usize, j: usize },
    #[error("Jacobi identity violated at ({i},{j},{k})")]
    Jacobi { i: usize, j: usize, k: usize },
    #[error("splitting field of degree {k} exceeds the desk-scale cap {cap}")]
    DeskScaleExceeded { k: u64, cap: u64 },
    #[error("internal error: verification of {0} failed")]
    VerificationFailed(String),
    #[error("internal error: {0} is not an integer")]
    NonIntegral(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
