use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 1")]
    BadDegree,
    #[error("field size {base}^{exp} exceeds the 2^63 budget")]
    FieldBudget { base: u64, exp: u32 },
    #[error("cannot invert zero")]
    ZeroInverse,
    #[error("operands belong to different fields ({0} vs {1})")]
    MixedFields(u64, u64),
    #[error("element index {index} out of range for field of size {q}")]
    ElementRange { index: u64, q: u64 },
    #[error("{a} does not divide {b}")]
    NotADivisor { a: u64, b: u64 },
    #[error("gcd({0}, {1}) != 1")]
    NotCoprime(u64, u64),
    #[error("residue {residue} out of range for modulus {modulus}")]
    ResidueRange { residue: u64, modulus: u64 },
    #[error("budget exceeded: need {need}, budget {budget}")]
    Budget { need: u128, budget: u128 },
    #[error("designed distance {designed} out of range 2..={max}")]
    DesignedRange { designed: u64, max: u64 },
    #[error("no closed form covers (q={q}, m={m}, lambda={lambda}, i={i})")]
    NoClosedForm { q: u64, m: u32, lambda: u64, i: u64 },
    #[error("parameters outside the covered domain: {0}")]
    Domain(String),
    #[error("tower embedding is broken: {0}")]
    TowerBroken(String),
    #[error("internal cross-check failed: {0}")]
    InternalCheck(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("division by zero polynomial")]
    ZeroDivisor,
}

pub type Result<T> = std::result::Result<T, Error>;
