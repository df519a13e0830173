use thiserror::Error;

use crate::zmod::GaussRes;

/// Errors reported by the library.
///
/// Mixing operands with different moduli is a programming error and panics
/// instead of returning a variant; everything data-dependent ends up here.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not an odd prime")]
    NotPrime(u64),
    #[error("p = 2 is not supported; an odd prime is required")]
    EvenPrime,
    #[error("{0} has norm 0 and no inverse")]
    ZeroDivisor(GaussRes),
    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: u64, modulus: u64 },
    #[error("the zero element is not allowed here")]
    ZeroElement,
    #[error("the norm class c = 0 is excluded")]
    ZeroNormClass,
    #[error("modulus {0} is not congruent to 1 mod 4")]
    WrongResidueClass(u64),
    #[error("t = 0 is excluded")]
    ZeroT,
    #[error("{0} is not a proper zero divisor")]
    NotZeroDivisor(GaussRes),
    #[error("the cubic degenerates (factors) for t = {0}")]
    DegenerateT(u64),
    #[error("generator set does not generate the group: {unreachable} of {order} vertices unreachable")]
    NotGenerating { order: u64, unreachable: u64 },
    #[error("generator set has odd size {0}")]
    OddDegree(usize),
    #[error("generator set is not symmetric: missing the negative of {0}")]
    NotSymmetric(GaussRes),
    #[error("generator set must not contain 0")]
    ContainsZero,
    #[error("Lee sphere size overflows u64 for n = {n}, r = {r}")]
    SphereOverflow { n: u64, r: u64 },
    #[error("word length {got} does not match code dimension {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("unknown export format `{0}` (expected `csv` or `json`)")]
    UnknownFormat(String),
    #[error("unknown residue filter `{0}` (expected `all`, `<r>mod4` or `<r>mod12`)")]
    UnknownFilter(String),
    #[error("enumerating {codewords} codewords exceeds the limit of {limit}")]
    EnumerationTooLarge { codewords: String, limit: u64 },
    #[error("invalid range `{0}`: expected A..B with A <= B")]
    InvalidRange(String),
    #[error("invalid word `{0}`: expected comma-separated integers")]
    InvalidWord(String),
}

pub type Result<T> = std::result::Result<T, Error>;
