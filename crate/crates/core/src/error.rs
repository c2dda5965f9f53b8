use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} and {1} are not coprime")]
    NotCoprime(BigInt, BigInt),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("modulus {0} must be odd and at least 3")]
    InvalidModulus(BigInt),

    #[error("expected a positive integer, got {0}")]
    NotPositive(BigInt),

    #[error("expected a non-negative value, got {0}")]
    Negative(String),

    #[error("not a canonical continued fraction: {0}")]
    NonCanonical(String),

    #[error("indeterminate bracket: the term-matrix product has a zero lower-left entry")]
    IndeterminateBracket,

    #[error("N(x, y) needs an even first argument (the skip-sum parity is undefined for odd x), got x = {0}")]
    OddGenusArgument(BigInt),

    #[error("step reduction needs an even numerator, got {0}")]
    OddNumerator(BigInt),

    #[error("reduction stuck at {0}")]
    ReductionStuck(String),

    #[error("torus knot parameters must be nonzero")]
    ZeroParameter,

    #[error("{0} is an even torus knot; only odd knots split into K_A and K_B")]
    EvenKnot(String),

    #[error("connected sum of an empty list")]
    EmptySum,

    #[error("unknown suite `{0}` (expected one of recipro, criterion, final, sum, claim, delta3, oracle, all)")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
