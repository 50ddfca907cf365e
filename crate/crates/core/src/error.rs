use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("negative exponent where an ordinary polynomial is required")]
    NegativeExponent,
    #[error("gcd(0, 0) is undefined")]
    BothZero,
    #[error("argument must be non-negative, got {0}")]
    NegativeArgument(i64),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("sequence index {0} is out of range")]
    IndexOutOfRange(i64),
    #[error("Jacobi symbol needs an odd positive modulus, got {0}")]
    EvenModulus(i64),
    #[error("denominator is divisible by {0}")]
    DenominatorDivisible(u64),
    #[error("denominator is not a unit modulo Phi_{0}(q)")]
    DenominatorNotUnit(u64),
    #[error("exponent {numerator}/{denominator} is not an integer")]
    NonIntegralExponent { numerator: i64, denominator: i64 },
    #[error("parameters outside the claim domain: {0}")]
    OutOfDomain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
