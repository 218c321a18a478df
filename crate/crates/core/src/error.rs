use thiserror::Error;

/// Failures of the exact arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivideByZero,
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("expression has a pole at q = 1")]
    PoleAtOne,
    #[error("denominator is not invertible modulo {0}")]
    NotInvertible(String),
    #[error("series constant term must be 1")]
    ConstantTermNotUnit,
    #[error("cyclotomic index must be positive")]
    ZeroIndex,
}
