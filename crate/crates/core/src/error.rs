use thiserror::Error;

use crate::poly::Var;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable mismatch: {left} vs {right}")]
    VariableMismatch { left: Var, right: Var },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("series constant term is not a unit")]
    NonUnitConstantTerm,

    #[error("coefficient index {index} beyond truncation order {order}")]
    IndexBeyondOrder { index: usize, order: usize },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("division left a nonzero remainder of degree {degree}")]
    NotDivisible { degree: usize },

    #[error("constant coefficient vanishes before normalization")]
    ZeroConstantCoefficient,

    /// The closed form is not applicable because the coefficient vanishes by parity.
    #[error("coefficient vanishes for k = 2 and even n")]
    VanishesByParity,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid rational literal {0:?}")]
    Rational(String),

    #[error("invalid variable name {0:?}")]
    Variable(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
