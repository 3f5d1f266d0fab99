use crate::algebra::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole is not rational: irreducible factor {factor}")]
    UnsupportedPole { factor: String },

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("inadmissible exponent {exponent}: radial exponents must exceed -2")]
    InadmissibleExponent { exponent: Rational },

    #[error("the zero symbol has no boundedness class")]
    ZeroSymbol,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("rational function is not strictly proper")]
    NotProper,

    #[error("Mellin transform has a pole at the evaluation point {point}")]
    PoleAtEvaluation { point: Rational },

    #[error("no admissible solution: {0}")]
    NoAdmissibleSolution(String),

    #[error("quadrature did not converge: estimate {estimate}, error {error_estimate:e} after {levels} refinements")]
    QuadratureFailure {
        estimate: f64,
        error_estimate: f64,
        levels: usize,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
