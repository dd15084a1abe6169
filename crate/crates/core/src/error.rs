use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("resultant of two zero polynomials")]
    BothZero,
    #[error("polynomials viewed in different variables ({0} and {1})")]
    VariableMismatch(String, String),
    #[error("degree {got} is too small; at least {need} is required")]
    DegreeTooSmall { got: usize, need: usize },
    #[error("expected a cubic, got degree {0}")]
    WrongDegree(usize),
    #[error("degree {n} exceeds the configured cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("at most {max} coefficient symbols are supported, {requested} requested")]
    TooManySymbols { requested: usize, max: usize },
    #[error("matrix is {rows}x{cols}, expected {expected}")]
    Shape { rows: usize, cols: usize, expected: String },
    #[error("minor of order {k} requested from a {rows}x{cols} matrix")]
    MinorOutOfRange { k: usize, rows: usize, cols: usize },
    #[error("coefficients must be rational constants")]
    NotNumeric,
    #[error("root iteration did not converge in {0} sweeps")]
    NoConvergence(usize),
    #[error("root {index} has residual {residual:e}, above tolerance {tol:e}")]
    ResidualTooLarge { index: usize, residual: f64, tol: f64 },
    #[error("bad input: {0}")]
    BadInput(String),
}
