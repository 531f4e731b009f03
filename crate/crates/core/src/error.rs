use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("series precondition violated: {0}")]
    Series(String),

    #[error("division by zero: {0}")]
    DivisionByZero(String),

    #[error("operator is zero")]
    ZeroOperator,

    #[error("operator is not MUM: x^0 part is {0}")]
    NotMum(String),

    #[error("expected an operator of order {expected}, got {got}")]
    WrongOrder { expected: usize, got: usize },

    #[error("C-Y2 condition fails; residual numerator {residual}")]
    NotCy2 { residual: String },

    #[error("degenerate cyclic vector: Wronskian annihilator has order {0}")]
    DegenerateCyclicVector(usize),

    #[error("recurrence leading coefficient vanishes at n = {0}")]
    VanishingLeading(usize),

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("undefined term in {id} at n = {n}: {term}")]
    UndefinedTerm { id: String, n: usize, term: String },

    #[error("unknown id {0:?}")]
    UnknownId(String),

    #[error("Yukawa coupling has constant term {0}, expected 1")]
    YukawaNormalization(String),

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("catalog data: {0}")]
    Catalog(String),
}
