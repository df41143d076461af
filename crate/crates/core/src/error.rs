use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid root datum: {0}")]
    InvalidDatum(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("rewriting exceeded the step budget of {0} rule applications")]
    StepBudgetExceeded(u64),
    #[error("presentation `{0}` carries no Hopf data")]
    NoHopfData(String),
    #[error("generator {0} does not belong to the ambient alphabet")]
    ForeignGenerator(String),
    #[error("element is not in B-: {0}")]
    NotInBminus(String),
    #[error("no pairing between {0} and {1}")]
    UnpairedGenerators(String, String),
    #[error("degree height {height} exceeds the cap {cap}")]
    HeightCapExceeded { height: u32, cap: u32 },
    #[error("truncation depth {depth} exceeds the cap {cap}")]
    DepthCapExceeded { depth: u32, cap: u32 },
    #[error("dual basis construction found a degenerate quotient at degree {0}")]
    DegenerateQuotient(String),
    #[error("action reached beyond the truncation depth")]
    TruncationLoss,
    #[error("target lies on the wrong side of the double")]
    WrongSide,
    #[error("closed form requires {0}")]
    InvalidRange(String),
    #[error("tensor factors lack a Yetter-Drinfel'd structure: {0}")]
    MissingYDStructure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
