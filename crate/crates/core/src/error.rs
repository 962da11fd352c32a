use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed Lie algebra: {0}")]
    MalformedSpec(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("operands live over different Lie algebras")]
    LieMismatch,
    #[error("not a right module: law fails at ({0}, {1})")]
    InvalidModule(usize, usize),
    #[error("not a comodule: coaction matrices {0} and {1} do not commute")]
    InvalidComodule(usize, usize),
    #[error("coaction is not conilpotent")]
    NotConilpotent,
    #[error("not a mixed complex: {0}")]
    NotMixed(String),
    #[error("not a differential: {0}")]
    NotDifferential(String),
    #[error("tensor level {level} exceeds the configured cap {cap}")]
    LevelCap { level: usize, cap: usize },
}
