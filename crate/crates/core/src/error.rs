use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0}")]
    InvalidPartition(String),
    #[error("box ({row},{col}) is outside the diagram {shape}")]
    BoxOutsideDiagram { row: usize, col: usize, shape: String },
    #[error("partitions of different sizes ({0} vs {1}) are not comparable")]
    SizeMismatch(usize, usize),
    #[error("labels live on different levels ({0} vs {1})")]
    LevelMismatch(usize, usize),
    #[error("invalid reflected label: {0}")]
    InvalidLabel(String),
    #[error("diagrams on {0} and {1} strands cannot be multiplied")]
    StrandCountMismatch(usize, usize),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division")]
    InexactDivision,
    #[error("tableaux have shape {0} but {1} was requested")]
    ShapeMismatch(String, String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("weight is not evaluable: {0}")]
    NotEvaluable(String),
    #[error("{0} is outside the range covered by this procedure")]
    OutOfRange(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}
