use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rows are not weakly decreasing: row {index} has length {next} > {prev}")]
    NotWeaklyDecreasing { index: usize, prev: i64, next: i64 },
    #[error("row {index} has non-positive length {value}")]
    NonPositiveRow { index: usize, value: i64 },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("degree {degree} exceeds the enumeration cap {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("element is not quasi-idempotent: its square is not a scalar multiple of it")]
    NotQuasiIdempotent,
    #[error("element is zero")]
    ZeroElement,
    #[error("diagram has {boxes} boxes, above the tableau cap {cap}")]
    TooManyBoxes { boxes: usize, cap: usize },
    #[error("tensor space of dimension {dim} exceeds the size cap {cap}")]
    SizeTooLarge { dim: usize, cap: usize },
    #[error("vector is not in the span of the subspace basis")]
    BasisSolveFailure,
    #[error("diagram has {rows} rows, more than N = {max}")]
    TooManyRows { rows: usize, max: usize },
    #[error("invalid irrep label: {0}")]
    InvalidLabel(String),
    #[error("twisted label families need an explicit twist range")]
    MissingTwistRange,
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable identifier of the error case, used by the CLI.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotWeaklyDecreasing { .. } => "NotWeaklyDecreasing",
            Error::NonPositiveRow { .. } => "NonPositiveRow",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::DegreeTooLarge { .. } => "DegreeTooLarge",
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::NotQuasiIdempotent => "NotQuasiIdempotent",
            Error::ZeroElement => "ZeroElement",
            Error::TooManyBoxes { .. } => "TooManyBoxes",
            Error::SizeTooLarge { .. } => "SizeTooLarge",
            Error::BasisSolveFailure => "BasisSolveFailure",
            Error::TooManyRows { .. } => "TooManyRows",
            Error::InvalidLabel(_) => "InvalidLabel",
            Error::MissingTwistRange => "MissingTwistRange",
            Error::InvalidMatrix(_) => "InvalidMatrix",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
