use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("matrix is not idempotent")]
    NotIdempotent,
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("generator {index} is not a permutation of 0..{degree}")]
    NotBijection { index: usize, degree: usize },
    #[error("element index {0} out of range")]
    ElementOutOfRange(usize),
    #[error("subset is not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal; quotients require a normal subgroup")]
    NotNormal,
    #[error("subgroup {0} is not contained in subgroup {1}")]
    NotContained(String, String),
    #[error("objects live over different groups")]
    GroupMismatch,
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("matrix is not an intertwiner: {0}")]
    NotIntertwiner(String),
    #[error("object is not in the required subcategory: {0}")]
    NotInSubcategory(String),
    #[error("quotient objects belong to different quotient contexts")]
    ContextMismatch,
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(usize, usize),
    #[error("invalid cocycle: {0}")]
    InvalidCocycle(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
