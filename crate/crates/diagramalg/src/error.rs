use crate::diagrams::Family;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("syntax error: {0}")]
    SyntaxError(String),
    #[error("missing vertex {0}")]
    MissingVertex(String),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("k = {k} exceeds the enumeration cap {cap} (set DIAGRAMALG_CAP to raise it)")]
    CapExceeded { k: usize, cap: usize },
    #[error("elements live in different algebras")]
    AlgebraMismatch,
    #[error("diagram {diagram} is not in the {family} family")]
    NotInFamily { diagram: String, family: Family },
    #[error("cannot substitute n = 0 into a negative power of n")]
    ZeroSubstitutionWithNegativeExponent,
    #[error("operation not supported for the {0} family")]
    FamilyUnsupported(Family),
    #[error("rank {m} is not admissible for {family} with k = {k}")]
    InvalidRank { family: Family, k: usize, m: usize },
    #[error("permutation degree {left} does not match tableau size {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("tableau shape does not match")]
    ShapeMismatch,
    #[error("{lambda_star} does not label an irreducible of {family} with k = {k}")]
    LabelNotInFamily { family: Family, k: usize, lambda_star: String },
    #[error("invalid class label: {0}")]
    InvalidClassLabel(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    /// Malformed input rather than a mathematical failure.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::SyntaxError(_)
                | Error::MissingVertex(_)
                | Error::DuplicateVertex(_)
                | Error::IndexOutOfRange { .. }
                | Error::InvalidParameter(_)
        )
    }
}
