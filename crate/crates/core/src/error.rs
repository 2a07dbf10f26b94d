use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported root system {0}")]
    UnsupportedType(String),
    #[error("invalid Kac labels: {0}")]
    InvalidLabels(String),
    #[error("elements belong to different algebras ({0} vs {1})")]
    AlgebraMismatch(String, String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("zero polynomial has no squarefree part")]
    ZeroPolynomial,
    #[error("element is not homogeneous of degree {0}")]
    NotHomogeneous(usize),
    #[error("generic sampling failed after {trials} trials: {reason}")]
    UnluckySampling { trials: usize, reason: String },
    #[error("e is not nilpotent or admits no graded sl2-triple: {0}")]
    NotNilpotentOrDegenerate(String),
    #[error("map is not a grading-preserving automorphism: {0}")]
    NotAutomorphism(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
