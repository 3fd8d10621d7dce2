use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(u32),

    #[error("invalid diagram {rows:?} for n={n}")]
    InvalidDiagram { rows: Vec<u32>, n: u32 },

    #[error("could not parse diagram {0:?}")]
    DiagramSyntax(String),

    #[error("{what} index {index} out of range for n={n}")]
    IndexOutOfRange {
        what: &'static str,
        index: i64,
        n: u32,
    },

    #[error("diagrams of different sizes: {0} vs {1}")]
    RankMismatch(u32, u32),

    /// A uniqueness property that minuscule combinatorics guarantees was
    /// violated. Seeing this means the model is wrong, not the input.
    #[error("structural fault: {0}")]
    StructuralFault(String),

    #[error("polynomial is not homogeneous in Plücker variables")]
    NotHomogeneous,

    #[error("zero polynomial has no degree")]
    ZeroPolynomial,

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("unexpected {0} variable")]
    UnexpectedVariable(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
