use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid degree law: {0}")]
    InvalidLaw(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("degree sequence is empty")]
    EmptyDegreeSequence,

    #[error("degree sequence entry {index} is zero; all degrees must be >= 1")]
    ZeroDegree { index: usize },

    #[error("instance too large to materialize: {0}")]
    TooLarge(String),

    #[error("core set is empty")]
    EmptyCore,

    #[error("node {node} out of range for graph on {n} nodes")]
    NodeOutOfRange { node: u64, n: usize },

    #[error("iteration failed to converge: {0}")]
    NonConvergence(String),

    #[error("law has an infinite moment: {0}")]
    InfiniteMoment(String),

    #[error("cannot condition on extinction: extinction probability is zero")]
    NullConditioning,

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
