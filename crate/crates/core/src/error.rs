use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("polynomials live in different variable spaces")]
    SpaceMismatch,

    /// Exact division failed. This signals a formula-implementation bug or a
    /// false identity; the remainder is kept as a witness.
    #[error("exact division failed, remainder = {remainder}")]
    NotDivisible { remainder: String },

    #[error("polynomial is not in the u,v subring: {0}")]
    NotInSubring(String),

    #[error("partition {lambda} is not in the fat ({m},{n}) hook")]
    NotInFatHook { lambda: String, m: usize, n: usize },

    #[error("partition nu is not admissible for lambda")]
    InadmissibleNu,

    #[error("singular parameters: {0}")]
    SingularParameters(String),

    #[error("partition does not contain the m x n rectangle")]
    RectangleNotContained,

    #[error("size constraint violated: {0}")]
    SizeConstraint(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
