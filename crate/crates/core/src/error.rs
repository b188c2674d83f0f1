use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("malformed matrix: {0}")]
    Malformed(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("linear system over GF(2) has no solution")]
    Unsolvable,
    #[error("target lambda {target} is not congruent to 2d+h = {actual} mod 4, or exceeds 2 in absolute value")]
    LambdaMismatch { target: i64, actual: i64 },
    #[error("points {from} and {to} lie in different lattice cosets")]
    DifferentCosets { from: String, to: String },
    #[error("defect is not an integer: {0}")]
    NonIntegralDefect(String),
    #[error("component {index} has odd framing {framing}")]
    OddFraming { index: usize, framing: i64 },
    #[error("sublink is not characteristic")]
    NotCharacteristic,
    #[error("rotation angle {0}π fixes a direction")]
    DegenerateAngle(String),
    #[error(
        "circle bundle with genus {genus} and Euler class {euler} has no fiber-preserving framing"
    )]
    NoFiberFraming { genus: u32, euler: i64 },
    #[error("disk bundle p1 is undefined for Euler class 0")]
    ZeroEuler,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    /// Whether the error is a violated mathematical precondition rather than
    /// malformed input.
    pub fn is_math_precondition(&self) -> bool {
        !matches!(
            self,
            Error::NotSymmetric
                | Error::NotSquare { .. }
                | Error::Malformed(_)
                | Error::DimensionMismatch { .. }
                | Error::InvalidParameter(_)
        )
    }
}
