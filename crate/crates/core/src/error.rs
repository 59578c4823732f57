use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("group of order {order} exceeds the enumeration bound {bound}")]
    BoundExceeded { order: u128, bound: u128 },

    #[error("subgroup generator {0} is not contained in the group")]
    NotASubgroup(usize),

    #[error("action on the probe points is not faithful")]
    NotFaithful,

    #[error("permutation is not induced by any group element on the probe points")]
    NoMatch,

    #[error("coset enumeration exceeded the limit of {limit} cosets")]
    CosetLimit { limit: usize },

    #[error("coset table is not closed")]
    TableNotClosed,

    #[error("letter {letter} out of range for {generators} generators")]
    LetterOutOfRange { letter: i32, generators: usize },

    #[error("unsupported relator: {0}")]
    UnsupportedRelator(String),

    #[error("degenerate image: {0}")]
    DegenerateImage(String),

    #[error("relator fails in the image: {0}")]
    RelatorFails(String),

    #[error("element is not in the group: {0}")]
    NotInGroup(String),

    #[error("rewriting did not terminate within {0} steps")]
    RewriteLimit(usize),

    #[error("invalid specification: {0}")]
    InvalidSpec(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BoundExceeded { .. } | Error::CosetLimit { .. } | Error::RewriteLimit(_) => 4,
            Error::NotInGroup(_) | Error::NoMatch => 5,
            Error::Internal(_) => 1,
            _ => 2,
        }
    }
}
