use thiserror::Error;

/// Errors raised by the exact-arithmetic core and the formula catalog.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole at s = {0}")]
    Pole(String),

    #[error("singular at q = 1 after cancellation; use a formula that is regular at q = 1")]
    SingularAtOne,

    #[error("no power series at s = 0: denominator vanishes there")]
    NoSeriesAtZero,

    #[error("q^({num}/{den}) is not an integer power of s with root order {root_order}")]
    FractionalPower { num: i64, den: i64, root_order: u32 },

    #[error("unsupported root order {0}: expected 1, 2 or 4")]
    RootOrder(u32),

    #[error("square root not representable: {0}; supply explicit witnesses (pointwise verification mode)")]
    SquareRoot(String),

    #[error("missing square-root witnesses")]
    MissingWitness,

    #[error("witness {index} does not square to its point")]
    BadWitness { index: usize },

    #[error("parity mismatch: {0}")]
    Parity(String),

    #[error("singular configuration at pair ({0}, {1}): {2}")]
    Singular(usize, usize, String),

    #[error("pfaffian of odd dimension {0}")]
    OddDimension(usize),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("{what} exceeds the size guard ({limit})")]
    SizeGuard { what: String, limit: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
