use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p = {0} is not prime")]
    NonPrimeP(u64),
    #[error("polynomial is not invertible (constant coefficient is zero)")]
    NonInvertiblePolynomial,
    #[error("polynomial has no coefficients")]
    EmptyPolynomial,
    #[error("p^m = {p}^{m} exceeds the enumeration cap of 2^20")]
    SpecTooLarge { p: u32, m: usize },
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("operation is undefined for the degenerate group (p, m) = (2, 1)")]
    DegenerateCase,
    #[error("operation requires p = 2, got p = {0}")]
    WrongCharacteristic(u32),
    #[error("elements belong to different groups")]
    SpecMismatch,
    #[error("element is not in the derived subgroup")]
    NotInDerivedSubgroup,
    #[error("structure error: {0}")]
    StructureError(String),
    #[error("no b in B satisfies b = (a, b); f is not divisible by x + 1")]
    NoDihedralWitness,
    #[error("q = {0} must be odd")]
    EvenQ(i64),
    #[error("q = {0} is out of range")]
    InvalidQ(i64),
    #[error("level {n} has {points} vertices, above the cap of 2^20")]
    LevelTooLarge { n: usize, points: u128 },
    #[error("level mismatch: expected {expected}, got {got}")]
    LevelMismatch { expected: usize, got: usize },
    #[error("ray is not in the orbit of 1^infinity within {0} steps")]
    NotInOrbit(u64),
    #[error("element does not stabilize the first level")]
    NotLevelOneStabilized,
    #[error("membership screen is inconclusive at step {0}")]
    ScreenInconclusive(usize),
    #[error("permutation is not a product of rotations at vertices")]
    NotRotational,
    #[error("invalid vertex {0}")]
    InvalidVertex(String),
    #[error("parse error at column {col}: {msg}")]
    Parse { col: usize, msg: String },
    #[error("{0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(col: usize, msg: impl Into<String>) -> Self {
        Error::Parse { col, msg: msg.into() }
    }
}
