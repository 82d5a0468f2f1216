use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group order {0}")]
    InvalidOrder(usize),

    #[error("table entry ({row}, {col}) = {value} out of range for order {order}")]
    TableOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("table is not square: row {row} has {len} entries, expected {order}")]
    TableShape { row: usize, len: usize, order: usize },

    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),

    #[error("cochain level {0} is not valid here")]
    InvalidLevel(usize),

    #[error("no two-sided identity element")]
    NoIdentity,

    #[error("element {0} has no inverse")]
    NoInverse(usize),

    #[error("element {element} out of range for group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("modulus {search} is not a common multiple of {a} and {b}")]
    ModulusIncompatible { search: u64, a: u64, b: u64 },

    #[error("cochain mismatch: {0}")]
    CochainMismatch(String),

    #[error("cochain is not normalized (nonzero at {0:?})")]
    NotNormalized(Vec<usize>),

    #[error("cochain is not a cocycle (coboundary nonzero at {0:?})")]
    NotCocycle(Vec<usize>),

    #[error("size guard exceeded for {what}: {size} > {limit}")]
    SizeGuard {
        what: String,
        size: u128,
        limit: u128,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("unknown axis `{0}`")]
    UnknownAxis(String),

    #[error("duplicate axis `{0}`")]
    DuplicateAxis(String),

    #[error("site mismatch: {0}")]
    SiteMismatch(String),

    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("subset {0:?} is not a subgroup")]
    NotSubgroup(Vec<usize>),

    #[error("ground-state label {x} is not fixed by element {element}")]
    NotFixed { x: usize, element: usize },

    #[error("supplied trivialization does not satisfy d(alpha) = omega|_H at {0:?}")]
    NotTrivializing(Vec<usize>),

    #[error("invalid group action: {0}")]
    InvalidAction(String),

    #[error("contraction is not constant: {first:?} -> {first_value}, {second:?} -> {second_value}")]
    NonConstant {
        first: Vec<usize>,
        first_value: u64,
        second: Vec<usize>,
        second_value: u64,
    },

    #[error("linear solve failed: {0}")]
    SolveFailed(String),

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
